// Copyright 2026 The freqbin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "freqbin/circuit.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace freqbin::circuit {

namespace {

struct Token {
    std::string text;
    int column = 0;  // 1-based
};

bool is_path_char(char ch) {
    auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || c == '_' || c == '\'' || c == '-' || c == '.' || c >= 0x80;
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) {
        ++b;
    }
    while (e > b && is_space(s[e - 1])) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

std::optional<int> to_int(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

std::optional<double> to_double(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Thrown inside one statement; the parser records it and moves on.
struct Failure {
    ParseError error;
};

class StatementParser {
   public:
    StatementParser(int line, std::set<std::string> &declared) : line_(line), declared_(declared) {
    }

    [[noreturn]] void fail(const Token &at, const std::string &message) const {
        throw Failure{{line_, at.column, message, at.text}};
    }

    std::vector<Token> tokenize(std::string_view text) const {
        std::vector<Token> out;
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && is_space(text[i])) {
                ++i;
            }
            if (i >= text.size()) {
                break;
            }
            std::size_t start = i;
            int depth = 0;
            while (i < text.size() && (depth > 0 || !is_space(text[i]))) {
                if (text[i] == '(') {
                    ++depth;
                } else if (text[i] == ')') {
                    --depth;
                    if (depth < 0) {
                        Token t{std::string(text.substr(start, i - start + 1)), static_cast<int>(start) + 1};
                        fail(t, "unbalanced ')'");
                    }
                }
                ++i;
            }
            Token t{std::string(text.substr(start, i - start)), static_cast<int>(start) + 1};
            if (depth > 0) {
                fail(t, "unclosed '('");
            }
            out.push_back(std::move(t));
        }
        return out;
    }

    // key=value arguments after the leading words of a statement.
    std::map<std::string, Token> arguments(const std::vector<Token> &tokens, std::size_t first,
                                           const std::set<std::string> &allowed) const {
        std::map<std::string, Token> args;
        for (std::size_t i = first; i < tokens.size(); ++i) {
            const Token &tok = tokens[i];
            auto eq = tok.text.find('=');
            if (eq == std::string::npos || eq == 0) {
                fail(tok, "expected key=value argument");
            }
            std::string key = tok.text.substr(0, eq);
            if (!allowed.contains(key)) {
                fail(tok, "unknown argument '" + key + "'");
            }
            Token value{tok.text.substr(eq + 1), tok.column + static_cast<int>(eq) + 1};
            if (value.text.empty()) {
                fail(tok, "missing value for '" + key + "'");
            }
            if (!args.emplace(key, value).second) {
                fail(tok, "duplicate argument '" + key + "'");
            }
        }
        return args;
    }

    const Token &required(const std::map<std::string, Token> &args, const std::string &key, const Token &stmt) const {
        auto it = args.find(key);
        if (it == args.end()) {
            fail(stmt, "missing '" + key + "='");
        }
        return it->second;
    }

    std::vector<Token> list(const Token &value) const {
        const std::string &s = value.text;
        if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
            fail(value, "expected a parenthesized list");
        }
        std::vector<Token> items;
        std::size_t start = 1;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i] == ',' || i == s.size() - 1) {
                std::string_view raw(s.data() + start, i - start);
                std::size_t lead = 0;
                while (lead < raw.size() && is_space(raw[lead])) {
                    ++lead;
                }
                Token item{trim(raw), value.column + static_cast<int>(start + lead)};
                if (item.text.empty()) {
                    fail(Token{s, value.column}, "empty list item");
                }
                items.push_back(std::move(item));
                start = i + 1;
            }
        }
        return items;
    }

    std::string path(const Token &tok) const {
        if (tok.text.empty()) {
            fail(tok, "expected a path");
        }
        for (char c : tok.text) {
            if (!is_path_char(c)) {
                fail(tok, "invalid character in path '" + tok.text + "'");
            }
        }
        return tok.text;
    }

    std::string declared_path(const Token &tok) const {
        std::string p = path(tok);
        if (!declared_.contains(p)) {
            fail(tok, "undeclared path '" + p + "'");
        }
        return p;
    }

    void declare(const Token &tok, const std::string &p) const {
        if (!declared_.insert(p).second) {
            fail(tok, "duplicate path declaration '" + p + "'");
        }
    }

    PathBin path_bin(const Token &tok) const {
        auto at = tok.text.find('@');
        if (at == std::string::npos) {
            fail(tok, "expected PATH@BIN");
        }
        PathBin pb;
        pb.path = path(Token{tok.text.substr(0, at), tok.column});
        auto bin = to_int(std::string_view(tok.text).substr(at + 1));
        if (!bin) {
            fail(tok, "malformed number in '" + tok.text + "'");
        }
        pb.bin = *bin;
        return pb;
    }

    double number(const Token &tok) const {
        auto v = to_double(tok.text);
        if (!v) {
            fail(tok, "malformed number '" + tok.text + "'");
        }
        return *v;
    }

    int integer(const Token &tok) const {
        auto v = to_int(tok.text);
        if (!v) {
            fail(tok, "malformed number '" + tok.text + "'");
        }
        return *v;
    }

    std::string name(const std::vector<Token> &tokens, const Token &stmt) const {
        if (tokens.size() < 2 || tokens[1].text.find('=') != std::string::npos) {
            fail(stmt, "expected a name after '" + stmt.text + "'");
        }
        return tokens[1].text;
    }

    SourceStmt source(const std::vector<Token> &tokens) const {
        const Token &kw = tokens[0];
        SourceStmt s;
        s.name = name(tokens, kw);
        auto args = arguments(tokens, 2, {"arms", "alt", "alpha"});
        auto arms = list(required(args, "arms", kw));
        auto alt = list(required(args, "alt", kw));
        if (arms.size() != 2) {
            fail(args.at("arms"), "expected two arms");
        }
        if (alt.size() != 2) {
            fail(args.at("alt"), "expected two alternate arms");
        }
        s.arm_1 = path_bin(arms[0]);
        s.arm_2 = path_bin(arms[1]);
        s.alt_1 = path_bin(alt[0]);
        s.alt_2 = path_bin(alt[1]);
        s.alpha = args.contains("alpha") ? number(args.at("alpha")) : std::numbers::pi / 4.0;
        declare(arms[0], s.arm_1.path);
        declare(arms[1], s.arm_2.path);
        declare(alt[0], s.alt_1.path);
        declare(alt[1], s.alt_2.path);
        return s;
    }

    AomStmt aom(const std::vector<Token> &tokens) const {
        const Token &kw = tokens[0];
        AomStmt a;
        a.name = name(tokens, kw);
        auto args = arguments(tokens, 2, {"in", "out", "shift", "t", "convention"});
        auto in = list(required(args, "in", kw));
        if (in.size() != 2) {
            fail(args.at("in"), "expected two inputs");
        }
        auto out = list(required(args, "out", kw));
        if (out.size() != 2) {
            fail(args.at("out"), "expected two outputs");
        }
        a.in_a = path_bin(in[0]);
        a.in_b = path_bin(in[1]);
        declared_path(Token{a.in_a.path, in[0].column});
        declared_path(Token{a.in_b.path, in[1].column});
        a.out_x = path(out[0]);
        a.out_y = path(out[1]);
        a.shift = args.contains("shift") ? integer(args.at("shift")) : 1;
        a.t = args.contains("t") ? number(args.at("t")) : std::numbers::sqrt2 / 2.0;
        if (args.contains("convention")) {
            const Token &c = args.at("convention");
            if (c.text == "unitary") {
                a.convention = Convention::Unitary;
            } else if (c.text == "paper") {
                a.convention = Convention::PaperLiteral;
            } else {
                fail(c, "convention must be 'unitary' or 'paper'");
            }
        }
        declare(out[0], a.out_x);
        declare(out[1], a.out_y);
        return a;
    }

    FilterStmt filter(const std::vector<Token> &tokens) const {
        const Token &kw = tokens[0];
        FilterStmt f;
        f.name = name(tokens, kw);
        auto args = arguments(tokens, 2, {"path", "pass", "sigma"});
        f.path = declared_path(required(args, "path", kw));
        f.pass = integer(required(args, "pass", kw));
        f.sigma = number(required(args, "sigma", kw));
        return f;
    }

    CheckStmt check(const std::vector<Token> &tokens) const {
        const Token &kw = tokens[0];
        if (tokens.size() < 2 || tokens[1].text != "bandwidth") {
            fail(tokens.size() < 2 ? kw : tokens[1], "expected 'check bandwidth'");
        }
        auto args = arguments(tokens, 2, {"pump"});
        return CheckStmt{number(required(args, "pump", kw))};
    }

    ReportStmt report(const std::vector<Token> &tokens) const {
        const Token &kw = tokens[0];
        if (tokens.size() < 2) {
            fail(kw, "expected report kind: entropy, ghz or outcomes");
        }
        const Token &kind = tokens[1];
        ReportStmt r;
        if (kind.text == "entropy") {
            r.kind = ReportKind::Entropy;
            auto args = arguments(tokens, 2, {"split"});
            for (const auto &item : list(required(args, "split", kw))) {
                r.paths.push_back(declared_path(item));
            }
        } else if (kind.text == "outcomes") {
            r.kind = ReportKind::Outcomes;
            auto args = arguments(tokens, 2, {"paths"});
            for (const auto &item : list(required(args, "paths", kw))) {
                r.paths.push_back(declared_path(item));
            }
        } else if (kind.text == "ghz") {
            r.kind = ReportKind::Ghz;
            auto args = arguments(tokens, 2, {"a", "b"});
            for (const auto &item : list(required(args, "a", kw))) {
                r.a.push_back(path_bin(item));
                declared_path(Token{r.a.back().path, item.column});
            }
            for (const auto &item : list(required(args, "b", kw))) {
                r.b.push_back(path_bin(item));
                declared_path(Token{r.b.back().path, item.column});
            }
        } else {
            fail(kind, "unknown report kind '" + kind.text + "'");
        }
        return r;
    }

    // Character-level scan of `count(P,...)==N and ...` starting at `pos`.
    HeraldStmt herald(std::string_view text, std::size_t pos) const {
        HeraldStmt h;
        std::set<std::string> used;
        auto skip = [&] {
            while (pos < text.size() && is_space(text[pos])) {
                ++pos;
            }
        };
        auto word_at = [&](std::size_t p) {
            std::size_t e = p;
            while (e < text.size() && !is_space(text[e])) {
                ++e;
            }
            if (e == p && p < text.size()) {
                ++e;
            }
            return Token{std::string(text.substr(p, e - p)), static_cast<int>(p) + 1};
        };
        const std::size_t expr_start = [&] {
            std::size_t p = pos;
            while (p < text.size() && is_space(text[p])) {
                ++p;
            }
            return p;
        }();
        // Errors at the end of the line point at the whole herald expression.
        auto at_or_end = [&](std::size_t p) {
            Token t = word_at(p);
            if (t.text.empty()) {
                std::size_t b = std::min(expr_start, text.size() > 0 ? text.size() - 1 : 0);
                t = Token{std::string(text.substr(b)), static_cast<int>(b) + 1};
            }
            return t;
        };
        auto expect = [&](std::string_view lit, const std::string &message) {
            skip();
            if (text.substr(pos, lit.size()) != lit) {
                fail(at_or_end(pos), message);
            }
            pos += lit.size();
        };
        while (true) {
            expect("count", "expected count(...)");
            expect("(", "expected '(' after count");
            CountClause clause;
            while (true) {
                skip();
                std::size_t start = pos;
                while (pos < text.size() && is_path_char(text[pos])) {
                    ++pos;
                }
                Token tok{std::string(text.substr(start, pos - start)), static_cast<int>(start) + 1};
                if (tok.text.empty()) {
                    fail(at_or_end(start), "expected a path");
                }
                std::string p = declared_path(tok);
                if (!used.insert(p).second) {
                    fail(tok, "herald clauses overlap on path '" + p + "'");
                }
                clause.paths.push_back(p);
                skip();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                break;
            }
            expect(")", "expected ')' closing count");
            expect("==", "expected '=='");
            skip();
            std::size_t start = pos;
            while (pos < text.size() && !is_space(text[pos])) {
                ++pos;
            }
            Token num{std::string(text.substr(start, pos - start)), static_cast<int>(start) + 1};
            if (num.text.empty()) {
                fail(at_or_end(start), "expected a photon count");
            }
            clause.count = integer(num);
            if (clause.count < 0) {
                fail(num, "photon count must be non-negative");
            }
            h.clauses.push_back(std::move(clause));
            skip();
            if (pos >= text.size()) {
                break;
            }
            Token next = word_at(pos);
            if (next.text != "and") {
                fail(next, "expected 'and' between herald clauses");
            }
            pos += 3;
        }
        return h;
    }

   private:
    int line_;
    std::set<std::string> &declared_;
};

}  // namespace

std::string ParseError::str() const {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message + " (at '" + token +
           "')";
}

ParseResult parse(std::string_view text) {
    ParseResult result;
    CircuitAst ast;
    std::set<std::string> declared;
    bool herald_seen = false;
    int first_report_line = 0;

    int line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(begin, end - begin);
        ++line_no;
        begin = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        while (!line.empty() && (line.back() == '\r' || is_space(line.back()))) {
            line.remove_suffix(1);
        }

        // Declarations from a failed statement are rolled back.
        std::set<std::string> scratch = declared;
        StatementParser sp(line_no, scratch);
        try {
            auto tokens = sp.tokenize(line);
            if (tokens.empty()) {
                if (end == text.size()) {
                    break;
                }
                continue;
            }
            const Token &kw = tokens[0];
            Statement stmt;
            if (kw.text == "source") {
                stmt = sp.source(tokens);
            } else if (kw.text == "aom") {
                stmt = sp.aom(tokens);
            } else if (kw.text == "filter") {
                stmt = sp.filter(tokens);
            } else if (kw.text == "herald") {
                if (herald_seen) {
                    sp.fail(kw, "only one herald statement is allowed");
                }
                if (first_report_line != 0) {
                    sp.fail(kw, "herald must precede report statements (first report on line " +
                                    std::to_string(first_report_line) + ")");
                }
                stmt = sp.herald(line, static_cast<std::size_t>(kw.column - 1) + kw.text.size());
                herald_seen = true;
            } else if (kw.text == "check") {
                stmt = sp.check(tokens);
            } else if (kw.text == "report") {
                stmt = sp.report(tokens);
                if (first_report_line == 0) {
                    first_report_line = line_no;
                }
            } else {
                sp.fail(kw, "unknown statement '" + kw.text + "'");
            }
            declared = std::move(scratch);
            ast.statements.push_back({std::move(stmt), line_no});
        } catch (const Failure &f) {
            result.errors.push_back(f.error);
        }
        if (end == text.size()) {
            break;
        }
    }
    if (result.errors.empty()) {
        result.ast = std::move(ast);
    }
    return result;
}

namespace {

std::string join(const std::vector<std::string> &items) {
    std::string out;
    for (const auto &s : items) {
        out += (out.empty() ? "" : ",") + s;
    }
    return out;
}

std::string join(const std::vector<PathBin> &items) {
    std::vector<std::string> parts;
    for (const auto &pb : items) {
        parts.push_back(pb.path + "@" + std::to_string(pb.bin));
    }
    return join(parts);
}

}  // namespace

std::string format(const CircuitAst &ast) {
    std::ostringstream out;
    for (const auto &located : ast.statements) {
        std::visit(
            [&](const auto &s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, SourceStmt>) {
                    out << "source " << s.name << " arms=(" << join(std::vector<PathBin>{s.arm_1, s.arm_2})
                        << ") alt=(" << join(std::vector<PathBin>{s.alt_1, s.alt_2}) << ") alpha=" << fmt_double(s.alpha);
                } else if constexpr (std::is_same_v<T, AomStmt>) {
                    out << "aom " << s.name << " in=(" << join(std::vector<PathBin>{s.in_a, s.in_b}) << ") out=("
                        << s.out_x << "," << s.out_y << ") shift=" << s.shift << " t=" << fmt_double(s.t)
                        << " convention=" << convention_name(s.convention);
                } else if constexpr (std::is_same_v<T, FilterStmt>) {
                    out << "filter " << s.name << " path=" << s.path << " pass=" << s.pass
                        << " sigma=" << fmt_double(s.sigma);
                } else if constexpr (std::is_same_v<T, HeraldStmt>) {
                    out << "herald";
                    for (std::size_t i = 0; i < s.clauses.size(); ++i) {
                        out << (i == 0 ? " " : " and ") << "count(" << join(s.clauses[i].paths)
                            << ")==" << s.clauses[i].count;
                    }
                } else if constexpr (std::is_same_v<T, CheckStmt>) {
                    out << "check bandwidth pump=" << fmt_double(s.pump);
                } else {
                    switch (s.kind) {
                        case ReportKind::Entropy:
                            out << "report entropy split=(" << join(s.paths) << ")";
                            break;
                        case ReportKind::Outcomes:
                            out << "report outcomes paths=(" << join(s.paths) << ")";
                            break;
                        case ReportKind::Ghz:
                            out << "report ghz a=(" << join(s.a) << ") b=(" << join(s.b) << ")";
                            break;
                    }
                }
            },
            located.stmt);
        out << "\n";
    }
    return out.str();
}

CompileError::CompileError(int line, const std::string &message)
    : Error(ErrorCode::CompileError, "line " + std::to_string(line) + ": " + message), line_(line) {
}

namespace {

FockKet branch(const std::vector<PathBin> &items) {
    FockKet k;
    for (const auto &pb : items) {
        k.add(ModeLabel(pb.path, pb.bin));
    }
    return k;
}

}  // namespace

Pipeline compile(const CircuitAst &ast) {
    Pipeline p;
    std::set<std::string> declared;
    auto declare = [&](int line, const std::string &path, const std::string &what) {
        if (!declared.insert(path).second) {
            throw CompileError(line, what + " reuses path '" + path + "'");
        }
    };
    auto require_declared = [&](int line, const std::string &path, const std::string &what) {
        if (!declared.contains(path)) {
            throw CompileError(line, what + " over undeclared path '" + path + "'");
        }
    };

    for (const auto &[stmt, line] : ast.statements) {
        try {
            if (const auto *s = std::get_if<SourceStmt>(&stmt)) {
                SourceSpec spec{s->name,
                                {s->arm_1.path, s->arm_1.bin},
                                {s->arm_2.path, s->arm_2.bin},
                                {s->alt_1.path, s->alt_1.bin},
                                {s->alt_2.path, s->alt_2.bin},
                                s->alpha};
                validate(spec);
                for (const auto *pb : {&s->arm_1, &s->arm_2, &s->alt_1, &s->alt_2}) {
                    declare(line, pb->path, "source " + s->name);
                }
                p.sources.push_back(spec);
            } else if (const auto *a = std::get_if<AomStmt>(&stmt)) {
                if (a->in_a.bin != a->in_b.bin + a->shift) {
                    throw CompileError(line, "aom " + a->name + ": frequency bins incompatible with shift (" +
                                                 std::to_string(a->in_a.bin) + " != " + std::to_string(a->in_b.bin) +
                                                 " + " + std::to_string(a->shift) + ")");
                }
                require_declared(line, a->in_a.path, "aom " + a->name);
                require_declared(line, a->in_b.path, "aom " + a->name);
                AomSpec spec{a->name,
                             {a->in_a.path, a->in_a.bin},
                             {a->in_b.path, a->in_b.bin},
                             a->out_x,
                             a->out_y,
                             a->shift,
                             a->t,
                             a->convention};
                validate(spec);
                declare(line, a->out_x, "aom " + a->name);
                declare(line, a->out_y, "aom " + a->name);
                p.steps.emplace_back(spec);
            } else if (const auto *f = std::get_if<FilterStmt>(&stmt)) {
                require_declared(line, f->path, "filter " + f->name);
                if (!(f->sigma > 0.0)) {
                    throw CompileError(line, "filter " + f->name + ": sigma must be positive");
                }
                p.steps.emplace_back(FilterSpec{f->name, f->path, f->pass, f->sigma});
            } else if (const auto *h = std::get_if<HeraldStmt>(&stmt)) {
                if (p.herald) {
                    throw CompileError(line, "only one herald statement is allowed");
                }
                HeraldRule rule;
                for (const auto &c : h->clauses) {
                    HeraldClause clause;
                    for (const auto &path : c.paths) {
                        require_declared(line, path, "herald");
                        clause.paths.insert(path);
                    }
                    clause.required_count = c.count;
                    rule.clauses.push_back(std::move(clause));
                }
                validate(rule);
                p.herald = std::move(rule);
            } else if (const auto *c = std::get_if<CheckStmt>(&stmt)) {
                if (!(c->pump > 0.0)) {
                    throw CompileError(line, "pump bandwidth must be positive");
                }
                p.sigma_pump = c->pump;
            } else if (const auto *r = std::get_if<ReportStmt>(&stmt)) {
                ReportSpec spec;
                spec.kind = r->kind;
                for (const auto &path : r->paths) {
                    require_declared(line, path, "report");
                    spec.paths.insert(path);
                }
                for (const auto &pb : r->a) {
                    require_declared(line, pb.path, "report");
                }
                for (const auto &pb : r->b) {
                    require_declared(line, pb.path, "report");
                }
                if (r->kind == ReportKind::Ghz) {
                    spec.branch_a = branch(r->a);
                    spec.branch_b = branch(r->b);
                    if (spec.branch_a == spec.branch_b) {
                        throw CompileError(line, "ghz report branches must differ");
                    }
                }
                p.reports.push_back(std::move(spec));
            }
        } catch (const CompileError &) {
            throw;
        } catch (const Error &e) {
            throw CompileError(line, e.what());
        }
    }
    return p;
}

}  // namespace freqbin::circuit
