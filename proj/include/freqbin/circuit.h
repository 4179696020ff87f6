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

#ifndef FREQBIN_CIRCUIT_H
#define FREQBIN_CIRCUIT_H

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "freqbin/error.h"
#include "freqbin/pipeline.h"

namespace freqbin::circuit {

// Line-oriented circuit description:
//
//   source NAME arms=(P@B,P@B) alt=(P@B,P@B) [alpha=FLOAT]
//   aom NAME in=(P@B,P@B) out=(P,P) [shift=INT] [t=FLOAT] [convention=unitary|paper]
//   filter NAME path=P pass=INT sigma=FLOAT
//   herald count(P,...)==INT [and count(P,...)==INT ...]
//   check bandwidth pump=FLOAT
//   report entropy split=(P,...)
//   report ghz a=(P@B,...) b=(P@B,...)
//   report outcomes paths=(P,...)
//
// '#' starts a comment. Paths are declared by sources and by AOM outputs and
// must be declared before they are used.

struct PathBin {
    std::string path;
    int bin = 0;
    bool operator==(const PathBin &) const = default;
};

struct SourceStmt {
    std::string name;
    PathBin arm_1, arm_2, alt_1, alt_2;
    double alpha = 0.0;
    bool operator==(const SourceStmt &) const = default;
};

struct AomStmt {
    std::string name;
    PathBin in_a, in_b;
    std::string out_x, out_y;
    int shift = 1;
    double t = 0.0;
    Convention convention = Convention::Unitary;
    bool operator==(const AomStmt &) const = default;
};

struct FilterStmt {
    std::string name;
    std::string path;
    int pass = 0;
    double sigma = 0.0;
    bool operator==(const FilterStmt &) const = default;
};

struct CountClause {
    std::vector<std::string> paths;
    int count = 0;
    bool operator==(const CountClause &) const = default;
};

struct HeraldStmt {
    std::vector<CountClause> clauses;
    bool operator==(const HeraldStmt &) const = default;
};

struct CheckStmt {
    double pump = 0.0;
    bool operator==(const CheckStmt &) const = default;
};

struct ReportStmt {
    ReportKind kind = ReportKind::Entropy;
    std::vector<std::string> paths;
    std::vector<PathBin> a, b;
    bool operator==(const ReportStmt &) const = default;
};

using Statement = std::variant<SourceStmt, AomStmt, FilterStmt, HeraldStmt, CheckStmt, ReportStmt>;

struct LocatedStatement {
    Statement stmt;
    int line = 0;

    // Structural: source positions do not take part.
    bool operator==(const LocatedStatement &o) const { return stmt == o.stmt; }
};

struct CircuitAst {
    std::vector<LocatedStatement> statements;
    bool operator==(const CircuitAst &) const = default;
};

/// 1-based position of the offending token.
struct ParseError {
    int line = 0;
    int column = 0;
    std::string message;
    std::string token;

    std::string str() const;
};

struct ParseResult {
    std::optional<CircuitAst> ast;
    std::vector<ParseError> errors;

    bool ok() const { return errors.empty(); }
};

/// Never throws; a malformed input yields at least one error.
ParseResult parse(std::string_view text);

/// Canonical text; parse(format(ast)) is structurally equal to ast.
std::string format(const CircuitAst &ast);

class CompileError : public Error {
   public:
    CompileError(int line, const std::string &message);
    int line() const noexcept { return line_; }

   private:
    int line_;
};

/// Semantic checks that need element knowledge (AOM bins vs shift, output
/// path reuse, herald paths) and lowering to a Pipeline.
Pipeline compile(const CircuitAst &ast);

}  // namespace freqbin::circuit

#endif
