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

#ifndef FREQBIN_TOOLS_CLI_H
#define FREQBIN_TOOLS_CLI_H

#include <iosfwd>
#include <optional>
#include <string>

#include "freqbin/element_op.h"
#include "freqbin/pipeline.h"
#include "json.hpp"

namespace freqbin::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
    kOk = 0,
    kRuntimeError = 1,
    kUsageError = 2,
};

struct RunOptions {
    std::string file;
    std::optional<std::string> json_path;  // "-" writes to standard output
    std::optional<Convention> convention;
    bool pretty = false;
};

struct DemoOptions {
    std::string name;
    double alpha = 0.0;
    std::optional<Convention> convention;
    std::optional<std::string> json_path;
    bool pretty = false;
};

struct SweepOptions {
    std::string name;
    double alpha_from = 0.0;
    double alpha_to = 0.0;
    int steps = 0;
    std::optional<std::string> csv_path;  // standard output when absent
    std::optional<Convention> convention;
};

/// Floats in machine output carry 12 significant digits.
double round12(double v);
std::string format12(double v);

/// Versioned machine-readable report of one pipeline execution.
nlohmann::json run_report(const std::string &circuit, const Pipeline &pipeline, const PipelineRun &run);

int cmd_run(const RunOptions &opts, std::ostream &out, std::ostream &err);
int cmd_demo(const DemoOptions &opts, std::ostream &out, std::ostream &err);
int cmd_sweep(const SweepOptions &opts, std::ostream &out, std::ostream &err);

/// Entry point shared by the executable and the tests.
int main_with_args(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace freqbin::cli

#endif
