// Copyright 2026 The qinvariant Authors
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

#ifndef QINV_CLI_H
#define QINV_CLI_H

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qinv/export.h"

namespace qinv::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

/// Default output directory, overridden by the --out flag.
inline constexpr const char *kOutputDirEnv = "QINV_OUTPUT_DIR";
inline constexpr const char *kDefaultOutputDir = "qinv-out";

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view data);

/// Writes output files into one directory and records their digests for the manifest.
class OutputSink {
   public:
    explicit OutputSink(std::filesystem::path dir);

    const std::filesystem::path &dir() const {
        return dir_;
    }
    /// Writes `content` to dir/name and returns the full path.
    std::filesystem::path write(const std::string &name, const std::string &content);
    /// manifest.json listing every file written so far, in write order.
    std::filesystem::path write_manifest(const std::string &command, const Json &config, uint64_t seed);

   private:
    struct Entry {
        std::string name;
        std::string sha256;
        uint64_t bytes;
    };
    std::filesystem::path dir_;
    std::vector<Entry> entries_;
};

/// Full oracle suite behind the `check` subcommand.
struct CheckOptions {
    /// Upper n for group enumeration, isomorphism and transitivity (at most 4).
    int n_max = 4;
    /// Upper n for SWAP enumeration.
    int swap_n_max = 6;
    /// Upper n for dimension tables against constructions.
    int dimension_n_max = 10;
    /// Upper n for the commutant irreducibility check.
    int commutant_n_max = 6;
};

struct CheckResult {
    Json report;
    /// One "PASS name: detail" / "FAIL name: detail" line per item.
    std::vector<std::string> lines;
    bool passed = true;
};

CheckResult run_checks(const CheckOptions &opts);

/// Entry point of the qinv tool. Returns the process exit code.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qinv::cli

#endif
