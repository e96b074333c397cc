// Copyright 2026 The qstab Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qstab::cli {

/// Parsed command line. Paths left empty are unused; output goes to stdout when `out` is empty.
struct RunConfig {
    std::string verb;
    std::string state;
    std::string code;
    std::string normal_form;
    std::string channel_report;
    std::string parts;
    std::string B;
    std::string C;
    std::string out;
    std::string emit_gates;
    std::string emit_choi;
    bool bounds = false;
    bool verify = false;
    uint64_t seed = 1;
    int64_t D = 2;
    size_t n = 1;
    size_t k = 0;
    size_t scramble = 0;
};

/// Exit status: 0 success, 1 domain error or oracle mismatch, 2 usage or I/O error.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses argv and calls run.
int main_with_args(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qstab::cli
