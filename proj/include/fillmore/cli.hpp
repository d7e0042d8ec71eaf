/*
 * Copyright 2026 The fillmore authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front-end: solve, verify, gen, demo.
 *
 * Exit codes: 0 verified success, 1 precondition violation, 2 parse or
 * usage error, 3 verification failure or internal error.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace fillmore::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitVerification = 3;

/// Runs one CLI invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fillmore::cli
