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
 * @file demo.hpp
 * @brief Canned walkthroughs of the two bundled worked examples.
 *
 * The transcripts print every conjugator and intermediate matrix and are
 * pinned byte-exactly by golden-file tests, so they double as regression
 * anchors for the construction itself.
 */

#include <string>

namespace fillmore {

/// Names: "paper-example-1" (two-step over Q, pivot (3,4)) and
/// "paper-example-2" (integer pipeline, pivot (4,2)).
/// Unknown names raise ParseError.
std::string demo_transcript(const std::string& name);

} // namespace fillmore
