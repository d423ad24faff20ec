// Copyright 2026 The flipiet authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "flipiet/billiard.hpp"
#include "flipiet/tracer.hpp"

namespace flipiet {

// Deterministic SVG renderings; the only place where floating point output is
// produced.
std::string render_svg(const CombinatorialOrbit& orbit);
std::string render_svg(const GeometricTrace& trace);

}  // namespace flipiet
