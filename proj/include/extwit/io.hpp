// Copyright 2026 The extwit Authors
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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "extwit/linalg.hpp"
#include "extwit/witness.hpp"

// Text formats:
//   curve CSV   header "theta,lambda_min", one "%.17g,%.17g" record per line, LF.
//   matrix file "rows cols" then one row per line of whitespace separated
//               complex literals "re+imj" (a bare real is accepted on input).
namespace extwit::io {

/// Shortest round-trip-safe text for a double (17 significant digits).
std::string format_double(double v);
std::string format_complex(cplx z);

double parse_double(std::string_view text);
cplx parse_complex(std::string_view text);

/// Radians, either a plain number or a multiple of pi: "pi", "-pi/2", "3pi/2",
/// "0.25*pi", "2*pi/3".
double parse_angle(std::string_view text);

void write_curve_csv(std::ostream& out, const SweepCurve& curve);
SweepCurve read_curve_csv(std::istream& in);

void write_matrix(std::ostream& out, const ComplexMatrix& m);
ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::filesystem::path& path);

}  // namespace extwit::io
