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

#include "extwit/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "extwit/error.hpp"

namespace extwit::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(std::string_view what, std::string_view text) {
  throw Error(ErrorKind::ParseError, std::string(what) + ": '" + std::string(text) + "'");
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(cplx z) {
  std::string s = format_double(z.real());
  const std::string im = format_double(z.imag());
  if (im.front() != '-') s += '+';
  return s + im + 'j';
}

double parse_double(std::string_view text) {
  const auto t = trim(text);
  if (t.empty()) parse_fail("empty number", text);
  // from_chars rejects a leading '+'.
  const auto body = t.front() == '+' ? t.substr(1) : t;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc{} || ptr != body.data() + body.size()) parse_fail("invalid number", text);
  return v;
}

cplx parse_complex(std::string_view text) {
  const auto t = trim(text);
  if (t.empty()) parse_fail("empty complex literal", text);
  if (t.back() != 'j' && t.back() != 'i') return parse_double(t);
  const auto body = t.substr(0, t.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    const auto im = body.empty() || body == "+" ? 1.0 : body == "-" ? -1.0 : parse_double(body);
    return {0.0, im};
  }
  const auto im_text = body.substr(split);
  const double im = im_text == "+" ? 1.0 : im_text == "-" ? -1.0 : parse_double(im_text);
  return {parse_double(body.substr(0, split)), im};
}

double parse_angle(std::string_view text) {
  auto t = trim(text);
  const auto pos = t.find("pi");
  if (pos == std::string_view::npos) return parse_double(t);

  double sign = 1.0;
  auto coef_text = t.substr(0, pos);
  if (!coef_text.empty() && (coef_text.front() == '-' || coef_text.front() == '+')) {
    if (coef_text.front() == '-') sign = -1.0;
    coef_text.remove_prefix(1);
  }
  if (!coef_text.empty() && coef_text.back() == '*') coef_text.remove_suffix(1);
  const double coef = coef_text.empty() ? 1.0 : parse_double(coef_text);

  auto rest = trim(t.substr(pos + 2));
  double denom = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') parse_fail("invalid angle", text);
    denom = parse_double(rest.substr(1));
    if (denom == 0.0) parse_fail("zero denominator in angle", text);
  }
  return sign * coef * std::numbers::pi / denom;
}

void write_curve_csv(std::ostream& out, const SweepCurve& curve) {
  out << "theta,lambda_min\n";
  for (const auto& p : curve.records) {
    out << format_double(p.theta) << ',' << format_double(p.lambda_min) << '\n';
  }
}

SweepCurve read_curve_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "theta,lambda_min") {
    throw Error(ErrorKind::ParseError, "missing 'theta,lambda_min' header");
  }
  SweepCurve curve;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) parse_fail("malformed CSV record", line);
    const std::string_view view(line);
    curve.records.push_back({parse_double(view.substr(0, comma)), parse_double(view.substr(comma + 1))});
  }
  return curve;
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_complex(m(i, j));
    }
    out << '\n';
  }
}

ComplexMatrix read_matrix(std::istream& in) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string header;
  if (!std::getline(in, header)) throw Error(ErrorKind::ParseError, "missing matrix header");
  {
    std::istringstream hs(header);
    if (!(hs >> rows >> cols) || rows == 0 || cols == 0) parse_fail("invalid matrix header", header);
  }
  ComplexMatrix m(rows, cols);
  std::string line;
  std::size_t i = 0;
  while (i < rows && std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    std::size_t j = 0;
    while (ls >> tok) {
      if (j == cols) parse_fail("too many entries in row", line);
      m(i, j++) = parse_complex(tok);
    }
    if (j != cols) parse_fail("too few entries in row", line);
    ++i;
  }
  if (i != rows) {
    throw Error(ErrorKind::ParseError,
                "expected " + std::to_string(rows) + " rows, found " + std::to_string(i));
  }
  return m;
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  return read_matrix(in);
}

}  // namespace extwit::io
