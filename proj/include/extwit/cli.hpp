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

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "extwit/maps.hpp"
#include "extwit/upb.hpp"
#include "extwit/witness.hpp"

namespace extwit::cli {

enum class Command { State, PptCheck, Detect, Sweep, VerifyIdentities, Positivity, Unextendability };
enum class MapFamily { Choi1, Choi2, Generalized, Transpose };
enum class StateSource { Tiles, Pyramid, File };
enum class AutomorphismKind { Inner, Outer };

struct Automorphism {
  AutomorphismKind kind = AutomorphismKind::Inner;
  // Exactly one factor source is set.
  std::optional<double> theta;
  std::vector<double> diagonal;
  std::optional<std::filesystem::path> matrix_file;
  bool clamp = false;
};

struct RunConfig {
  Command command = Command::State;
  MapFamily map_family = MapFamily::Choi1;
  std::optional<std::array<double, 3>> abc;
  std::optional<double> t;
  std::optional<Automorphism> automorphism;
  StateSource state_source = StateSource::Tiles;
  std::optional<std::filesystem::path> state_file;
  std::size_t dA = 3;
  std::size_t dB = 3;
  SweepConfig sweep = full_period_sweep();
  std::uint64_t seed = 0;
  int restarts = 50;
  double threshold = 0.01;
  std::optional<std::filesystem::path> output_path;
  std::optional<std::filesystem::path> basis_output_path;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;

/// Parses `extwit <command> [options]` (args excludes the program name).
/// Throws Error(ConfigError) on malformed input.
RunConfig parse_args(const std::vector<std::string>& args);

MapSpec build_map(const RunConfig& cfg);
DensityOperator build_state(const RunConfig& cfg);
ProductBasisSet build_basis(const RunConfig& cfg);

/// Executes a validated configuration; returns the exit status.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_args + run with diagnostics on `err`; the process entry point.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extwit::cli
