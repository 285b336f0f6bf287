#pragma once

// Command-line pipeline: one RunConfig per invocation, dispatched by run().

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "povm/catalog.hpp"
#include "povm/dynamics.hpp"

namespace povm {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

struct RunConfig {
  /// generate, validate, entropy-map, minimize, classify, certify, info-power,
  /// ngon-sweep, dynent, bifurcation, table5.
  std::string subcommand;
  /// Family name, "ngon:7", "rectangle:0.8" or "all".
  std::string family = "cube";
  /// POVM JSON file; overrides `family` when set.
  std::string input;
  /// Output path; empty writes to standard output.
  std::string out;
  std::size_t grid = 200000;
  int precision_bits = 200;
  /// json, csv or table; empty selects the subcommand default.
  std::string format;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  /// min or max (minimize).
  std::string mode = "min";
  /// Bloch point (classify).
  std::optional<std::array<double, 3>> point;
  /// "axis=z,angle=0.785" or "axis=1,1,0,angle=0.5" (dynent).
  std::string rotation = "axis=z,angle=0";
  /// Longest enumerated sequence for the empirical entropy rate (dynent).
  int steps = 4;
  /// "3..64" (ngon-sweep).
  std::string range = "3..64";
  /// "shannon", "renyi:A" or "tsallis:A" (certify).
  std::string kernel = "shannon";
  /// Divide entropies by ln 2 in table output.
  bool bits = false;
  /// Omit wall-clock fields so repeated runs are byte-identical.
  bool deterministic = false;
};

/// Executes the subcommand. Exit 0 on success, 1 when a certificate or check
/// fails, 2 on usage errors; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int run(const RunConfig& config);

/// Families selected by a name, "all" expanding to the digon, the 5-gon and
/// the seven polyhedra.
std::vector<HsPovm> resolve_families(const std::string& selector);
EntropyKernel parse_kernel(const std::string& spec);
UnitaryAsRotation parse_rotation(const std::string& spec);
std::pair<int, int> parse_range(const std::string& spec);

/// printf-style "%.17g".
std::string format_g17(double x);

}  // namespace povm
