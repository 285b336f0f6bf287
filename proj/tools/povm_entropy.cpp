// povm_entropy: command-line front end for the povm_entropy library.

#include <array>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "povm/cli.hpp"

namespace {

void add_common(CLI::App* sub, povm::RunConfig& c, bool grid) {
  sub->add_option("--family,-f", c.family, "family name, ngon:N, rectangle:ALPHA or all")->capture_default_str();
  sub->add_option("--input,-i", c.input, "POVM JSON file (overrides --family)");
  sub->add_option("--out,-o", c.out, "output path (default: standard output)");
  sub->add_option("--threads", c.threads, "worker threads (default: POVM_ENTROPY_THREADS or all cores)");
  sub->add_flag("--deterministic", c.deterministic, "omit wall-clock fields");
  if (grid) sub->add_option("--grid,-n", c.grid, "lattice points on the sphere")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy of measurement for highly symmetric qubit POVMs"};
  app.require_subcommand(1);
  povm::RunConfig c;
  std::string ngon_sweep;
  std::string point;

  auto* gen = app.add_subcommand("generate", "write a POVM as JSON");
  add_common(gen, c, false);

  auto* val = app.add_subcommand("validate", "POVM, frame and design checks");
  add_common(val, c, false);
  val->add_option("--seed", c.seed, "seed for the sampled design directions")->capture_default_str();

  auto* map = app.add_subcommand("entropy-map", "CSV of H and ln k - H on a Fibonacci lattice");
  add_common(map, c, true);

  auto* mini = app.add_subcommand("minimize", "global minima (or maxima) of H");
  add_common(mini, c, true);
  mini->add_option("--report", c.out, "output path for the extrema JSON");
  mini->add_option("--mode", c.mode, "min or max")->capture_default_str();

  auto* cls = app.add_subcommand("classify", "classify a point on a rotation axis");
  add_common(cls, c, false);
  cls->add_option("--point,-p", point, "x,y,z")->required();

  auto* cert = app.add_subcommand("certify", "Hermite lower-bound certificate of the minimum");
  add_common(cert, c, false);
  cert->add_option("--precision", c.precision_bits, "starting interval precision in bits")->capture_default_str();
  cert->add_option("--kernel", c.kernel, "shannon, renyi:A or tsallis:A")->capture_default_str();

  auto* info = app.add_subcommand("info-power", "informational power and related quantities");
  add_common(info, c, true);
  info->add_option("--format", c.format, "json, csv or table");
  info->add_flag("--bits", c.bits, "display entropies in bits");
  info->add_option("--ngon-sweep", ngon_sweep, "n-gon range such as 3..64");

  auto* sweep = app.add_subcommand("ngon-sweep", "informational power of regular n-gons");
  sweep->add_option("--range", c.range, "lo..hi")->capture_default_str();
  sweep->add_option("--out,-o", c.out, "output path");
  sweep->add_option("--format", c.format, "csv, json or table");
  sweep->add_flag("--bits", c.bits, "display entropies in bits");

  auto* dyn = app.add_subcommand("dynent", "dynamical entropy under a rotation");
  add_common(dyn, c, false);
  dyn->add_option("--rotation,-r", c.rotation, "axis=z,angle=0.785 or axis=1,1,0,angle=0.5")->capture_default_str();
  dyn->add_option("--steps", c.steps, "longest sequence for the empirical rate")->capture_default_str();

  auto* bif = app.add_subcommand("bifurcation", "rectangle bifurcation threshold");
  bif->add_option("--out,-o", c.out, "output path");
  bif->add_option("--threads", c.threads, "worker threads");

  auto* t5 = app.add_subcommand("table5", "informational power of all families against the printed values");
  t5->add_option("--format", c.format, "table, json or csv");
  t5->add_option("--out,-o", c.out, "output path");
  t5->add_flag("--bits", c.bits, "display entropies in bits");
  t5->add_flag("--deterministic", c.deterministic, "omit wall-clock fields");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? povm::kExitOk : povm::kExitUsage;
  }

  c.subcommand = app.get_subcommands().front()->get_name();
  if (c.subcommand == "info-power" && !ngon_sweep.empty()) {
    c.subcommand = "ngon-sweep";
    c.range = ngon_sweep;
  }
  if (!point.empty()) {
    std::array<double, 3> p{};
    std::stringstream ss(point);
    std::string tok;
    int i = 0;
    try {
      while (std::getline(ss, tok, ',')) {
        if (i >= 3) throw std::invalid_argument("too many coordinates");
        p[static_cast<std::size_t>(i++)] = std::stod(tok);
      }
    } catch (const std::exception&) {
      i = -1;
    }
    if (i != 3) {
      std::cerr << "error: --point needs three comma-separated numbers\n";
      return povm::kExitUsage;
    }
    c.point = p;
  }
  return povm::run(c);
}
