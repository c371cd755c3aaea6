// lsacran command line front end.
//
// Subcommands:
//   validate <scenario>                          check a scenario file
//   run <scenario> [--out] [--detail] [--log]    simulate the event timeline
//   sweep-incumbents <scenario> [--min-rate]     served MVNOs vs. returned incumbents
//   sweep-cost-ratio <scenario> --min --max --steps
//                                                revenue vs. spectrum-to-antenna cost ratio
//
// Exit codes: 0 success, 1 usage error, 2 scenario parse/validation error,
// 3 runtime failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lsacran/lsacran.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitScenarioError = 2;
constexpr int kExitRuntimeError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::optional<std::string>& path, const std::string& content) {
  if (!path) {
    std::cout << content;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + *path + "'");
  out << content;
}

lsacran::Scenario load_scenario(const std::string& path) {
  return lsacran::parse_scenario(read_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LSA spectrum sharing over a dynamic C-RAN: simulator and allocation engine"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::optional<std::string> out_path;
  std::optional<std::string> detail_path;
  std::optional<std::string> log_path;
  std::optional<std::int64_t> min_rate_override;
  double ratio_min = 0.0;
  double ratio_max = 0.0;
  int steps = 0;

  auto* validate = app.add_subcommand("validate", "Parse and validate a scenario file");
  validate->add_option("scenario", scenario_path, "scenario file")->required();

  auto* run = app.add_subcommand("run", "Run the event timeline of a scenario");
  run->add_option("scenario", scenario_path, "scenario file")->required();
  run->add_option("--out", out_path, "write the per-event CSV here (default: stdout)");
  run->add_option("--detail", detail_path, "also write a per-MVNO long-format CSV");
  run->add_option("--log", log_path, "write the protocol message trace");

  auto* sweep_inc = app.add_subcommand("sweep-incumbents", "Allocate for every incumbent count");
  sweep_inc->add_option("scenario", scenario_path, "scenario file")->required();
  sweep_inc->add_option("--min-rate", min_rate_override, "override every MVNO's min rate (bps)");
  sweep_inc->add_option("--out", out_path, "write the CSV here (default: stdout)");

  auto* sweep_cost = app.add_subcommand("sweep-cost-ratio", "Sweep the spectrum-to-antenna cost ratio");
  sweep_cost->add_option("scenario", scenario_path, "scenario file")->required();
  sweep_cost->add_option("--min", ratio_min, "smallest ratio (> 0)")->required();
  sweep_cost->add_option("--max", ratio_max, "largest ratio")->required();
  sweep_cost->add_option("--steps", steps, "number of log-spaced grid points (>= 2)")->required();
  sweep_cost->add_option("--out", out_path, "write the CSV here (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (validate->parsed()) {
      const lsacran::Scenario sc = load_scenario(scenario_path);
      std::cout << "scenario ok: " << sc.band.channel_count << " channels of "
                << sc.band.channel_width_hz / lsacran::kMegaHertz << " MHz, "
                << sc.band.incumbents.size() << " incumbents, " << sc.mvnos.size() << " MVNOs, "
                << sc.events.size() << " events\n";
    } else if (run->parsed()) {
      const lsacran::Scenario sc = load_scenario(scenario_path);
      const lsacran::SimResult result = lsacran::run(sc);
      write_output(out_path, lsacran::run_csv(result, sc.sim.baseline_enabled));
      if (detail_path) write_output(detail_path, lsacran::run_detail_csv(result));
      if (log_path) write_output(log_path, lsacran::message_log_text(result.message_log));
    } else if (sweep_inc->parsed()) {
      const lsacran::Scenario sc = load_scenario(scenario_path);
      std::optional<lsacran::Bps> override_bps;
      if (min_rate_override) override_bps = *min_rate_override;
      const auto rows = lsacran::sweep_incumbents(sc, override_bps);
      write_output(out_path, lsacran::incumbent_sweep_csv(rows));
    } else if (sweep_cost->parsed()) {
      const lsacran::Scenario sc = load_scenario(scenario_path);
      const auto rows = lsacran::sweep_cost_ratio(sc, ratio_min, ratio_max, steps);
      write_output(out_path, lsacran::cost_ratio_sweep_csv(rows));
    }
  } catch (const lsacran::scenario_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitScenarioError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return 0;
}
