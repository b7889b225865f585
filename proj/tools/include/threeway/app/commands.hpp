#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "threeway/app/report.hpp"
#include "threeway/interval.hpp"

namespace threeway::app {

struct RunConfig {
  Theta theta;
  std::optional<std::size_t> grid;  // unset: 1001, or 10000 for the shadow scan
  std::uint64_t seed = 42;
  double epsilon = 1e-9;
  Format format = Format::Json;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::size_t cases = 10000;
  std::optional<std::string> dataset;
  std::optional<std::string> losses;
};

/// Names accepted by run_subcommand, in help order.
const std::vector<std::string>& subcommands();

/// Throws threeway::Error for validation and missing inputs. Oracle
/// violations do not throw; they set Report::exit_code to 2.
Report run_subcommand(std::string_view name, const RunConfig& config);

/// Full command line front end. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace threeway::app
