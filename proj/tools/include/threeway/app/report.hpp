#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace threeway::app {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv };

/// Output of one subcommand. `rows` are flat-or-nested objects of the same
/// shape; CSV flattens nested keys with dots.
struct Report {
  std::string command;
  Json config = Json::object();
  Json summary = Json::object();
  std::string rows_key = "objects";
  std::vector<Json> rows;
  int exit_code = 0;
};

/// 17 significant digits; infinities become the strings "inf" / "-inf".
Json number(double x);
std::string format_double(double x);

std::string render_json(const Report& r);
std::string render_csv(const Report& r);
std::string render(const Report& r, Format f);

}  // namespace threeway::app
