#include "threeway/app/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "threeway/error.hpp"

namespace threeway::app {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Message of an Error without its "Kind: " prefix.
std::string bare_message(const Error& e) {
  const std::string msg = e.what();
  const auto prefix = to_string(e.kind()).size() + 2;
  return msg.size() >= prefix ? msg.substr(prefix) : msg;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MissingInput, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

IVFuzzySet parse_dataset(std::istream& in) {
  std::vector<std::pair<ObjectId, Interval>> grades;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0, row = 0;
  bool header = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (!header) {
      if (fields != std::vector<std::string>{"id", "lo", "hi"}) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected header id,lo,hi");
      }
      header = true;
      continue;
    }
    ++row;
    const std::string where = "row " + std::to_string(row) + " (line " + std::to_string(line_no) + ")";
    if (fields.size() != 3) {
      throw Error(ErrorKind::ParseError, where + ": expected 3 fields, found " + std::to_string(fields.size()));
    }
    double bounds[2];
    for (int k = 0; k < 2; ++k) {
      const std::string& f = fields[static_cast<std::size_t>(k + 1)];
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), bounds[k]);
      if (f.empty() || ec != std::errc() || ptr != f.data() + f.size()) {
        throw Error(ErrorKind::ParseError, where + ", column " + std::to_string(k + 2) + ": not a number: '" + f + "'");
      }
    }
    if (fields[0].empty()) throw Error(ErrorKind::ParseError, where + ", column 1: empty id");
    if (!seen.insert(fields[0]).second) {
      throw Error(ErrorKind::DuplicateId, where + ": duplicate id '" + fields[0] + "'");
    }
    try {
      grades.emplace_back(ObjectId(fields[0]), Interval::make(bounds[0], bounds[1], IntervalRole::Membership));
    } catch (const Error& e) {
      throw Error(e.kind(), where + ": " + bare_message(e));
    }
  }
  if (!header) throw Error(ErrorKind::ParseError, "missing header id,lo,hi");
  return IVFuzzySet(std::move(grades));
}

IVFuzzySet ingest_dataset(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  return parse_dataset(in);
}

IntervalLossProfile parse_losses(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("losses: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "losses: expected a JSON object");

  static const char* const keys[] = {"lambda_e", "lambda_r", "lambda_sd", "lambda_su"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(std::begin(keys), std::end(keys), key) == std::end(keys)) {
      throw Error(ErrorKind::ParseError, "losses: unknown key '" + key + "'");
    }
  }

  Interval parsed[4];
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string key = keys[i];
    if (!doc.contains(key)) throw Error(ErrorKind::ParseError, "losses: missing key '" + key + "'");
    const auto& v = doc[key];
    double lo, hi;
    if (v.is_number()) {
      lo = hi = v.get<double>();
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      lo = v[0].get<double>();
      hi = v[1].get<double>();
    } else {
      throw Error(ErrorKind::ParseError, "losses: '" + key + "' must be a number or [lo, hi]");
    }
    try {
      parsed[i] = Interval::make(lo, hi);
    } catch (const Error& e) {
      throw Error(e.kind(), "losses: '" + key + "': " + bare_message(e));
    }
  }
  return IntervalLossProfile(parsed[0], parsed[1], parsed[2], parsed[3]);
}

IntervalLossProfile ingest_losses(const std::filesystem::path& path) { return parse_losses(read_file(path)); }

}  // namespace threeway::app
