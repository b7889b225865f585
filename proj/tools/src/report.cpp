#include "threeway/app/report.hpp"

#include <charconv>
#include <cmath>
#include <utility>

namespace threeway::app {

namespace {

std::string scalar_text(const Json& v) {
  switch (v.type()) {
    case Json::value_t::number_float: return format_double(v.get<double>());
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
    case Json::value_t::boolean:
    case Json::value_t::null: return v.dump();
    case Json::value_t::string: return v.dump(-1, ' ', false, Json::error_handler_t::replace);
    default: return {};
  }
}

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

bool all_scalars(const Json& arr) {
  for (const auto& e : arr) {
    if (!is_scalar(e)) return false;
  }
  return true;
}

void write_json(std::string& out, const Json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : v.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(key).dump() + ": ";
      write_json(out, value, depth + 1);
    }
    out += "\n" + close + "}";
  } else if (v.is_array()) {
    if (v.empty()) {
      out += "[]";
    } else if (all_scalars(v)) {
      out += "[";
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar_text(v[i]);
      out += "]";
    } else {
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        write_json(out, v[i], depth + 1);
      }
      out += "\n" + close + "]";
    }
  } else {
    out += scalar_text(v);
  }
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  const auto join = [&](const std::string& k) { return prefix.empty() ? k : prefix + "." + k; };
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) flatten(value, join(key), out);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], join(std::to_string(i)), out);
  } else if (v.is_string()) {
    out.emplace_back(prefix, v.get<std::string>());
  } else {
    out.emplace_back(prefix, v.is_null() ? std::string() : scalar_text(v));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

Json number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

std::string render_json(const Report& r) {
  Json doc = Json::object();
  doc["command"] = r.command;
  doc["config"] = r.config;
  doc["summary"] = r.summary;
  doc[r.rows_key] = Json::array();
  for (const auto& row : r.rows) doc[r.rows_key].push_back(row);
  std::string out;
  write_json(out, doc, 0);
  return out + "\n";
}

std::string render_csv(const Report& r) {
  std::vector<std::pair<std::string, std::string>> meta;
  meta.emplace_back("command", r.command);
  flatten(r.config, "config", meta);
  flatten(r.summary, "summary", meta);

  std::string out;
  for (const auto& [k, v] : meta) out += "# " + csv_field(k) + "," + csv_field(v) + "\n";

  std::vector<std::vector<std::pair<std::string, std::string>>> cells;
  for (const auto& row : r.rows) {
    cells.emplace_back();
    flatten(row, "", cells.back());
  }
  if (cells.empty()) return out;
  for (std::size_t i = 0; i < cells.front().size(); ++i) {
    out += (i ? "," : "") + csv_field(cells.front()[i].first);
  }
  out += "\n";
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i].second);
    out += "\n";
  }
  return out;
}

std::string render(const Report& r, Format f) { return f == Format::Json ? render_json(r) : render_csv(r); }

}  // namespace threeway::app
