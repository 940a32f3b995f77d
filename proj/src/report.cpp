#include "graphsq/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace graphsq {

const char* to_string(Status s) {
  switch (s) {
    case Status::holds: return "HOLDS";
    case Status::violated: return "VIOLATED";
    case Status::undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

Status parse_status(const std::string& text) {
  if (text == "HOLDS") return Status::holds;
  if (text == "VIOLATED") return Status::violated;
  if (text == "UNDECIDED") return Status::undecided;
  throw std::invalid_argument("unknown status '" + text + "'");
}

Status combine(Status a, Status b) {
  if (a == Status::violated || b == Status::violated) return Status::violated;
  if (a == Status::undecided || b == Status::undecided) return Status::undecided;
  return Status::holds;
}

Json ClaimReport::to_json_value() const {
  Json j;
  j["claim"] = claim;
  j["range"] = range;
  j["status"] = to_string(status);
  j["witnesses"] = Json::array();
  for (const auto& w : witnesses) j["witnesses"].push_back(Json{{"graph6", w.graph6}, {"values", w.values}});
  j["extremal_table"] = Json::array();
  for (const auto& row : extremal_table) j["extremal_table"].push_back(row);
  j["tolerances"] = tolerances;
  j["runtime_ms"] = runtime_ms ? Json(*runtime_ms) : Json(nullptr);
  j["details"] = details;
  return j;
}

std::string ClaimReport::to_json() const { return to_json_value().dump(2) + "\n"; }

ClaimReport ClaimReport::from_json(const std::string& text) {
  const Json j = Json::parse(text);
  ClaimReport r;
  r.claim = j.at("claim").get<std::string>();
  r.range = j.at("range");
  r.status = parse_status(j.at("status").get<std::string>());
  for (const auto& w : j.at("witnesses")) r.witnesses.push_back({w.at("graph6").get<std::string>(), w.at("values")});
  for (const auto& row : j.at("extremal_table")) r.extremal_table.push_back(row);
  r.tolerances = j.at("tolerances");
  if (!j.at("runtime_ms").is_null()) r.runtime_ms = j.at("runtime_ms").get<double>();
  r.details = j.value("details", Json::object());
  return r;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

std::string csv_cell(const Json& v) {
  std::string s;
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ';';
      s += v[i].is_string() ? v[i].get<std::string>() : csv_cell(v[i]);
    }
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }
  return s;
}

}  // namespace

std::string ClaimReport::to_csv() const {
  std::vector<std::string> columns;
  for (const auto& row : extremal_table)
    for (const auto& [key, value] : row.items())
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
  std::ostringstream os;
  for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
  os << '\n';
  for (const auto& row : extremal_table) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) os << ',';
      auto it = row.find(columns[c]);
      if (it != row.end()) os << csv_cell(*it);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace graphsq
