#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace graphsq {

using Json = nlohmann::ordered_json;

enum class Status { holds, violated, undecided };

const char* to_string(Status s);
Status parse_status(const std::string& text);
/// violated > undecided > holds.
Status combine(Status a, Status b);

struct Witness {
  std::string graph6;
  Json values = Json::object();
};

/// Outcome of checking one claim over a parameter range.
///
/// JSON schema (keys in this order):
///   claim, range, status, witnesses[{graph6, values}], extremal_table[],
///   tolerances, runtime_ms, details
/// runtime_ms is null unless timing was requested, so reports stay
/// byte-identical across runs.
struct ClaimReport {
  std::string claim;
  Json range = Json::object();
  Status status = Status::holds;
  std::vector<Witness> witnesses;
  std::vector<Json> extremal_table;
  Json tolerances = Json::object();
  std::optional<double> runtime_ms;
  Json details = Json::object();

  void violate(Witness w) {
    status = combine(status, Status::violated);
    witnesses.push_back(std::move(w));
  }
  void undecide(Witness w) {
    status = combine(status, Status::undecided);
    witnesses.push_back(std::move(w));
  }

  Json to_json_value() const;
  std::string to_json() const;
  /// The extremal table as CSV: header from the keys of the rows in first
  /// appearance order, numbers with 12 significant digits, arrays joined
  /// by ';'.
  std::string to_csv() const;
  static ClaimReport from_json(const std::string& text);
};

/// Formats a double with 12 significant digits.
std::string format_number(double x);

}  // namespace graphsq
