#pragma once

// Versioned command report with a human text rendering and a compact JSON
// record. Keys keep insertion order, so equal reports render byte-identically.

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace turnkit::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "turnkit.report/1";

class ReportError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undecided: the computation succeeded but the available criterion does not
/// settle the question.
enum class Outcome { Decided, Undecided };

const char* outcome_name(Outcome o);

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<std::string> warnings;
  /// Method used for each verdict, as "key: method".
  std::vector<std::string> provenance;
  Outcome outcome = Outcome::Decided;

  friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& r);
Report from_json(const Json& j);

/// Single-line JSON record.
std::string render_record(const Report& r);
/// Throws ReportError on malformed input or a schema mismatch.
Report parse_record(const std::string& text);

/// Indented key: value listing.
std::string render_text(const Report& r);

}  // namespace turnkit::report
