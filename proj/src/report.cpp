#include "turnkit/report.hpp"

#include <sstream>

namespace turnkit::report {

const char* outcome_name(Outcome o) { return o == Outcome::Decided ? "decided" : "undecided"; }

Json to_json(const Report& r) {
  Json j = Json::object();
  j["schema"] = kSchema;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["results"] = r.results;
  j["warnings"] = r.warnings;
  j["provenance"] = r.provenance;
  j["outcome"] = outcome_name(r.outcome);
  return j;
}

Report from_json(const Json& j) {
  try {
    if (!j.is_object()) throw ReportError("report record must be an object");
    if (j.at("schema").get<std::string>() != kSchema)
      throw ReportError("unsupported report schema " + j.at("schema").dump());
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.results = j.at("results");
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    r.provenance = j.at("provenance").get<std::vector<std::string>>();
    const std::string outcome = j.at("outcome").get<std::string>();
    if (outcome == "decided") r.outcome = Outcome::Decided;
    else if (outcome == "undecided") r.outcome = Outcome::Undecided;
    else throw ReportError("unknown outcome " + outcome);
    return r;
  } catch (const Json::exception& e) {
    throw ReportError(std::string("malformed report record: ") + e.what());
  }
}

std::string render_record(const Report& r) { return to_json(r).dump(); }

Report parse_record(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ReportError(std::string("report record is not valid JSON: ") + e.what());
  }
  return from_json(j);
}

namespace {

bool is_scalar_list(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v)
    if (e.is_structured()) return false;
  return true;
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit(std::ostringstream& out, const Json& v, int indent) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      out << pad << key << ":";
      if (value.is_structured() && !is_scalar_list(value) && !value.empty()) {
        out << "\n";
        emit(out, value, indent + 2);
      } else {
        out << " " << (value.is_array() ? value.dump() : scalar(value)) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (e.is_object()) {
        out << pad << "-\n";
        emit(out, e, indent + 2);
      } else {
        out << pad << "- " << (e.is_array() ? e.dump() : scalar(e)) << "\n";
      }
    }
  } else {
    out << pad << scalar(v) << "\n";
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  if (!r.inputs.empty()) {
    out << "inputs:\n";
    emit(out, r.inputs, 2);
  }
  out << "results:\n";
  emit(out, r.results, 2);
  if (!r.warnings.empty()) {
    out << "warnings:\n";
    for (const auto& w : r.warnings) out << "  - " << w << "\n";
  }
  out << "provenance:\n";
  for (const auto& p : r.provenance) out << "  - " << p << "\n";
  out << "outcome: " << outcome_name(r.outcome) << "\n";
  return out.str();
}

}  // namespace turnkit::report
