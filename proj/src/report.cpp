#include "sphclass/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sphclass::report {

using nlohmann::json;

Record make(std::string claim_id, std::string anchor, std::map<std::string, std::string> values, bool ok) {
  return {std::move(claim_id), std::move(anchor), std::move(values), ok ? Status::Reproduced : Status::Diverged};
}

std::string to_string(Status s) { return s == Status::Reproduced ? "reproduced" : "diverged"; }

bool all_reproduced(const std::vector<Record>& records) {
  return std::all_of(records.begin(), records.end(),
                     [](const Record& r) { return r.verdict == Status::Reproduced; });
}

void sort_canonical(std::vector<Record>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const Record& a, const Record& b) { return a.claim_id < b.claim_id; });
}

std::string render_text(const std::vector<Record>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.verdict == Status::Reproduced ? "[ok] " : "[DIVERGED] ";
    out += r.claim_id + " " + r.anchor;
    for (const auto& [k, v] : r.values) out += " " + k + "=" + v;
    out += '\n';
  }
  return out;
}

std::string render_jsonl(const std::vector<Record>& records) {
  // nlohmann::json stores objects in std::map, so keys come out sorted.
  std::string out = json{{"schema", kSchema}, {"version", kSchemaVersion}}.dump() + "\n";
  for (const auto& r : records) {
    json j{{"claim_id", r.claim_id}, {"anchor", r.anchor}, {"values", r.values}, {"verdict", to_string(r.verdict)}};
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<Record> parse_jsonl(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty report");
  const json header = json::parse(line);
  if (header.value("schema", "") != kSchema || header.value("version", 0) != kSchemaVersion)
    throw std::runtime_error("unsupported report schema");
  std::vector<Record> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    Record r;
    r.claim_id = j.at("claim_id").get<std::string>();
    r.anchor = j.at("anchor").get<std::string>();
    r.values = j.at("values").get<std::map<std::string, std::string>>();
    const auto v = j.at("verdict").get<std::string>();
    if (v != "reproduced" && v != "diverged") throw std::runtime_error("unknown verdict " + v);
    r.verdict = v == "reproduced" ? Status::Reproduced : Status::Diverged;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace sphclass::report
