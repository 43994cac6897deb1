#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sphclass::report {

enum class Status { Reproduced, Diverged };

/// One audited claim. `anchor` names the table or statement being checked by
/// role, e.g. "orbit-filter/B3".
struct Record {
  std::string claim_id;
  std::string anchor;
  std::map<std::string, std::string> values;
  Status verdict = Status::Reproduced;

  friend bool operator==(const Record&, const Record&) = default;
};

Record make(std::string claim_id, std::string anchor, std::map<std::string, std::string> values, bool ok);

std::string to_string(Status s);

bool all_reproduced(const std::vector<Record>& records);

/// Sorts by claim_id; audits emit in canonical order regardless of evaluation order.
void sort_canonical(std::vector<Record>& records);

/// "[ok] claim_id anchor k=v k=v" / "[DIVERGED] ...", one line per record.
std::string render_text(const std::vector<Record>& records);

inline constexpr std::string_view kSchema = "sphclass.report";
inline constexpr int kSchemaVersion = 1;

/// JSON Lines: a header object then one object per record, keys sorted.
std::string render_jsonl(const std::vector<Record>& records);

/// Inverse of render_jsonl. Throws std::runtime_error on a bad header or record.
std::vector<Record> parse_jsonl(std::string_view text);

}  // namespace sphclass::report
