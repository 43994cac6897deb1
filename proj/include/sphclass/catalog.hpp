#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sphclass/groups.hpp"
#include "sphclass/report.hpp"

namespace sphclass::catalog {

using Bindings = std::map<char, long long>;

struct CompiledEntry;

struct Footnote {
  int number = 0;
  int classes = 1;            // conjugacy classes of H in G when `when` holds
  std::string when = "any";
  std::map<std::string, std::string> fields;  // swap, triality, ...
};

/// One dataset record. Fields beyond the common ones are kept in `extra`.
struct Entry {
  std::string id;
  std::string table;
  std::string side;  // "all", "extra", or empty outside the classification tables
  std::string H;
  std::string G;
  std::string where = "any";
  std::string chr = "any";
  std::string pair;
  std::vector<int> footnotes;
  std::map<std::string, std::string> extra;
  std::shared_ptr<const CompiledEntry> compiled;  // set by load_dataset

  /// Free parameters, sorted.
  std::vector<char> params() const;
  /// "H < G (where; char)" in descriptor spelling.
  std::string describe() const;
};

struct Dataset {
  int version = 0;
  std::uint32_t checksum = 0;
  std::vector<Footnote> footnotes;
  std::vector<Entry> entries;

  const Entry* find(std::string_view id) const;
  std::vector<const Entry*> table(std::string_view name) const;
  const Footnote* footnote(int n) const;
};

/// CRC-32 over every line that is neither blank, a comment, nor the checksum line.
std::uint32_t compute_checksum(std::string_view text);

/// Parses and verifies a dataset. Throws DatasetIntegrityError.
Dataset load_dataset(std::string_view text);

/// The embedded dataset, loaded and verified once.
const Dataset& dataset();
std::string_view embedded_text();

/// Every record of the embedded dataset.
const std::vector<Entry>& load_tables();

/// A concrete instance of an entry.
struct Instance {
  const Entry* entry = nullptr;
  Bindings bindings;
  groups::GroupDescriptor H;
  groups::GroupDescriptor G;
};

/// Substitutes parameters into a descriptor pattern; nullopt when an argument
/// is negative or the factor is invalid (e.g. Sp of odd degree).
std::optional<groups::GroupDescriptor> instantiate_pattern(std::string_view pattern, const Bindings& b);

/// True when the entry's constraints hold for `b` (which should bind `p` when
/// `check_char` is set).
bool satisfies(const Entry& e, const Bindings& b, bool check_char);

/// All instances with every parameter in [0, bound] that satisfy `where`.
std::vector<Instance> instances(const Entry& e, int bound);

/// Characteristic gating of an entry without parameters bound, e.g. for dumps.
/// Conditions that mention parameters besides p are treated as satisfiable.
bool char_allows(const Entry& e, long long p);

enum class Status { Spherical, NotListed, OutOfScope };
std::string to_string(Status s);

struct Match {
  const Entry* entry = nullptr;  // null for the improper subgroup H = G
  Bindings bindings;
  std::string H_instance;
  std::string G_instance;
  bool via_isogeny = false;
  int conjugacy_classes = 1;
  std::vector<std::string> notes;

  std::string citation() const;
};

struct Verdict {
  Status status = Status::NotListed;
  std::vector<Match> matches;  // primary match first
  std::vector<std::string> isogeny_trace;
  std::vector<std::string> citations;
  std::string caveat;
  std::string reason;  // OutOfScope explanation

  const Match* primary() const { return matches.empty() ? nullptr : &matches.front(); }
};

/// Classification query for a connected reductive H in G at characteristic p.
/// Throws AmbiguousDescriptor when H names a root-system type inside a
/// classical G, std::invalid_argument when p is neither 0 nor prime.
Verdict query(const groups::GroupDescriptor& H, const groups::GroupDescriptor& G, long long p);
Verdict query(std::string_view H, std::string_view G, long long p);

/// Cross-checks the dataset against the dimension inequality, the
/// characteristic gating, and the isogeny pairing of the two table columns.
std::vector<report::Record> consistency_audit(int bound = 25);

struct Listing {
  const Entry* entry = nullptr;
  Bindings bindings;
  std::string H_instance;
  bool applies = true;  // the entry's characteristic condition holds at p
};

/// Maximal spherical G-completely reducible subgroups of a concrete G.
/// Throws OutOfScope unless G is strictly classical at p or exceptional.
std::vector<Listing> list_maximal_gcr(const groups::GroupDescriptor& G, long long p);
/// The non-maximal G-completely reducible spherical subgroups of an exceptional G.
std::vector<Listing> list_nonmaximal_gcr(const groups::GroupDescriptor& G, long long p);

struct NonGcrCase {
  const Entry* entry = nullptr;
  const Entry* levi = nullptr;  // the Levi record it deforms from
};

std::vector<NonGcrCase> non_gcr_cases();

/// Generic cohomology recorded on a Levi row for given parameters; nullopt
/// when no clause applies.
std::optional<std::string> h1gen(const Entry& levi_row, const Bindings& b);

/// Records of a table for dumping, filtered by characteristic when p is set.
std::vector<const Entry*> table_rows(std::string_view which, std::optional<long long> p);

}  // namespace sphclass::catalog
