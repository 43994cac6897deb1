#include "sphclass/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sphclass/catalog.hpp"
#include "sphclass/classifier.hpp"
#include "sphclass/errors.hpp"
#include "sphclass/report.hpp"
#include "sphclass/weights.hpp"

namespace sphclass::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kError = 2;
constexpr int kOutOfScope = 3;

struct Options {
  std::string format = "text";
  long long p = 0;
};

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string bindings_text(const catalog::Bindings& b) {
  std::vector<std::string> parts;
  for (const auto& [k, v] : b) parts.push_back(std::string(1, k) + "=" + std::to_string(v));
  return join(parts, ",");
}

void emit(const std::vector<report::Record>& records, const Options& o, std::ostream& out) {
  out << (o.format == "json" ? report::render_jsonl(records) : report::render_text(records));
}

int cmd_check(const std::string& G_text, const std::string& H_text, const Options& o, std::ostream& out) {
  const auto G = groups::parse(G_text);
  const auto H = groups::parse(H_text);
  const auto r = classifier::check_eq2(G, H);
  if (o.format == "json") {
    emit({report::make("check", "dimension-inequality",
                       {{"G", G.to_string()},
                        {"H", H.to_string()},
                        {"p", std::to_string(o.p)},
                        {"dim_H", std::to_string(r.dim_H)},
                        {"dim_G/B", std::to_string(r.dim_flag_G)},
                        {"result", r.passes ? "pass" : "fail"}},
                       r.passes)},
         o, out);
  } else {
    out << "H = " << H.to_string() << ", G = " << G.to_string() << "\n";
    out << "dim H = " << r.dim_H << ", dim G/B = " << r.dim_flag_G << "\n";
    out << (r.passes ? "pass: " : "fail: ") << r.dim_H << (r.passes ? " >= " : " < ") << r.dim_flag_G << "\n";
  }
  return r.passes ? kOk : kFail;
}

int cmd_classify(const std::string& G_text, const std::string& H_text, const Options& o, std::ostream& out) {
  const auto G = groups::parse(G_text);
  const auto H = groups::parse(H_text);
  const auto v = catalog::query(H, G, o.p);
  if (o.format == "json") {
    std::map<std::string, std::string> values = {{"G", G.to_string()},
                                                 {"H", H.to_string()},
                                                 {"p", std::to_string(o.p)},
                                                 {"status", catalog::to_string(v.status)}};
    if (!v.citations.empty()) values["citations"] = join(v.citations, "; ");
    if (!v.isogeny_trace.empty()) values["isogeny"] = join(v.isogeny_trace, "; ");
    if (!v.caveat.empty()) values["caveat"] = v.caveat;
    if (!v.reason.empty()) values["reason"] = v.reason;
    if (const auto* m = v.primary()) {
      values["classes"] = std::to_string(m->conjugacy_classes);
      values["bindings"] = bindings_text(m->bindings);
      values["via_isogeny"] = m->via_isogeny ? "true" : "false";
      if (!m->notes.empty()) values["notes"] = join(m->notes, "; ");
    }
    const std::string anchor = v.primary() ? v.primary()->citation() : "classification";
    emit({report::make("classify", anchor, values, true)}, o, out);
  } else {
    out << catalog::to_string(v.status) << ": " << H.to_string() << " in " << G.to_string() << " at p = " << o.p
        << "\n";
    for (const auto& m : v.matches) {
      out << "  match: " << m.citation();
      if (!m.bindings.empty()) out << " [" << bindings_text(m.bindings) << "]";
      if (m.via_isogeny) out << " via isogeny";
      out << "\n";
      if (m.conjugacy_classes > 1) out << "    classes: " << m.conjugacy_classes << "\n";
      for (const auto& n : m.notes) out << "    note: " << n << "\n";
    }
    for (const auto& t : v.isogeny_trace) out << "  isogeny: " << t << "\n";
    if (v.status == catalog::Status::NotListed)
      for (const auto& c : v.citations) out << "  searched: " << c << "\n";
    if (!v.caveat.empty()) out << "  caveat: " << v.caveat << "\n";
    if (!v.reason.empty()) out << "  reason: " << v.reason << "\n";
  }
  switch (v.status) {
    case catalog::Status::Spherical: return kOk;
    case catalog::Status::NotListed: return kFail;
    case catalog::Status::OutOfScope: return kOutOfScope;
  }
  return kError;
}

int cmd_table(const std::string& which, std::optional<long long> p, const Options& o, std::ostream& out) {
  std::vector<const catalog::Entry*> rows;
  if (which == "non-gcr") {
    rows = catalog::table_rows("non-gcr-levi", p);
    const auto tail = catalog::table_rows("non-gcr", p);
    rows.insert(rows.end(), tail.begin(), tail.end());
  } else {
    rows = catalog::table_rows(which, p);
  }
  std::vector<report::Record> records;
  for (const auto* e : rows) {
    std::map<std::string, std::string> values = {{"H", e->H}, {"G", e->G}, {"where", e->where}, {"char", e->chr}};
    if (!e->side.empty()) values["side"] = e->side;
    if (!e->pair.empty()) values["pair"] = e->pair;
    if (!e->footnotes.empty()) {
      std::vector<std::string> fns;
      for (int n : e->footnotes) fns.push_back(std::to_string(n));
      values["fn"] = join(fns, ",");
    }
    for (const auto& [k, v] : e->extra) values[k] = v;
    records.push_back(report::make(e->id, e->table, values, true));
  }
  if (o.format == "json") {
    emit(records, o, out);
  } else {
    for (const auto* e : rows) {
      out << e->id << "  " << e->describe();
      if (!e->side.empty() && e->side != "all") out << "  [" << e->side << "]";
      if (!e->footnotes.empty()) {
        out << "  fn";
        for (int n : e->footnotes) out << " " << n;
      }
      for (const auto& [k, v] : e->extra) out << "  " << k << "=" << v;
      out << "\n";
    }
  }
  return kOk;
}

std::vector<report::Record> run_suite(const std::string& suite) {
  if (suite == "eq4") return classifier::audit_eq4();
  if (suite == "grid") return classifier::audit_grid();
  if (suite == "tensor") return classifier::audit_tensor();
  if (suite == "sosp2") return classifier::audit_sosp2();
  if (suite == "spin7") return classifier::audit_spin7();
  if (suite == "g2") return classifier::audit_g2();
  if (suite == "tables") return catalog::consistency_audit();
  std::vector<report::Record> all;
  for (const char* s : {"eq4", "grid", "tensor", "sosp2", "spin7", "g2", "tables"}) {
    auto part = run_suite(s);
    all.insert(all.end(), part.begin(), part.end());
  }
  report::sort_canonical(all);
  return all;
}

int cmd_audit(const std::string& suite, const Options& o, std::ostream& out, std::ostream& err) {
  const auto records = run_suite(suite);
  emit(records, o, out);
  const auto bad = std::find_if(records.begin(), records.end(),
                                [](const report::Record& r) { return r.verdict == report::Status::Diverged; });
  if (bad != records.end()) {
    err << "first divergent claim: " << bad->claim_id << " (" << bad->anchor << ")\n";
    return kFail;
  }
  return kOk;
}

int cmd_filter(const std::string& type_text, const Options& o, std::ostream& out) {
  const auto t = rootsys::SimpleType::parse(type_text);
  const auto passing = classifier::lemma6_filter(t);
  std::vector<report::Record> records;
  for (int i : passing) {
    const auto w = weights::Weight::fundamental(t, i);
    records.push_back(report::make("filter." + t.name() + ".w" + std::to_string(i), "orbit-filter/" + t.name(),
                                   {{"weight", w.to_string()},
                                    {"orbit", weights::weyl_orbit_size(w).str()},
                                    {"dim_H", std::to_string(rootsys::dim_group(t))}},
                                   true));
  }
  if (o.format == "json") {
    emit(records, o, out);
  } else {
    out << t.name() << " (dim " << rootsys::dim_group(t) << "):";
    if (passing.empty()) out << " no fundamental weight passes";
    for (const auto& r : records) out << " " << r.values.at("weight") << " [orbit " << r.values.at("orbit") << "]";
    out << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherical subgroups of simple algebraic groups", "sphclass"};
  app.require_subcommand(1, 1);
  Options o;
  std::optional<long long> table_p;
  std::string G_text, H_text, suite = "all", which, type_text;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output mode")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_p = [&](CLI::App* sub) { sub->add_option("--p", o.p, "Characteristic (0 or a prime)"); };

  auto* check = app.add_subcommand("check", "Test the dimension inequality dim H >= dim G/B");
  check->add_option("G", G_text, "Ambient group")->required();
  check->add_option("H", H_text, "Subgroup")->required();
  add_p(check);
  add_format(check);

  auto* classify = app.add_subcommand("classify", "Look H < G up in the classification");
  classify->add_option("G", G_text, "Ambient group")->required();
  classify->add_option("H", H_text, "Subgroup")->required();
  add_p(classify);
  add_format(classify);

  auto* table = app.add_subcommand("table", "Dump a classification table");
  table->add_option("--which", which, "Table")
      ->required()
      ->check(CLI::IsMember({"classical", "exceptional", "maximal-gcr", "nonmaximal-gcr", "non-gcr"}));
  table->add_option("--p", table_p, "Only rows valid in this characteristic");
  add_format(table);

  auto* audit = app.add_subcommand("audit", "Recompute the audited claims");
  audit->add_option("--suite", suite, "Suite")
      ->check(CLI::IsMember({"eq4", "grid", "tensor", "sosp2", "spin7", "g2", "tables", "all"}));
  add_format(audit);

  auto* filter = app.add_subcommand("filter", "Fundamental weights passing the orbit-size filter");
  filter->add_option("type", type_text, "Simple type, e.g. B4")->required();
  add_format(filter);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  const long long p = table_p.value_or(o.p);
  if (!weights::is_characteristic(p)) {
    err << "error: --p must be 0 or a prime, got " << p << "\n";
    return kError;
  }

  try {
    if (check->parsed()) return cmd_check(G_text, H_text, o, out);
    if (classify->parsed()) return cmd_classify(G_text, H_text, o, out);
    if (table->parsed()) return cmd_table(which, table_p, o, out);
    if (audit->parsed()) return cmd_audit(suite, o, out, err);
    if (filter->parsed()) return cmd_filter(type_text, o, out);
  } catch (const ParseError& e) {
    err << e.annotated() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace sphclass::cli
