#include "sphclass/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include <boost/crc.hpp>

#include "conditions.hpp"
#include "sphclass/classifier.hpp"
#include "sphclass/errors.hpp"
#include "sphclass/weights.hpp"

namespace sphclass::catalog {

namespace {

using conditions::Condition;
using conditions::Linear;
using groups::FactorKind;
using groups::GroupDescriptor;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

bool significant(std::string_view line) {
  const auto t = trim(line);
  return !t.empty() && t.front() != '#';
}

// A descriptor pattern split into literal text and argument expressions.
struct Pattern {
  struct Piece {
    std::string literal;
    std::optional<Linear> expr;
  };
  std::vector<Piece> pieces;
  std::set<char> vars;
  bool tensor = false;

  static Pattern parse(std::string_view text) {
    Pattern p;
    std::string lit;
    std::size_t i = 0;
    while (i < text.size()) {
      if (text.substr(i, 3) == "(x)") {
        lit += "(x)";
        p.tensor = true;
        i += 3;
      } else if (text[i] == '(') {
        const auto close = text.find(')', i);
        if (close == std::string_view::npos) throw std::invalid_argument("unbalanced pattern " + std::string(text));
        lit += '(';
        bool first = true;
        for (auto arg : split(text.substr(i + 1, close - i - 1), ',')) {
          if (!first) lit += ',';
          first = false;
          if (const auto eq = arg.find('='); eq != std::string_view::npos) {
            lit += std::string(arg.substr(0, eq + 1));
            arg = arg.substr(eq + 1);
          }
          p.pieces.push_back({lit, conditions::parse_linear(arg)});
          for (char v : p.pieces.back().expr->vars()) p.vars.insert(v);
          lit.clear();
        }
        lit += ')';
        i = close + 1;
      } else {
        lit += text[i++];
      }
    }
    p.pieces.push_back({lit, std::nullopt});
    return p;
  }

  std::optional<std::string> render(const Bindings& b) const {
    std::string out;
    for (const auto& piece : pieces) {
      out += piece.literal;
      if (piece.expr) {
        const long long v = piece.expr->eval(b);
        if (v < 0) return std::nullopt;
        out += std::to_string(v);
      }
    }
    return out;
  }
};

}  // namespace

// Parsed form of an entry, built once at load time.
struct CompiledEntry {
  Pattern H;
  Pattern G;
  std::string G_head;             // "SL", "SO", "Sp", or an exceptional name
  std::optional<Linear> G_arg;    // absent for exceptional G
  Condition where;
  Condition chr;
  std::vector<char> params;
};

namespace {

CompiledEntry compile(const Entry& e) {
  CompiledEntry c;
  c.H = Pattern::parse(e.H);
  c.G = Pattern::parse(e.G);
  const auto paren = e.G.find('(');
  c.G_head = std::string(trim(std::string_view(e.G).substr(0, paren)));
  if (paren != std::string::npos) {
    if (c.G.pieces.size() != 2) throw DatasetIntegrityError(e.id + ": G pattern must have one argument");
    c.G_arg = c.G.pieces.front().expr;
  }
  c.where = Condition::parse(e.where);
  c.chr = Condition::parse(e.chr);
  std::set<char> vars(c.H.vars.begin(), c.H.vars.end());
  vars.insert(c.G.vars.begin(), c.G.vars.end());
  for (char v : c.where.vars()) vars.insert(v);
  vars.erase('p');
  c.params.assign(vars.begin(), vars.end());
  return c;
}

const CompiledEntry& compiled_of(const Entry& e) {
  if (!e.compiled) throw std::logic_error("entry " + e.id + " was not loaded through load_dataset");
  return *e.compiled;
}

int footnote_classes(const Entry& e, const Bindings& b, std::vector<std::string>& notes) {
  int classes = 1;
  for (int n : e.footnotes) {
    const Footnote* f = dataset().footnote(n);
    if (!f) continue;
    if (f->classes > 1 && Condition::parse(f->when).holds(b)) {
      classes = f->classes;
      std::string note = std::to_string(f->classes) + " conjugacy classes";
      if (auto it = f->fields.find("swap"); it != f->fields.end() && it->second == "outer")
        note += ", exchanged by an outer automorphism of G";
      notes.push_back(note);
    }
    if (auto it = f->fields.find("triality"); it != f->fields.end())
      notes.push_back("equivalent under triality to " + it->second);
  }
  return classes;
}

// Bindings of the entry's parameters for which its G pattern equals G.
std::vector<Bindings> bindings_for_G(const Entry& e, const groups::Factor& G, bool exceptional, int box) {
  const CompiledEntry& c = compiled_of(e);
  std::vector<Bindings> out;
  if (exceptional) {
    if (c.G_arg || c.G_head != G.to_string()) return out;
  } else {
    if (!c.G_arg) return out;
    const char* head = G.kind == FactorKind::SL ? "SL" : G.kind == FactorKind::SO ? "SO" : "Sp";
    if (c.G_head != head) return out;
  }
  const long long N = G.n;
  // Solve the G argument for one parameter; enumerate the others.
  std::optional<char> solved;
  if (c.G_arg) {
    for (char v : c.G_arg->vars()) {
      const long long k = c.G_arg->coef.at(v);
      if (!solved || std::abs(k) == 1) solved = v;
    }
  }
  std::vector<char> free;
  for (char v : c.params)
    if (!solved || v != *solved) free.push_back(v);

  Bindings b;
  auto visit = [&](auto&& self, std::size_t i) -> void {
    if (i == free.size()) {
      if (solved) {
        Linear rest = *c.G_arg;
        const long long k = rest.coef.at(*solved);
        rest.coef.erase(*solved);
        const long long r = N - rest.eval(b);
        if (r % k != 0 || r / k < 0) return;
        b[*solved] = r / k;
      } else if (c.G_arg && c.G_arg->eval(b) != N) {
        return;
      }
      out.push_back(b);
      if (solved) b.erase(*solved);
      return;
    }
    for (long long v = 0; v <= box; ++v) {
      b[free[i]] = v;
      self(self, i + 1);
    }
    b.erase(free[i]);
  };
  visit(visit, 0);
  return out;
}

int literal_box(const GroupDescriptor& H, const groups::Factor& G) {
  int top = std::max(G.n, G.m);
  for (const auto& f : H.factors) top = std::max({top, f.n, f.m});
  return top + 2;
}

std::string g_label(const groups::Factor& f) { return f.to_string(); }

}  // namespace

// ---- entries and dataset -----------------------------------------------

std::vector<char> Entry::params() const { return compiled_of(*this).params; }

std::string Entry::describe() const {
  std::string out = H + " < " + G;
  std::vector<std::string> conds;
  if (where != "any") conds.push_back(where);
  if (chr != "any") conds.push_back(chr);
  for (std::size_t i = 0; i < conds.size(); ++i) out += (i == 0 ? " (" : "; ") + conds[i];
  if (!conds.empty()) out += ")";
  return out;
}

const Entry* Dataset::find(std::string_view id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<const Entry*> Dataset::table(std::string_view name) const {
  std::vector<const Entry*> out;
  for (const auto& e : entries)
    if (e.table == name) out.push_back(&e);
  return out;
}

const Footnote* Dataset::footnote(int n) const {
  for (const auto& f : footnotes)
    if (f.number == n) return &f;
  return nullptr;
}

std::uint32_t compute_checksum(std::string_view text) {
  boost::crc_32_type crc;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!significant(line) || trim(line).starts_with("@checksum")) continue;
    crc.process_bytes(line.data(), line.size());
    crc.process_byte('\n');
  }
  return crc.checksum();
}

Dataset load_dataset(std::string_view text) {
  static const std::set<std::string> kTables = {"classical", "exceptional", "maximal-gcr",
                                                "nonmaximal-gcr", "non-gcr-levi", "non-gcr"};
  Dataset ds;
  std::optional<std::uint32_t> declared;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  std::set<std::string> ids;
  auto bad = [&](const std::string& msg) {
    throw DatasetIntegrityError("dataset line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (!significant(raw)) continue;
    const std::string_view line = trim(raw);
    if (line.starts_with("@version")) {
      ds.version = std::atoi(std::string(trim(line.substr(8))).c_str());
    } else if (line.starts_with("@checksum")) {
      const auto hex = trim(line.substr(9));
      std::uint32_t v = 0;
      const auto res = std::from_chars(hex.data(), hex.data() + hex.size(), v, 16);
      if (res.ec != std::errc() || res.ptr != hex.data() + hex.size()) bad("malformed checksum");
      declared = v;
      ds.checksum = v;
    } else if (line.starts_with("@footnote")) {
      auto fields = split(line.substr(9), '|');
      Footnote f;
      f.number = std::atoi(std::string(fields.at(0)).c_str());
      for (std::size_t i = 1; i < fields.size(); ++i) {
        const auto eq = fields[i].find('=');
        if (eq == std::string_view::npos) bad("footnote field without '='");
        const std::string key(trim(fields[i].substr(0, eq)));
        const std::string value(trim(fields[i].substr(eq + 1)));
        if (key == "classes") f.classes = std::atoi(value.c_str());
        else if (key == "when") f.when = value;
        else f.fields[key] = value;
      }
      ds.footnotes.push_back(f);
    } else if (line.starts_with("@")) {
      bad("unknown directive");
    } else {
      Entry e;
      for (auto field : split(line, '|')) {
        const auto eq = field.find('=');
        if (eq == std::string_view::npos) bad("field without '='");
        const std::string key(trim(field.substr(0, eq)));
        const std::string value(trim(field.substr(eq + 1)));
        if (key == "id") e.id = value;
        else if (key == "table") e.table = value;
        else if (key == "side") e.side = value;
        else if (key == "H") e.H = value;
        else if (key == "G") e.G = value;
        else if (key == "where") e.where = value;
        else if (key == "char") e.chr = value;
        else if (key == "pair") e.pair = value;
        else if (key == "fn") {
          for (auto n : split(value, ',')) e.footnotes.push_back(std::atoi(std::string(n).c_str()));
        } else e.extra[key] = value;
      }
      if (e.id.empty() || e.H.empty() || e.G.empty()) bad("record needs id, H and G");
      if (!kTables.count(e.table)) bad("unknown table '" + e.table + "'");
      if (!ids.insert(e.id).second) bad("duplicate id " + e.id);
      try {
        e.compiled = std::make_shared<const CompiledEntry>(compile(e));
      } catch (const std::exception& ex) {
        bad(e.id + ": " + ex.what());
      }
      ds.entries.push_back(std::move(e));
    }
  }
  if (!declared) throw DatasetIntegrityError("dataset has no checksum");
  const auto actual = compute_checksum(text);
  if (*declared != actual) {
    std::ostringstream msg;
    msg << "dataset checksum mismatch: declared " << std::hex << *declared << ", computed " << actual;
    throw DatasetIntegrityError(msg.str());
  }
  for (const auto& e : ds.entries) {
    if (!e.pair.empty() && !ds.find(e.pair)) throw DatasetIntegrityError(e.id + ": unknown pair " + e.pair);
    for (int n : e.footnotes)
      if (!ds.footnote(n)) throw DatasetIntegrityError(e.id + ": unknown footnote");
  }
  return ds;
}

const Dataset& dataset() {
  static const Dataset ds = load_dataset(embedded_text());
  return ds;
}

const std::vector<Entry>& load_tables() { return dataset().entries; }

std::optional<GroupDescriptor> instantiate_pattern(std::string_view pattern, const Bindings& b) {
  const auto text = Pattern::parse(pattern).render(b);
  if (!text) return std::nullopt;
  try {
    return groups::parse(*text);
  } catch (const Error&) {
    return std::nullopt;
  }
}

namespace {

std::optional<GroupDescriptor> instantiate(const Pattern& p, const Bindings& b) {
  const auto text = p.render(b);
  if (!text) return std::nullopt;
  try {
    return groups::parse(*text);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

bool satisfies(const Entry& e, const Bindings& b, bool check_char) {
  const auto& c = compiled_of(e);
  if (!c.where.holds(b)) return false;
  return !check_char || c.chr.holds(b);
}

std::vector<Instance> instances(const Entry& e, int bound) {
  const auto& c = compiled_of(e);
  std::vector<Instance> out;
  Bindings b;
  auto visit = [&](auto&& self, std::size_t i) -> void {
    if (i == c.params.size()) {
      // Conditions on p alone (e.g. "q pow p") are checked at query time.
      bool ok = true;
      try {
        ok = c.where.holds(b);
      } catch (const std::out_of_range&) {
        ok = true;
      }
      if (!ok) return;
      auto H = instantiate(c.H, b);
      auto G = instantiate(c.G, b);
      if (H && G) out.push_back({&e, b, *H, *G});
      return;
    }
    for (long long v = 0; v <= bound; ++v) {
      b[c.params[i]] = v;
      self(self, i + 1);
    }
    b.erase(c.params[i]);
  };
  visit(visit, 0);
  return out;
}

bool char_allows(const Entry& e, long long p) {
  try {
    return compiled_of(e).chr.holds({{'p', p}});
  } catch (const std::out_of_range&) {
    return true;
  }
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Spherical: return "Spherical";
    case Status::NotListed: return "NotListed";
    case Status::OutOfScope: return "OutOfScope";
  }
  return "?";
}

std::string Match::citation() const {
  if (!entry) return "improper: H = G";
  return entry->table + ":" + entry->id + " " + entry->describe();
}

// ---- query -------------------------------------------------------------

namespace {

void match_tables(const GroupDescriptor& H, const groups::Factor& G, bool exceptional, long long p, bool via_isogeny,
                  std::vector<Match>& out) {
  const std::string keyH = groups::canonical_key(H, exceptional);
  const std::string keyG = groups::canonical_key(GroupDescriptor(G), exceptional);
  if (keyH == keyG) {
    Match m;
    m.H_instance = H.to_string();
    m.G_instance = g_label(G);
    m.via_isogeny = via_isogeny;
    m.notes.push_back("improper subgroup");
    out.push_back(m);
    return;
  }
  const int hdim = groups::dim(H);
  const int box = literal_box(H, G);
  for (const Entry* e : dataset().table(exceptional ? "exceptional" : "classical")) {
    const auto& c = compiled_of(*e);
    if (H.has_tensor() != c.H.tensor) continue;
    for (Bindings b : bindings_for_G(*e, G, exceptional, box)) {
      b['p'] = p;
      if (!c.where.holds(b) || !c.chr.holds(b)) continue;
      const auto inst = instantiate(c.H, b);
      if (!inst || groups::dim(*inst) != hdim) continue;
      if (groups::canonical_key(*inst, exceptional) != keyH) continue;
      Match m;
      m.entry = e;
      m.H_instance = inst->to_string();
      m.G_instance = g_label(G);
      m.via_isogeny = via_isogeny;
      b.erase('p');
      m.bindings = b;
      Bindings with_p = b;
      with_p['p'] = p;
      m.conjugacy_classes = footnote_classes(*e, with_p, m.notes);
      out.push_back(std::move(m));
    }
  }
}

}  // namespace

Verdict query(const GroupDescriptor& H, const GroupDescriptor& G, long long p) {
  if (!weights::is_characteristic(p)) throw std::invalid_argument("characteristic must be 0 or a prime");
  Verdict v;
  auto out_of_scope = [&](std::string why) {
    v.status = Status::OutOfScope;
    v.reason = std::move(why);
    return v;
  };
  if (!G.is_single()) return out_of_scope("G = " + G.to_string() + " is not simple");
  const groups::Factor& gf = G.factors.front();
  const bool exceptional = gf.kind == FactorKind::Exceptional;
  groups::Factor ambient = gf;
  if (!exceptional) {
    const auto amb = groups::as_classical_ambient(G);
    if (!amb) return out_of_scope("G = " + G.to_string() + " is neither classical nor exceptional");
    ambient = *amb;
    if ((ambient.kind == FactorKind::SL && ambient.n < 2) || (ambient.kind == FactorKind::SO && ambient.n < 2) ||
        (ambient.kind == FactorKind::Sp && ambient.n < 2))
      return out_of_scope("G = " + G.to_string() + " is trivial");
    if (!(ambient == gf)) v.isogeny_trace.push_back("G " + gf.to_string() + " read as " + ambient.to_string());
  }

  match_tables(H, ambient, exceptional, p, false, v.matches);
  if (p == 2 && !exceptional) {
    const auto nh = groups::normalize_strictly_classical(H, 2);
    const auto ng = groups::normalize_strictly_classical(GroupDescriptor(ambient), 2);
    if (!nh.trace.empty() || !ng.trace.empty()) {
      std::vector<Match> iso;
      match_tables(nh.group, ng.group.factors.front(), false, p, true, iso);
      for (auto& m : iso) {
        const bool dup = std::any_of(v.matches.begin(), v.matches.end(), [&](const Match& x) {
          return x.entry == m.entry && x.bindings == m.bindings;
        });
        if (!dup) v.matches.push_back(std::move(m));
      }
      for (const auto& t : ng.trace) v.isogeny_trace.push_back("G " + t);
      for (const auto& t : nh.trace) v.isogeny_trace.push_back("H " + t);
    }
  }
  if (v.matches.empty()) {
    v.status = Status::NotListed;
    v.caveat =
        "no listed pair matches; by the classification H is not spherical in G, provided the descriptor "
        "identifies the embedding";
    v.citations.push_back(exceptional ? "exceptional" : "classical");
  } else {
    v.status = Status::Spherical;
    for (const auto& m : v.matches) v.citations.push_back(m.citation());
  }
  return v;
}

Verdict query(std::string_view H, std::string_view G, long long p) {
  return query(groups::parse(H), groups::parse(G), p);
}

// ---- listings ----------------------------------------------------------

namespace {

std::vector<Listing> listing(std::string_view table, const GroupDescriptor& G, long long p) {
  if (!weights::is_characteristic(p)) throw std::invalid_argument("characteristic must be 0 or a prime");
  if (!G.is_single()) throw OutOfScope("G = " + G.to_string() + " is not simple");
  const groups::Factor& gf = G.factors.front();
  const bool exceptional = gf.kind == FactorKind::Exceptional;
  groups::Factor ambient = gf;
  if (!exceptional) {
    const auto amb = groups::as_classical_ambient(G);
    if (!amb) throw OutOfScope("G = " + G.to_string() + " is neither classical nor exceptional");
    ambient = *amb;
    if (p == 2 && ambient.kind == FactorKind::SO && ambient.n % 2 == 1)
      throw OutOfScope(ambient.to_string() + " is not strictly classical at p = 2; use Sp(" +
                       std::to_string(ambient.n - 1) + ")");
  }
  std::vector<Listing> out;
  for (const Entry* e : dataset().table(table)) {
    const auto& c = compiled_of(*e);
    for (Bindings b : bindings_for_G(*e, ambient, exceptional, ambient.n + 2)) {
      if (!c.where.holds(b)) continue;
      const auto inst = instantiate(c.H, b);
      if (!inst) continue;
      Bindings with_p = b;
      with_p['p'] = p;
      out.push_back({e, b, inst->to_string(), c.chr.holds(with_p)});
    }
  }
  return out;
}

}  // namespace

std::vector<Listing> list_maximal_gcr(const GroupDescriptor& G, long long p) { return listing("maximal-gcr", G, p); }

std::vector<Listing> list_nonmaximal_gcr(const GroupDescriptor& G, long long p) {
  return listing("nonmaximal-gcr", G, p);
}

std::vector<NonGcrCase> non_gcr_cases() {
  std::vector<NonGcrCase> out;
  for (const Entry* e : dataset().table("non-gcr")) {
    const Entry* levi = nullptr;
    if (auto it = e->extra.find("levi"); it != e->extra.end()) levi = dataset().find(it->second);
    out.push_back({e, levi});
  }
  return out;
}

std::optional<std::string> h1gen(const Entry& levi_row, const Bindings& b) {
  const auto it = levi_row.extra.find("h1gen");
  if (it == levi_row.extra.end()) return std::nullopt;
  for (auto clause : split(it->second, ';')) {
    const auto colon = clause.rfind(':');
    if (colon == std::string_view::npos) continue;
    if (Condition::parse(clause.substr(0, colon)).holds(b)) return std::string(trim(clause.substr(colon + 1)));
  }
  return std::nullopt;
}

std::vector<const Entry*> table_rows(std::string_view which, std::optional<long long> p) {
  std::vector<const Entry*> out;
  for (const Entry* e : dataset().table(which))
    if (!p || char_allows(*e, *p)) out.push_back(e);
  return out;
}

// ---- consistency audit -------------------------------------------------

std::vector<report::Record> consistency_audit(int bound) {
  std::vector<report::Record> out;
  const Dataset& ds = dataset();
  out.push_back(report::make("tables.checksum", "dataset",
                             {{"entries", std::to_string(ds.entries.size())},
                              {"checksum", [&] {
                                 std::ostringstream s;
                                 s << std::hex << ds.checksum;
                                 return s.str();
                               }()}},
                             compute_checksum(embedded_text()) == ds.checksum));

  auto normalized_key = [](const Instance& inst, bool exceptional) {
    const auto h = groups::normalize_strictly_classical(inst.H, 2).group;
    const auto g = groups::normalize_strictly_classical(inst.G, 2).group;
    return groups::canonical_key(h, exceptional) + " < " + groups::canonical_key(g, exceptional);
  };

  for (const auto& e : ds.entries) {
    const bool exceptional = e.table == "exceptional";
    const auto insts = instances(e, bound);
    int eq2_fail = 0;
    std::string first;
    for (const auto& inst : insts) {
      if (!classifier::check_eq2(inst.G, inst.H).passes) {
        ++eq2_fail;
        if (first.empty()) first = inst.H.to_string() + "<" + inst.G.to_string();
      }
    }
    out.push_back(report::make("tables.eq2." + e.id, e.table + "/" + e.id,
                               {{"instances", std::to_string(insts.size())},
                                {"failures", std::to_string(eq2_fail)},
                                {"first_failure", first.empty() ? "-" : first}},
                               eq2_fail == 0 && !insts.empty()));

    if (e.table != "classical" && e.table != "exceptional") continue;
    if (e.chr != "any") {
      int leaked = 0;
      for (const auto& inst : insts) {
        const auto v = query(inst.H, inst.G, 0);
        for (const auto& m : v.matches)
          if (m.entry == &e) ++leaked;
      }
      out.push_back(report::make("tables.char." + e.id, e.table + "/" + e.id,
                                 {{"char", e.chr}, {"matches_at_p0", std::to_string(leaked)}}, leaked == 0));
    }
    if (!e.pair.empty()) {
      const Entry* partner = ds.find(e.pair);
      bool ok = true;
      std::string missing = "-";
      if (exceptional) {
        const auto a = instances(e, 0), b = instances(*partner, 0);
        ok = a.size() == 1 && b.size() == 1 && groups::dim(a[0].H) == groups::dim(b[0].H) &&
             a[0].G == b[0].G;
      } else {
        std::set<std::string> partner_keys;
        for (const auto& inst : instances(*partner, 2 * bound + 2)) partner_keys.insert(normalized_key(inst, false));
        for (const auto& inst : insts) {
          if (!partner_keys.count(normalized_key(inst, false))) {
            ok = false;
            missing = inst.H.to_string() + "<" + inst.G.to_string();
            break;
          }
        }
      }
      out.push_back(report::make("tables.pair." + e.id, e.table + "/" + e.id,
                                 {{"partner", e.pair}, {"unmatched", missing}}, ok));
    }
  }

  // G-completely reducible and non-G-cr records are themselves spherical pairs.
  for (const char* table : {"maximal-gcr", "nonmaximal-gcr", "non-gcr-levi", "non-gcr"}) {
    for (const Entry* e : ds.table(table)) {
      const auto& c = compiled_of(*e);
      long long p = 0;
      for (long long cand : {0LL, 2LL, 3LL, 5LL}) {
        if (char_allows(*e, cand)) {
          p = cand;
          break;
        }
      }
      int missing = 0;
      std::string first = "-";
      const auto insts = instances(*e, std::min(bound, 12));
      for (const auto& inst : insts) {
        Bindings b = inst.bindings;
        b['p'] = p;
        if (!c.chr.holds(b)) continue;
        if (query(inst.H, inst.G, p).status != Status::Spherical) {
          ++missing;
          if (first == "-") first = inst.H.to_string() + "<" + inst.G.to_string();
        }
      }
      out.push_back(report::make("tables.listed." + e->id, std::string(table) + "/" + e->id,
                                 {{"p", std::to_string(p)},
                                  {"instances", std::to_string(insts.size())},
                                  {"not_spherical", std::to_string(missing)},
                                  {"first", first}},
                                 missing == 0));
    }
  }
  report::sort_canonical(out);
  return out;
}

}  // namespace sphclass::catalog
