#include "sphclass/groups.hpp"

#include <algorithm>
#include <cctype>
#include <climits>

#include "sphclass/errors.hpp"

namespace sphclass::groups {

namespace {

using rootsys::Family;

bool is_prime_power(long long q) {
  if (q < 2) return false;
  long long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupDescriptor run() {
    GroupDescriptor g;
    skip_ws();
    if (at_end()) fail("empty descriptor");
    g.factors.push_back(factor());
    while (true) {
      skip_ws();
      if (at_end()) break;
      const std::size_t sep_at = pos_;
      Join j;
      if (consume("(x)")) {
        j = Join::Tensor;
      } else if (consume("x")) {
        j = Join::Product;
      } else if (consume("*")) {
        if (g.factors.back().kind != FactorKind::Torus)
          fail("'*' joins a central torus and must follow Gm", sep_at);
        j = Join::Central;
      } else {
        fail("expected 'x', '*' or '(x)' between factors");
      }
      skip_ws();
      if (at_end()) fail("expected a factor after separator");
      g.joins.push_back(j);
      g.factors.push_back(factor());
    }
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, std::string(text_), at);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view tok) {
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int number() {
    skip_ws();
    const std::size_t start = pos_;
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 100000) fail("number too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected a non-negative integer");
    return static_cast<int>(v);
  }

  int paren_number() {
    expect('(');
    const int v = number();
    expect(')');
    return v;
  }

  Factor factor() {
    const std::size_t start = pos_;
    // Longest names first so that "SGL" is not read as "S...".
    if (consume("SGL")) {
      expect('(');
      const int m = number();
      expect(',');
      const int n = number();
      expect(')');
      if (m < 1 || n < 1) fail("SGL(m,n) needs m, n >= 1", start);
      return Factor::sgl(m, n);
    }
    if (consume("SL")) {
      const int n = paren_number();
      if (n < 1) fail("SL(n) needs n >= 1", start);
      return Factor::classical(FactorKind::SL, n);
    }
    if (consume("SO")) {
      const int n = paren_number();
      if (n < 1) fail("SO(n) needs n >= 1", start);
      return Factor::classical(FactorKind::SO, n);
    }
    if (consume("Spin")) {
      const int n = paren_number();
      if (n < 1) fail("Spin(n) needs n >= 1", start);
      return Factor::classical(FactorKind::Spin, n);
    }
    if (consume("Sp")) {
      const int n = paren_number();
      if (n % 2 != 0) throw InvalidFactor("Sp(n) needs n even, got Sp(" + std::to_string(n) + ")");
      return Factor::classical(FactorKind::Sp, n);
    }
    if (consume("GL")) {
      const int n = paren_number();
      if (n < 1) fail("GL(n) needs n >= 1", start);
      return Factor::classical(FactorKind::GL, n);
    }
    if (consume("Gm")) return Factor::torus();
    if (consume("DeltaSL2")) {
      expect('(');
      skip_ws();
      if (!consume("q")) fail("expected 'q='");
      expect('=');
      const int q = number();
      expect(')');
      if (!is_prime_power(q)) throw InvalidFactor("DeltaSL2 needs q a prime power > 1");
      return Factor::twisted_sl2(q);
    }
    if (consume("At")) {
      const int r = number();
      if (r != 1 && r != 2) fail("short-root subgroups are At1 and At2", start);
      return Factor::short_root(r);
    }
    if (consume("1")) return Factor::trivial();
    if (!at_end() && std::string_view("ABCDEFG").find(text_[pos_]) != std::string_view::npos) {
      const char fam = text_[pos_++];
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected a rank after the Cartan family", pos_);
      const int r = number();
      const SimpleType t{static_cast<Family>(fam), r};
      rootsys::validate(t);
      if (fam >= 'E') return Factor::exceptional(t);
      return Factor::type_atom(t);
    }
    fail("unknown group name");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string paren(const char* name, int n) { return std::string(name) + "(" + std::to_string(n) + ")"; }

// Appends the canonical atoms of one factor.
void classical_atoms(const Factor& f, std::vector<std::string>& out) {
  auto sl = [&](int n) {
    if (n == 2) out.push_back("Sp(2)");
    else if (n > 2) out.push_back(paren("SL", n));
  };
  switch (f.kind) {
    case FactorKind::Trivial: break;
    case FactorKind::Torus: out.push_back("Gm"); break;
    case FactorKind::SL: sl(f.n); break;
    case FactorKind::GL:
      out.push_back("Gm");
      sl(f.n);
      break;
    case FactorKind::SGL:
      out.push_back("Gm");
      sl(f.m);
      sl(f.n);
      break;
    case FactorKind::SO:
      if (f.n == 2) out.push_back("Gm");
      else if (f.n > 2) out.push_back(paren("SO", f.n));
      break;
    case FactorKind::Sp:
      if (f.n > 0) out.push_back(paren("Sp", f.n));
      break;
    case FactorKind::Spin:
      switch (f.n) {
        case 1: break;
        case 2: out.push_back("Gm"); break;
        case 3: out.push_back("Sp(2)"); break;
        case 4:
          out.push_back("Sp(2)");
          out.push_back("Sp(2)");
          break;
        case 5: out.push_back("Sp(4)"); break;
        case 6: out.push_back("SL(4)"); break;
        default: out.push_back(paren("Spin", f.n));
      }
      break;
    case FactorKind::TypeAtom:
      throw AmbiguousDescriptor("root-system type " + f.type.name() +
                                " does not determine an embedding in a classical group; use SL/SO/Sp");
    case FactorKind::Exceptional:
    case FactorKind::ShortRoot:
    case FactorKind::TwistedSL2: out.push_back(f.to_string()); break;
  }
}

void type_atom(SimpleType t, std::vector<std::string>& out) {
  if (t.family == Family::D && t.rank == 2) {
    out.push_back("A1");
    out.push_back("A1");
    return;
  }
  if (t.rank == 1) {
    out.push_back("A1");
    return;
  }
  out.push_back(rootsys::canonicalize(t).name());
}

void orthogonal_type(int n, std::vector<std::string>& out) {
  if (n == 1) return;
  if (n == 2) {
    out.push_back("Gm");
    return;
  }
  type_atom(n % 2 ? SimpleType{Family::B, n / 2} : SimpleType{Family::D, n / 2}, out);
}

void exceptional_atoms(const Factor& f, std::vector<std::string>& out) {
  auto sl = [&](int n) {
    if (n > 1) type_atom({Family::A, n - 1}, out);
  };
  switch (f.kind) {
    case FactorKind::Trivial: break;
    case FactorKind::Torus: out.push_back("Gm"); break;
    case FactorKind::SL: sl(f.n); break;
    case FactorKind::GL:
      out.push_back("Gm");
      sl(f.n);
      break;
    case FactorKind::SGL:
      out.push_back("Gm");
      sl(f.m);
      sl(f.n);
      break;
    case FactorKind::SO:
    case FactorKind::Spin: orthogonal_type(f.n, out); break;
    case FactorKind::Sp:
      if (f.n > 0) type_atom({Family::C, f.n / 2}, out);
      break;
    case FactorKind::TypeAtom: type_atom(f.type, out); break;
    case FactorKind::TwistedSL2: out.push_back("A1"); break;
    case FactorKind::Exceptional:
    case FactorKind::ShortRoot: out.push_back(f.to_string()); break;
  }
}

}  // namespace

Factor Factor::classical(FactorKind kind, int n) { return {kind, n, 0, {}}; }
Factor Factor::sgl(int m, int n) { return {FactorKind::SGL, n, m, {}}; }
Factor Factor::torus() { return {FactorKind::Torus, 1, 0, {}}; }
Factor Factor::twisted_sl2(int q) { return {FactorKind::TwistedSL2, q, 0, {}}; }
Factor Factor::exceptional(SimpleType t) { return {FactorKind::Exceptional, t.rank, 0, t}; }
Factor Factor::type_atom(SimpleType t) { return {FactorKind::TypeAtom, t.rank, 0, t}; }
Factor Factor::short_root(int rank) {
  return {FactorKind::ShortRoot, rank, 0, SimpleType{Family::A, rank}};
}
Factor Factor::trivial() { return {FactorKind::Trivial, 0, 0, {}}; }

int Factor::dim() const {
  switch (kind) {
    case FactorKind::SL: return n * n - 1;
    case FactorKind::SO:
    case FactorKind::Spin: return n * (n - 1) / 2;
    case FactorKind::Sp: return n * (n + 1) / 2;
    case FactorKind::GL: return n * n;
    case FactorKind::SGL: return m * m + n * n - 1;
    case FactorKind::Torus: return 1;
    case FactorKind::TwistedSL2: return 3;
    case FactorKind::Exceptional:
    case FactorKind::TypeAtom:
    case FactorKind::ShortRoot: return rootsys::dim_group(type);
    case FactorKind::Trivial: return 0;
  }
  return 0;
}

int Factor::rank() const {
  switch (kind) {
    case FactorKind::SL: return n - 1;
    case FactorKind::SO:
    case FactorKind::Spin:
    case FactorKind::Sp: return n / 2;
    case FactorKind::GL: return n;
    case FactorKind::SGL: return m + n - 1;
    case FactorKind::Torus:
    case FactorKind::TwistedSL2: return 1;
    case FactorKind::Exceptional:
    case FactorKind::TypeAtom:
    case FactorKind::ShortRoot: return type.rank;
    case FactorKind::Trivial: return 0;
  }
  return 0;
}

std::string Factor::to_string() const {
  switch (kind) {
    case FactorKind::SL: return paren("SL", n);
    case FactorKind::SO: return paren("SO", n);
    case FactorKind::Sp: return paren("Sp", n);
    case FactorKind::GL: return paren("GL", n);
    case FactorKind::Spin: return paren("Spin", n);
    case FactorKind::SGL: return "SGL(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case FactorKind::Torus: return "Gm";
    case FactorKind::TwistedSL2: return "DeltaSL2(q=" + std::to_string(n) + ")";
    case FactorKind::Exceptional:
    case FactorKind::TypeAtom: return type.name();
    case FactorKind::ShortRoot: return "At" + std::to_string(n);
    case FactorKind::Trivial: return "1";
  }
  return "?";
}

bool GroupDescriptor::has_tensor() const {
  return std::find(joins.begin(), joins.end(), Join::Tensor) != joins.end();
}

std::string GroupDescriptor::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) {
      switch (joins[i - 1]) {
        case Join::Product: out += "x"; break;
        case Join::Central: out += "*"; break;
        case Join::Tensor: out += "(x)"; break;
      }
    }
    out += factors[i].to_string();
  }
  return out;
}

GroupDescriptor parse(std::string_view text) { return Parser(text).run(); }

int dim(const GroupDescriptor& g) {
  int d = 0;
  for (const auto& f : g.factors) d += f.dim();
  return d;
}

int rank(const GroupDescriptor& g) {
  int r = 0;
  for (const auto& f : g.factors) r += f.rank();
  return r;
}

int dim_flag(const GroupDescriptor& g) {
  const int diff = dim(g) - rank(g);
  if (diff % 2 != 0) throw Error("odd dim - rank for " + g.to_string());
  return diff / 2;
}

Normalized normalize_strictly_classical(const GroupDescriptor& g, long long p) {
  Normalized out{g, {}};
  if (p != 2) return out;
  for (auto& f : out.group.factors) {
    if (f.kind == FactorKind::SO && f.n % 2 == 1 && f.n >= 3) {
      const std::string before = f.to_string();
      f = Factor::classical(FactorKind::Sp, f.n - 1);
      out.trace.push_back(before + "->" + f.to_string());
    }
  }
  return out;
}

SimpleTypeResult simple_type_of(const GroupDescriptor& g) {
  if (!g.is_single()) return {std::nullopt, "product of " + std::to_string(g.factors.size()) + " factors"};
  const Factor& f = g.factors.front();
  auto of = [](SimpleType t) -> SimpleTypeResult { return {rootsys::canonicalize(t), {}}; };
  switch (f.kind) {
    case FactorKind::SL:
      if (f.n >= 2) return of({Family::A, f.n - 1});
      break;
    case FactorKind::Sp:
      if (f.n == 2) return of({Family::A, 1});
      if (f.n >= 4) return {SimpleType{Family::C, f.n / 2}, {}};
      break;
    case FactorKind::SO:
    case FactorKind::Spin:
      if (f.n == 2) return {std::nullopt, f.to_string() + " is a torus"};
      if (f.n == 4) return {std::nullopt, f.to_string() + " is of type A1 x A1"};
      if (f.n == 3) return of({Family::A, 1});
      if (f.n % 2 == 1 && f.n >= 5) return {SimpleType{Family::B, f.n / 2}, {}};
      if (f.n >= 6) return of({Family::D, f.n / 2});
      break;
    case FactorKind::Exceptional:
    case FactorKind::TypeAtom:
    case FactorKind::ShortRoot: return {f.type, {}};
    case FactorKind::TwistedSL2: return {SimpleType{Family::A, 1}, {}};
    case FactorKind::GL:
    case FactorKind::SGL: return {std::nullopt, f.to_string() + " has a central torus"};
    case FactorKind::Torus: return {std::nullopt, "Gm is a torus"};
    case FactorKind::Trivial: break;
  }
  return {std::nullopt, f.to_string() + " is trivial"};
}

std::optional<Factor> as_classical_ambient(const GroupDescriptor& g) {
  if (!g.is_single()) return std::nullopt;
  const Factor& f = g.factors.front();
  switch (f.kind) {
    case FactorKind::SL:
    case FactorKind::SO:
    case FactorKind::Sp: return f;
    case FactorKind::Spin: return Factor::classical(FactorKind::SO, f.n);
    case FactorKind::TypeAtom:
      switch (f.type.family) {
        case Family::A: return Factor::classical(FactorKind::SL, f.type.rank + 1);
        case Family::B: return Factor::classical(FactorKind::SO, 2 * f.type.rank + 1);
        case Family::C: return Factor::classical(FactorKind::Sp, 2 * f.type.rank);
        case Family::D: return Factor::classical(FactorKind::SO, 2 * f.type.rank);
        default: return std::nullopt;
      }
    default: return std::nullopt;
  }
}

std::string canonical_key(const GroupDescriptor& g, bool exceptional_ambient) {
  std::vector<std::string> atoms;
  for (const auto& f : g.factors) {
    if (exceptional_ambient) exceptional_atoms(f, atoms);
    else classical_atoms(f, atoms);
  }
  std::sort(atoms.begin(), atoms.end());
  if (atoms.empty()) return "1";
  std::string key;
  for (const auto& a : atoms) {
    if (!key.empty()) key += 'x';
    key += a;
  }
  return key;
}

}  // namespace sphclass::groups
