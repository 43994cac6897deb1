#include "sphclass/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "sphclass/errors.hpp"

namespace sphclass::rootsys {

namespace {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void link(IntMatrix& m, int i, int j) {
  m[i][j] = -1;
  m[j][i] = -1;
}

IntMatrix chain(int n) {
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
  return m;
}

std::vector<std::vector<int>> adjacency(const IntMatrix& cartan, const std::vector<int>& nodes) {
  std::vector<std::vector<int>> adj(nodes.size());
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = 0; b < nodes.size(); ++b)
      if (a != b && cartan[nodes[a]][nodes[b]] != 0) adj[a].push_back(static_cast<int>(b));
  return adj;
}

// Identifies a connected finite-type diagram given by local indices.
SimpleType identify_connected(const IntMatrix& cartan, const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 1) return {Family::A, 1};
  auto adj = adjacency(cartan, nodes);

  for (int a = 0; a < n; ++a) {
    for (int b : adj[a]) {
      const int prod = cartan[nodes[a]][nodes[b]] * cartan[nodes[b]][nodes[a]];
      if (prod == 3) return {Family::G, 2};
      if (prod == 2) {
        if (n == 2) return {Family::B, 2};
        if (adj[a].size() == 2 && adj[b].size() == 2) return {Family::F, 4};
        // The end node of the double bond is short for B, long for C.
        const int end = adj[a].size() == 1 ? a : b;
        const int inner = end == a ? b : a;
        const bool end_short = cartan[nodes[inner]][nodes[end]] == -2;
        return {end_short ? Family::B : Family::C, n};
      }
    }
  }

  int branch = -1;
  for (int a = 0; a < n; ++a)
    if (adj[a].size() == 3) branch = a;
  if (branch < 0) return {Family::A, n};

  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return {Family::E, n};
  throw Error("diagram is not of finite type");
}

}  // namespace

std::string SimpleType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

SimpleType SimpleType::parse(std::string_view text) {
  const std::string input(text);
  if (text.size() < 2) throw ParseError("expected a Cartan type such as A4 or E8", input, 0);
  const char f = text[0];
  if (std::string_view("ABCDEFG").find(f) == std::string_view::npos)
    throw ParseError("unknown Cartan family", input, 0);
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected a decimal rank", input, i);
    rank = rank * 10 + (text[i] - '0');
    if (rank > 1000) throw InvalidRank("rank too large: " + input);
  }
  SimpleType t{static_cast<Family>(f), rank};
  validate(t);
  return t;
}

void validate(SimpleType t) {
  const int r = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = r >= 1; break;
    case Family::B:
    case Family::C: ok = r >= 2; break;
    case Family::D:
      if (r == 2) throw NonSimple("D2 = A1 x A1 is not simple");
      ok = r >= 3;
      break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok) throw InvalidRank("invalid rank for Cartan type " + t.name());
}

SimpleType canonicalize(SimpleType t) {
  validate(t);
  if (t.family == Family::D && t.rank == 3) return {Family::A, 3};
  if (t.family == Family::C && t.rank == 2) return {Family::B, 2};
  return t;
}

IntMatrix cartan_matrix(SimpleType t) {
  validate(t);
  const int n = t.rank;
  IntMatrix m = chain(n);
  switch (t.family) {
    case Family::A: break;
    case Family::B:
      m[n - 2][n - 1] = -2;  // alpha_n short
      break;
    case Family::C:
      m[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case Family::D:
      m[n - 2][n - 1] = m[n - 1][n - 2] = 0;
      link(m, n - 3, n - 1);
      break;
    case Family::E:
      // 1-3-4-5-6-7-8 with 2 attached to 4
      m = chain(n);
      for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 0;
      link(m, 0, 2);
      link(m, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(m, i, i + 1);
      break;
    case Family::F:
      m[1][2] = -2;  // alpha_2 long, alpha_3 short
      break;
    case Family::G:
      m[1][0] = -3;  // alpha_1 short
      break;
  }
  return m;
}

std::vector<std::int64_t> symmetrizer(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.size());
  // Values start at 6 so that every ratio in {1/3, 1/2, 2, 3} stays integral.
  std::vector<std::int64_t> d(n, 0);
  for (int root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    std::vector<int> component{root};
    d[root] = 6;
    for (std::size_t k = 0; k < component.size(); ++k) {
      const int i = component[k];
      for (int j = 0; j < n; ++j) {
        if (j == i || cartan[i][j] == 0 || d[j] != 0) continue;
        // cartan[i][j] * d_j = cartan[j][i] * d_i
        d[j] = d[i] * cartan[j][i] / cartan[i][j];
        component.push_back(j);
      }
    }
    std::int64_t lo = d[root];
    for (int i : component) lo = std::min(lo, d[i]);
    for (int i : component) d[i] /= lo;
  }
  return d;
}

RootSystem::RootSystem(SimpleType t)
    : type_(t), cartan_(cartan_matrix(t)), symmetrizer_(rootsys::symmetrizer(cartan_)) {
  const int n = t.rank;
  std::set<IntVector> known;
  std::vector<IntVector> level;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    known.insert(e);
    level.push_back(e);
  }
  positive_roots_ = level;

  while (!level.empty()) {
    std::set<IntVector> next;
    for (const auto& beta : level) {
      for (int j = 0; j < n; ++j) {
        // alpha_j-string through beta: p - q = <beta, alpha_j^vee>.
        std::int64_t pairing = 0;
        for (int i = 0; i < n; ++i) pairing += beta[i] * cartan_[i][j];
        int p = 0;
        IntVector down = beta;
        while (true) {
          down[j] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          IntVector up = beta;
          up[j] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& r : level) {
      known.insert(r);
      positive_roots_.push_back(r);
    }
  }
  auto height = [](const IntVector& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
  std::sort(positive_roots_.begin(), positive_roots_.end(), [&](const IntVector& a, const IntVector& b) {
    const auto ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
}

IntVector RootSystem::simple_root_as_weight(int i) const {
  return IntVector(cartan_[i].begin(), cartan_[i].end());
}

IntVector RootSystem::highest_root_weight() const {
  const IntVector& top = positive_roots_.back();
  IntVector w(rank(), 0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) w[j] += top[i] * cartan_[i][j];
  return w;
}

std::int64_t RootSystem::scaled_coroot_pairing(const IntVector& weight_fund, const IntVector& root) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank(); ++i) s += root[i] * symmetrizer_[i] * weight_fund[i];
  return s;
}

const RootSystem& root_system(SimpleType t) {
  static std::mutex mutex;
  static std::map<SimpleType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, std::make_unique<RootSystem>(t)).first;
  return *it->second;
}

std::vector<IntVector> positive_roots(SimpleType t) { return root_system(t).positive_roots(); }

int dim_group(SimpleType t) { return root_system(t).dim_group(); }

BigInt weyl_order(SimpleType t) {
  validate(t);
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (BigInt(1) << n) * factorial(n);
    case Family::D: return (BigInt(1) << (n - 1)) * factorial(n);
    case Family::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

int dim_group_closed_form(SimpleType t) {
  validate(t);
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

std::vector<SimpleType> subdiagram_components(const IntMatrix& cartan, const std::vector<int>& nodes) {
  std::vector<SimpleType> out;
  std::vector<bool> seen(nodes.size(), false);
  auto adj = adjacency(cartan, nodes);
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{static_cast<int>(s)};
    seen[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int b : adj[comp[k]])
        if (!seen[b]) {
          seen[b] = true;
          comp.push_back(b);
        }
    std::vector<int> global;
    for (int c : comp) global.push_back(nodes[c]);
    std::sort(global.begin(), global.end());
    out.push_back(identify_connected(cartan, global));
  }
  return out;
}

BigInt parabolic_order(const IntMatrix& cartan, const std::vector<int>& nodes) {
  BigInt order = 1;
  for (SimpleType c : subdiagram_components(cartan, nodes)) order *= weyl_order(c);
  return order;
}

std::vector<std::vector<int>> diagram_automorphisms(SimpleType t) {
  const IntMatrix m = cartan_matrix(t);
  const int n = t.rank;
  std::vector<std::vector<int>> found;
  std::vector<int> sigma(n, -1);
  std::vector<bool> used(n, false);

  auto extend = [&](auto&& self, int i) -> void {
    if (i == n) {
      found.push_back(sigma);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k)
        ok = m[c][sigma[k]] == m[i][k] && m[sigma[k]][c] == m[k][i];
      if (!ok) continue;
      sigma[i] = c;
      used[c] = true;
      self(self, i + 1);
      used[c] = false;
    }
    sigma[i] = -1;
  };
  extend(extend, 0);
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<int> opposition_involution(SimpleType t) {
  const RootSystem& rs = root_system(t);
  const int n = rs.rank();
  // Walk rho to -rho by simple reflections; the same word is w0.
  IntVector rho(n, 1);
  std::vector<IntVector> images(n, IntVector(n, 0));
  for (int k = 0; k < n; ++k) images[k][k] = 1;

  auto reflect = [&](IntVector& v, int i) {
    const std::int64_t c = v[i];
    if (c == 0) return;
    for (int j = 0; j < n; ++j) v[j] -= c * rs.cartan()[i][j];
  };
  while (true) {
    int i = 0;
    while (i < n && rho[i] <= 0) ++i;
    if (i == n) break;
    reflect(rho, i);
    for (auto& img : images) reflect(img, i);
  }
  std::vector<int> tau(n, -1);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j)
      if (images[k][j] == -1) tau[k] = j;
  }
  return tau;
}

}  // namespace sphclass::rootsys
