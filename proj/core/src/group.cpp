#include "gau/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gau {
namespace {

// Exhaustive associativity and inverse check for small tables, sampled above.
void validate_table(const GroupTable& G) {
  int n = G.order;
  if (n <= 0) fail(errc::internal, "empty group table");
  for (int a = 0; a < n; ++a) {
    if (G.at(0, a) != a || G.at(a, 0) != a) fail(errc::internal, "identity is not element 0");
    if (G.at(a, G.inv[std::size_t(a)]) != 0) fail(errc::internal, "bad inverse table");
  }
  auto check = [&](int a, int b, int c) {
    if (G.at(G.at(a, b), c) != G.at(a, G.at(b, c)))
      fail(errc::internal, "multiplication table is not associative");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&]() {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    for (int i = 0; i < 20000; ++i)
      check(int(next() % n), int(next() % n), int(next() % n));
  }
}

std::string power_name(const std::string& gen, int e) {
  if (e == 0) return "";
  if (e == 1) return gen;
  return gen + "^" + std::to_string(e);
}

std::string join_name(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

}  // namespace

int GroupTable::pow(int g, std::uint64_t e) const {
  int acc = 0, base = g;
  while (e > 0) {
    if (e & 1) acc = at(acc, base);
    base = at(base, base);
    e >>= 1;
  }
  return acc;
}

int GroupTable::element_order(int g) const {
  int e = 1, cur = g;
  while (cur != 0) {
    cur = at(cur, g);
    ++e;
  }
  return e;
}

int GroupTable::generator(std::string_view name) const {
  for (const auto& [n, g] : generators)
    if (n == name) return g;
  fail(errc::parse, "unknown generator name: " + std::string(name));
}

GroupTable cyclic_group(int n) {
  if (n < 1) fail(errc::parse, "cyclic group order must be >= 1");
  GroupTable G;
  G.order = n;
  G.mul.resize(std::size_t(n) * n);
  G.inv.resize(std::size_t(n));
  G.names.resize(std::size_t(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) G.mul[std::size_t(a) * n + b] = (a + b) % n;
    G.inv[std::size_t(a)] = (n - a) % n;
    G.names[std::size_t(a)] = a == 0 ? "1" : power_name("z", a);
  }
  if (n > 1) G.generators = {{"z", 1}};
  G.spec = "C" + std::to_string(n);
  validate_table(G);
  return G;
}

GroupTable dihedral_group(int n) {
  if (n < 2 || n % 2 != 0)
    fail(errc::odd_dihedral, "dihedral group order must be even and >= 2, got " + std::to_string(n));
  int m = n / 2;  // rotation subgroup order
  // index b < m: rotation y^b; index m+b: reflection x*y^b
  GroupTable G;
  G.order = n;
  G.mul.resize(std::size_t(n) * n);
  G.inv.resize(std::size_t(n));
  G.names.resize(std::size_t(n));
  auto idx = [&](int flip, int rot) { return flip * m + ((rot % m) + m) % m; };
  for (int f1 = 0; f1 < 2; ++f1)
    for (int r1 = 0; r1 < m; ++r1)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int r2 = 0; r2 < m; ++r2) {
          // (x^f1 y^r1)(x^f2 y^r2) = x^(f1+f2) y^(r1*(-1)^f2 + r2)
          int f = (f1 + f2) % 2;
          int r = (f2 == 1 ? -r1 : r1) + r2;
          G.mul[std::size_t(idx(f1, r1)) * n + idx(f2, r2)] = idx(f, r);
        }
  for (int f = 0; f < 2; ++f)
    for (int r = 0; r < m; ++r) G.inv[std::size_t(idx(f, r))] = f == 1 ? idx(1, r) : idx(0, -r);
  for (int f = 0; f < 2; ++f)
    for (int r = 0; r < m; ++r) {
      std::string nm = join_name(f ? "x" : "", power_name("y", r));
      G.names[std::size_t(idx(f, r))] = nm.empty() ? "1" : nm;
    }
  G.generators = {{"x", idx(1, 0)}};
  if (m > 1) G.generators.emplace_back("y", idx(0, 1));
  G.spec = "D" + std::to_string(n);
  validate_table(G);
  return G;
}

GroupTable direct_product(const GroupTable& A, const GroupTable& B) {
  GroupTable G;
  int n = A.order * B.order;
  G.order = n;
  G.mul.resize(std::size_t(n) * n);
  G.inv.resize(std::size_t(n));
  G.names.resize(std::size_t(n));
  auto idx = [&](int a, int b) { return a * B.order + b; };
  for (int a1 = 0; a1 < A.order; ++a1)
    for (int b1 = 0; b1 < B.order; ++b1)
      for (int a2 = 0; a2 < A.order; ++a2)
        for (int b2 = 0; b2 < B.order; ++b2)
          G.mul[std::size_t(idx(a1, b1)) * n + idx(a2, b2)] = idx(A.at(a1, a2), B.at(b1, b2));
  for (int a = 0; a < A.order; ++a)
    for (int b = 0; b < B.order; ++b) {
      G.inv[std::size_t(idx(a, b))] = idx(A.inv[std::size_t(a)], B.inv[std::size_t(b)]);
      std::string nm = join_name(a == 0 ? "" : A.names[std::size_t(a)],
                                 b == 0 ? "" : B.names[std::size_t(b)]);
      G.names[std::size_t(idx(a, b))] = nm.empty() ? "1" : nm;
    }

  // Generators from both factors, renaming on collision: x,y keep per-factor
  // suffixes; cyclic z gets z2, z3, ...
  std::set<std::string> used;
  auto add_gens = [&](const GroupTable& S, bool left) {
    for (const auto& [name, g] : S.generators) {
      std::string nm = name;
      int suffix = 2;
      while (used.count(nm)) nm = name + std::to_string(suffix++);
      used.insert(nm);
      G.generators.emplace_back(nm, left ? idx(g, 0) : idx(0, g));
    }
  };
  add_gens(A, true);
  add_gens(B, false);
  validate_table(G);
  return G;
}

GroupTable build_group(std::string_view spec) {
  if (spec.empty()) fail(errc::parse, "empty group spec", 0);
  std::vector<GroupTable> terms;
  std::size_t i = 0;
  while (true) {
    if (i >= spec.size()) fail(errc::parse, "expected group term", i);
    char kind = spec[i];
    if (kind != 'C' && kind != 'D')
      fail(errc::parse, std::string("expected 'C' or 'D', got '") + kind + "'", i);
    std::size_t start = ++i;
    while (i < spec.size() && spec[i] >= '0' && spec[i] <= '9') ++i;
    if (i == start) fail(errc::parse, "expected digits after group kind", start);
    long n = 0;
    for (std::size_t j = start; j < i; ++j) {
      n = n * 10 + (spec[j] - '0');
      if (n > 100000) fail(errc::parse, "group order too large", start);
    }
    if (kind == 'C') {
      if (n < 1) fail(errc::parse, "cyclic order must be >= 1", start);
      terms.push_back(cyclic_group(int(n)));
    } else {
      if (n < 2 || n % 2 != 0)
        fail(errc::odd_dihedral,
             "dihedral group D" + std::to_string(n) + " must have even order >= 2", start);
      terms.push_back(dihedral_group(int(n)));
    }
    if (i == spec.size()) break;
    if (spec[i] != 'x') fail(errc::parse, std::string("expected 'x', got '") + spec[i] + "'", i);
    ++i;
  }
  GroupTable G = terms[0];
  for (std::size_t t = 1; t < terms.size(); ++t) G = direct_product(G, terms[t]);
  G.spec = std::string(spec);
  return G;
}

ClassPartition conjugacy_classes(const GroupTable& G) {
  ClassPartition out;
  out.class_of.assign(std::size_t(G.order), -1);
  for (int g = 0; g < G.order; ++g) {
    if (out.class_of[std::size_t(g)] >= 0) continue;
    std::set<int> cls;
    for (int h = 0; h < G.order; ++h)
      cls.insert(G.at(G.at(h, g), G.inv[std::size_t(h)]));
    int id = int(out.classes.size());
    for (int e : cls) out.class_of[std::size_t(e)] = id;
    out.classes.emplace_back(cls.begin(), cls.end());
    out.representative.push_back(*cls.begin());
  }
  return out;
}

PRegular p_regular_classes(const GroupTable& G, std::uint64_t p) {
  ClassPartition all = conjugacy_classes(G);
  PRegular out;
  out.classes.class_of.assign(std::size_t(G.order), -1);
  for (std::size_t c = 0; c < all.classes.size(); ++c) {
    int rep = all.representative[c];
    int ord = G.element_order(rep);
    if (std::uint64_t(ord) % p == 0) continue;
    int id = int(out.classes.classes.size());
    for (int e : all.classes[c]) out.classes.class_of[std::size_t(e)] = id;
    out.classes.classes.push_back(all.classes[c]);
    out.classes.representative.push_back(rep);
    out.m = std::lcm(out.m, std::uint64_t(ord));
  }
  return out;
}

std::vector<int> subgroup_generated(const GroupTable& G, const std::vector<int>& gens) {
  std::set<int> have{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int h : frontier)
      for (int g : gens) {
        int e = G.at(h, g);
        if (have.insert(e).second) next.push_back(e);
        e = G.at(h, G.inv[std::size_t(g)]);
        if (have.insert(e).second) next.push_back(e);
      }
    frontier = std::move(next);
  }
  return {have.begin(), have.end()};
}

std::vector<int> derived_subgroup(const GroupTable& G) {
  std::vector<int> comms;
  std::set<int> seen;
  for (int a = 0; a < G.order; ++a)
    for (int b = 0; b < G.order; ++b) {
      int c = G.at(G.at(G.inv[std::size_t(a)], G.inv[std::size_t(b)]), G.at(a, b));
      if (seen.insert(c).second) comms.push_back(c);
    }
  return subgroup_generated(G, comms);
}

bool is_abelian(const GroupTable& G) {
  for (int a = 0; a < G.order; ++a)
    for (int b = a + 1; b < G.order; ++b)
      if (G.at(a, b) != G.at(b, a)) return false;
  return true;
}

Quotient quotient_by(const GroupTable& G, const std::vector<int>& normal) {
  std::set<int> N(normal.begin(), normal.end());
  if (!N.count(0)) fail(errc::not_normal, "subgroup must contain the identity");
  for (int a : N)
    for (int b : N)
      if (!N.count(G.at(a, b))) fail(errc::not_normal, "set is not closed under multiplication");
  for (int g = 0; g < G.order; ++g)
    for (int a : N)
      if (!N.count(G.at(G.at(g, a), G.inv[std::size_t(g)])))
        fail(errc::not_normal, "subgroup is not normal: conjugate of " + G.names[std::size_t(a)] +
                                   " by " + G.names[std::size_t(g)] + " escapes");

  // cosets keyed by minimal element
  std::vector<int> coset_min(std::size_t(G.order), -1);
  std::vector<int> reps;
  for (int g = 0; g < G.order; ++g) {
    if (coset_min[std::size_t(g)] >= 0) continue;
    std::set<int> coset;
    for (int a : N) coset.insert(G.at(g, a));
    int mn = *coset.begin();
    for (int e : coset) coset_min[std::size_t(e)] = mn;
    reps.push_back(mn);
  }
  std::sort(reps.begin(), reps.end());

  Quotient out;
  int q = int(reps.size());
  out.group.order = q;
  out.group.mul.resize(std::size_t(q) * q);
  out.group.inv.resize(std::size_t(q));
  out.group.names.resize(std::size_t(q));
  out.proj.resize(std::size_t(G.order));
  auto coset_index = [&](int g) {
    int mn = coset_min[std::size_t(g)];
    return int(std::lower_bound(reps.begin(), reps.end(), mn) - reps.begin());
  };
  for (int g = 0; g < G.order; ++g) out.proj[std::size_t(g)] = coset_index(g);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      out.group.mul[std::size_t(i) * q + j] = coset_index(G.at(reps[std::size_t(i)], reps[std::size_t(j)]));
  for (int i = 0; i < q; ++i) out.group.inv[std::size_t(i)] = coset_index(G.inv[std::size_t(reps[std::size_t(i)])]);
  for (int i = 0; i < q; ++i) out.group.names[std::size_t(i)] = "[" + G.names[std::size_t(reps[std::size_t(i)])] + "]";
  out.group.spec = G.spec.empty() ? "quotient" : G.spec + "/N";
  validate_table(out.group);
  return out;
}

DerivedQuotient derived_quotient(const GroupTable& G) {
  DerivedQuotient out;
  out.derived = derived_subgroup(G);
  out.quotient = quotient_by(G, out.derived);
  return out;
}

}  // namespace gau
