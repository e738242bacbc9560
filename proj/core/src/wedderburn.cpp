#include "gau/wedderburn.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "gau/error.hpp"
#include "gau/poly.hpp"

namespace gau {

Decomposition decomposition_from(std::vector<SimpleComponent> comps) {
  std::vector<std::pair<int, int>> flat;
  for (const auto& c : comps)
    for (int i = 0; i < c.count; ++i) flat.emplace_back(c.n, c.d);
  std::sort(flat.begin(), flat.end());
  Decomposition out;
  for (const auto& [n, d] : flat) {
    if (!out.components.empty() && out.components.back().n == n && out.components.back().d == d)
      ++out.components.back().count;
    else
      out.components.push_back({n, d, 1});
    ++out.r;
    if (n == 1) ++out.s;
    out.total_dim += n * n * d;
  }
  return out;
}

std::vector<int> FerrazData::orbit_sizes() const {
  std::vector<int> out;
  out.reserve(orbits.size());
  for (const auto& o : orbits) out.push_back(int(o.size()));
  return out;
}

int FerrazData::orbit_size_of(int g) const {
  int cls = regular.classes.class_of[std::size_t(g)];
  if (cls < 0) fail(errc::internal, "element is not p-regular");
  for (const auto& o : orbits)
    if (std::find(o.begin(), o.end(), cls) != o.end()) return int(o.size());
  fail(errc::internal, "class not covered by any orbit");
}

FerrazData cyclotomic_classes(const GroupTable& G, std::uint64_t p, std::uint64_t q) {
  FerrazData out;
  out.regular = p_regular_classes(G, p);
  out.m = out.regular.m;
  int nc = int(out.regular.classes.classes.size());
  std::vector<bool> seen(std::size_t(nc), false);
  for (int c = 0; c < nc; ++c) {
    if (seen[std::size_t(c)]) continue;
    std::vector<int> orbit;
    int cur = c;
    while (!seen[std::size_t(cur)]) {
      seen[std::size_t(cur)] = true;
      orbit.push_back(cur);
      int img = G.pow(out.regular.classes.representative[std::size_t(cur)], q);
      cur = out.regular.classes.class_of[std::size_t(img)];
      if (cur < 0) fail(errc::internal, "q-power left the p-regular classes");
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

std::uint64_t order_mod(std::uint64_t q, std::uint64_t m) {
  if (m == 0 || std::gcd(q, m) != 1) fail(errc::internal, "order_mod needs gcd(q, m) = 1");
  std::uint64_t cur = q % m, ord = 1;
  while (cur != 1 % m) {
    cur = cur * q % m;
    ++ord;
    if (ord > m) fail(errc::internal, "order_mod did not terminate");
  }
  return ord;
}

namespace {

Poly poly_invmod(const Poly& a, const Poly& mod, const Fq& F) {
  // Extended Euclid: r0 = mod, r1 = a mod mod; track t with t * a = r mod mod.
  Poly r0 = mod, r1 = poly_mod(a, mod, F);
  Poly t0 = poly_const(0), t1 = poly_const(1);
  while (!r1.is_zero()) {
    PolyDivMod dm = poly_divmod(r0, r1, F);
    Poly r2 = dm.rem;
    Poly t2 = poly_sub(t0, poly_mul(dm.quot, t1, F), F);
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.deg() != 0) fail(errc::internal, "polynomial is not invertible modulo the given modulus");
  return poly_mod(poly_scale(t0, F.inv(r0.lead()), F), mod, F);
}

struct Block {
  std::vector<Fe> e;  // idempotent, coords in A
  Subspace Ze;        // center * e
};

// Minimal polynomial of multiplication-by-z on the block with unit e, via
// the first linear dependency among e, z, z^2, ...
Poly block_minpoly(const Algebra& A, const std::vector<Fe>& e, const std::vector<Fe>& z,
                   const Subspace& Ze) {
  const Fq& F = A.F;
  int d = Ze.dim();
  // Augmented echelon over [coords | combination], pivots in the coord part.
  std::vector<std::vector<Fe>> rows;
  std::vector<int> pivots;
  std::vector<Fe> cur = e;
  for (int t = 0; t <= d; ++t) {
    auto coords = subspace_coordinates(Ze, cur, F);
    if (!coords) fail(errc::internal, "block power escaped the block");
    std::vector<Fe> aug(std::size_t(d + t + 1), 0);
    for (int i = 0; i < d; ++i) aug[std::size_t(i)] = (*coords)[std::size_t(i)];
    aug[std::size_t(d + t)] = F.one();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Fe c = aug[std::size_t(pivots[r])];
      if (c == 0) continue;
      for (std::size_t j = 0; j < rows[r].size(); ++j)
        aug[j] = F.sub(aug[j], F.mul(c, rows[r][j]));
    }
    int lead = -1;
    for (int j = 0; j < d; ++j)
      if (aug[std::size_t(j)] != 0) {
        lead = j;
        break;
      }
    if (lead < 0) {
      // Dependency found: the tail holds the minimal polynomial coefficients.
      std::vector<Fe> coeffs(aug.begin() + d, aug.end());
      Poly mu = poly_trim(poly_from(std::move(coeffs)));
      return poly_monic(mu, F);
    }
    Fe inv = F.inv(aug[std::size_t(lead)]);
    for (auto& c : aug) c = F.mul(c, inv);
    rows.push_back(std::move(aug));
    for (auto& r : rows) r.resize(std::size_t(d + t + 2), 0);
    pivots.push_back(lead);
    cur = A.mul(cur, z);
  }
  fail(errc::internal, "no dependency within block dimension");
}

Subspace span_products(const Algebra& A, const Subspace& S, const std::vector<Fe>& e) {
  Mat rows(S.dim(), A.dim);
  for (int i = 0; i < S.dim(); ++i) {
    std::vector<Fe> v(std::size_t(A.dim));
    for (int j = 0; j < A.dim; ++j) v[std::size_t(j)] = S.basis.at(i, j);
    std::vector<Fe> prod = A.mul(v, e);
    for (int j = 0; j < A.dim; ++j) rows.at(i, j) = prod[std::size_t(j)];
  }
  return span_rows(rows, A.F);
}

// Splits the block along the factors of mu(z), or reports that mu is
// irreducible of full block degree (the block is then a field).
bool try_split(const Algebra& A, const Block& blk, const std::vector<Fe>& z,
               std::vector<Block>& queue_out, bool& certified_field) {
  const Fq& F = A.F;
  Poly mu = block_minpoly(A, blk.e, z, blk.Ze);
  std::vector<PolyFactor> factors = berlekamp_factor(mu, F);
  for (const auto& pf : factors)
    if (pf.multiplicity > 1)
      fail(errc::not_semisimple, "center has a non-squarefree minimal polynomial");
  if (factors.size() == 1) {
    certified_field = factors[0].factor.deg() == blk.Ze.dim();
    return false;
  }

  // CRT: e_i = (u_i * g_i)(z) with g_i = mu / f_i and u_i * g_i = 1 mod f_i.
  std::vector<std::vector<Fe>> z_pow;
  z_pow.push_back(blk.e);
  for (int t = 1; t < mu.deg(); ++t) z_pow.push_back(A.mul(z_pow.back(), z));
  auto eval_at_z = [&](const Poly& h) {
    std::vector<Fe> acc(std::size_t(A.dim), 0);
    for (int t = 0; t <= h.deg(); ++t) {
      Fe c = h.coeff(t);
      if (c == 0) continue;
      for (int j = 0; j < A.dim; ++j)
        acc[std::size_t(j)] = F.add(acc[std::size_t(j)], F.mul(c, z_pow[std::size_t(t)][std::size_t(j)]));
    }
    return acc;
  };

  std::vector<std::vector<Fe>> idems;
  std::vector<Fe> total(std::size_t(A.dim), 0);
  for (const auto& pf : factors) {
    Poly g = poly_divmod(mu, pf.factor, F).quot;
    Poly u = poly_invmod(g, pf.factor, F);
    Poly h = poly_mod(poly_mul(u, g, F), mu, F);
    std::vector<Fe> ei = eval_at_z(h);
    if (A.mul(ei, ei) != ei) fail(errc::internal, "split element is not idempotent");
    for (const auto& prev : idems) {
      std::vector<Fe> prod = A.mul(prev, ei);
      if (std::any_of(prod.begin(), prod.end(), [](Fe c) { return c != 0; }))
        fail(errc::internal, "split idempotents are not orthogonal");
    }
    for (int j = 0; j < A.dim; ++j) total[std::size_t(j)] = F.add(total[std::size_t(j)], ei[std::size_t(j)]);
    idems.push_back(std::move(ei));
  }
  if (total != blk.e) fail(errc::internal, "split idempotents do not sum to the block unit");

  for (auto& ei : idems) {
    Subspace Zei = span_products(A, blk.Ze, ei);
    queue_out.push_back(Block{std::move(ei), std::move(Zei)});
  }
  return true;
}

}  // namespace

Decomposition central_decomposition(const Algebra& A, std::uint64_t seed) {
  const Fq& F = A.F;
  Subspace Z = center_basis(A);
  std::mt19937_64 rng(seed);

  std::vector<Block> queue;
  queue.push_back(Block{A.unit, Z});
  std::vector<std::pair<std::vector<Fe>, int>> fields;  // (idempotent, d)

  while (!queue.empty()) {
    Block blk = std::move(queue.back());
    queue.pop_back();
    int d = blk.Ze.dim();
    if (d <= 0) fail(errc::internal, "empty center block");
    if (d == 1) {
      fields.emplace_back(std::move(blk.e), 1);
      continue;
    }

    bool resolved = false;
    // Deterministic sweep over the block's basis, then seeded random
    // combinations.
    for (int attempt = 0; attempt < d + 64 && !resolved; ++attempt) {
      std::vector<Fe> z(std::size_t(A.dim), 0);
      if (attempt < d) {
        for (int j = 0; j < A.dim; ++j) z[std::size_t(j)] = blk.Ze.basis.at(attempt, j);
      } else {
        for (int i = 0; i < d; ++i) {
          Fe c = Fe(rng() % F.q());
          if (c == 0) continue;
          for (int j = 0; j < A.dim; ++j)
            z[std::size_t(j)] = F.add(z[std::size_t(j)], F.mul(c, blk.Ze.basis.at(i, j)));
        }
      }
      bool certified = false;
      if (try_split(A, blk, z, queue, certified)) {
        resolved = true;
      } else if (certified) {
        fields.emplace_back(std::move(blk.e), d);
        resolved = true;
      }
    }
    if (!resolved)
      fail(errc::certification, "could not split or certify a center block as a field");
  }

  std::vector<SimpleComponent> comps;
  for (const auto& [e, d] : fields) {
    Subspace Ae = span_products(A, subspace_full(A.dim), e);
    int dim = Ae.dim();
    if (dim % d != 0)
      fail(errc::nonsquare_dimension, "component dimension is not a multiple of its field degree");
    int nn = dim / d;
    int n = int(std::lround(std::sqrt(double(nn))));
    if (n * n != nn)
      fail(errc::nonsquare_dimension, "component dimension over its field is not a square");
    comps.push_back({n, d, 1});
  }
  Decomposition out = decomposition_from(std::move(comps));
  if (out.total_dim != A.dim)
    fail(errc::internal, "component dimensions do not sum to the algebra dimension");
  return out;
}

std::vector<std::vector<std::pair<int, int>>> degree_assignments(std::vector<int> ds,
                                                                 int target) {
  std::sort(ds.begin(), ds.end());
  std::vector<std::vector<std::pair<int, int>>> solutions;
  std::vector<std::pair<int, int>> current;

  // DFS over slots; for equal degrees force non-increasing n to enumerate
  // multisets once.
  std::function<void(std::size_t, int, int)> go = [&](std::size_t idx, int remaining,
                                                      int prev_n) {
    if (idx == ds.size()) {
      if (remaining == 0) {
        auto sol = current;
        std::sort(sol.begin(), sol.end());
        solutions.push_back(std::move(sol));
      }
      return;
    }
    int d = ds[idx];
    int min_rest = 0;
    for (std::size_t j = idx + 1; j < ds.size(); ++j) min_rest += 4 * ds[j];
    int cap = prev_n;  // only binds when the previous slot has the same d
    for (int n = 2; n * n * d + min_rest <= remaining; ++n) {
      if (idx > 0 && ds[idx - 1] == d && n > cap) break;
      current.emplace_back(n, d);
      go(idx + 1, remaining - n * n * d, n);
      current.pop_back();
    }
  };
  go(0, target, std::numeric_limits<int>::max());

  std::sort(solutions.begin(), solutions.end());
  solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
  return solutions;
}

Decomposition ferraz_decomposition(const GroupTable& G, const Fq& F, int radical_dim) {
  std::uint64_t p = F.p(), q = F.q();
  FerrazData fd = cyclotomic_classes(G, p, q);
  int total_dim = G.order - radical_dim;

  // Commutative part: q-power orbits on the p-regular elements of G/G'.
  DerivedQuotient dq = derived_quotient(G);
  const GroupTable& H = dq.quotient.group;
  std::vector<int> comm_degrees;
  {
    std::vector<bool> seen(std::size_t(H.order), false);
    for (int h = 0; h < H.order; ++h) {
      if (seen[std::size_t(h)] || std::uint64_t(H.element_order(h)) % p == 0) continue;
      int size = 0, cur = h;
      while (!seen[std::size_t(cur)]) {
        seen[std::size_t(cur)] = true;
        ++size;
        cur = H.pow(cur, q);
      }
      comm_degrees.push_back(size);
    }
  }

  // The remaining orbits carry the noncommutative degrees.
  std::vector<int> all_degrees = fd.orbit_sizes();
  std::multiset<int> rest(all_degrees.begin(), all_degrees.end());
  int comm_dim = 0;
  for (int d : comm_degrees) {
    auto it = rest.find(d);
    if (it == rest.end())
      fail(errc::ambiguous_degrees,
           "commutative degrees are not a sub-multiset of the orbit degrees");
    rest.erase(it);
    comm_dim += d;
  }

  std::vector<std::vector<std::pair<int, int>>> sols =
      degree_assignments(std::vector<int>(rest.begin(), rest.end()), total_dim - comm_dim);
  if (sols.empty())
    fail(errc::ambiguous_degrees, "dimension constraint has no solution with n >= 2");
  if (sols.size() > 1)
    fail(errc::ambiguous_degrees, "dimension constraint does not determine the degrees");

  std::vector<SimpleComponent> comps;
  for (int d : comm_degrees) comps.push_back({1, d, 1});
  for (const auto& [n, d] : sols[0]) comps.push_back({n, d, 1});
  return decomposition_from(std::move(comps));
}

namespace {

bool small_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

PredictedCase predicted_c3xd10(std::uint64_t p, int k) {
  if (!small_prime(p)) fail(errc::non_prime, "characteristic must be prime");
  if (k < 1) fail(errc::degree_zero, "extension degree must be >= 1");
  if (p == 3) fail(errc::char_three, "characteristic 3 is outside the reference table");

  PredictedCase out;
  if (p == 2) {
    out.radical_dim = 3;
    out.nilpotency = 2;
    std::uint64_t q15 = pow_mod(2, std::uint64_t(k), 15);
    if (q15 == 1 || q15 == 4) {
      out.case_label = "p=2, q ≡ 1, 4 mod 15";
      out.structure = "C_2^{3k} ⋊ (C_{2^k-1}^3 × GL(2,F)^6)";
      out.dec = decomposition_from({{1, 1, 3}, {2, 1, 6}});
    } else {
      out.case_label = "p=2, q ≡ 2, 8 mod 15";
      out.structure = "C_2^{3k} ⋊ (C_{2^k-1} × C_{2^{2k}-1} × GL(2,F_2)^3)";
      out.dec = decomposition_from({{1, 1, 1}, {1, 2, 1}, {2, 2, 3}});
    }
  } else if (p == 5) {
    out.radical_dim = 24;
    out.nilpotency = 5;
    std::uint64_t q6 = pow_mod(5, std::uint64_t(k), 6);
    if (q6 == 1) {
      out.case_label = "p=5, q ≡ 1 mod 6";
      out.structure = "((C_5^{15k} ⋊ C_5^{6k}) ⋊ C_5^{3k}) ⋊ C_{5^k-1}^6";
      out.dec = decomposition_from({{1, 1, 6}});
    } else {
      out.case_label = "p=5, q ≡ 5 mod 6";
      out.structure = "((C_5^{15k} ⋊ C_5^{6k}) ⋊ C_5^{3k}) ⋊ (C_{5^k-1}^2 × C_{5^{2k}-1}^2)";
      out.dec = decomposition_from({{1, 1, 2}, {1, 2, 2}});
    }
  } else {
    out.radical_dim = 0;
    out.nilpotency = 1;
    std::uint64_t q30 = pow_mod(p, std::uint64_t(k), 30);
    if (q30 == 1 || q30 == 19) {
      out.case_label = "p>5, q ≡ 1, 19 mod 30";
      out.structure = "C_{p^k-1}^6 × GL(2,F)^6";
      out.dec = decomposition_from({{1, 1, 6}, {2, 1, 6}});
    } else if (q30 == 11 || q30 == 29) {
      out.case_label = "p>5, q ≡ 11, 29 mod 30";
      out.structure = "C_{p^k-1}^2 × C_{p^{2k}-1}^2 × GL(2,F)^2 × GL(2,F_2)^2";
      out.dec = decomposition_from({{1, 1, 2}, {1, 2, 2}, {2, 1, 2}, {2, 2, 2}});
    } else if (q30 == 7 || q30 == 13) {
      out.case_label = "p>5, q ≡ 7, 13 mod 30";
      out.structure = "C_{p^k-1}^6 × GL(2,F_2)^3";
      out.dec = decomposition_from({{1, 1, 6}, {2, 2, 3}});
    } else {
      out.case_label = "p>5, q ≡ 17, 23 mod 30";
      out.structure = "C_{p^k-1}^2 × C_{p^{2k}-1}^2 × GL(2,F_2)^3";
      out.dec = decomposition_from({{1, 1, 2}, {1, 2, 2}, {2, 2, 3}});
    }
  }
  return out;
}

}  // namespace gau
