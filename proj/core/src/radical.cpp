#include "gau/radical.hpp"

#include <random>

#include "gau/error.hpp"
#include "gau/poly.hpp"

namespace gau {
namespace {

constexpr int kRetryBudget = 64;

// Incrementally maintained row-echelon basis for spans and spinning.
struct Echelon {
  std::vector<std::vector<Fe>> rows;
  std::vector<int> pivots;

  int dim() const { return int(rows.size()); }

  // Reduces v against the stored rows; if a nonzero remainder survives it is
  // normalized and stored. Returns the reduced row if the rank grew.
  const std::vector<Fe>* insert(std::vector<Fe> v, const Fq& F) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Fe c = v[std::size_t(pivots[r])];
      if (c == 0) continue;
      const auto& row = rows[r];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (row[j] != 0) v[j] = F.sub(v[j], F.mul(c, row[j]));
    }
    int lead = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        lead = int(j);
        break;
      }
    if (lead < 0) return nullptr;
    Fe inv = F.inv(v[std::size_t(lead)]);
    for (auto& c : v) c = F.mul(c, inv);
    rows.push_back(std::move(v));
    pivots.push_back(lead);
    return &rows.back();
  }

  Subspace to_subspace(int ambient, const Fq& F) const {
    Mat m(dim(), ambient);
    for (int r = 0; r < dim(); ++r)
      for (int j = 0; j < ambient; ++j) m.at(r, j) = rows[std::size_t(r)][std::size_t(j)];
    return span_rows(m, F);
  }
};

std::vector<Fe> row_times(const std::vector<Fe>& v, const Mat& M, const Fq& F) {
  std::vector<Fe> out(std::size_t(M.cols), 0);
  for (int i = 0; i < M.rows; ++i) {
    if (v[std::size_t(i)] == 0) continue;
    for (int j = 0; j < M.cols; ++j)
      if (M.at(i, j) != 0) out[std::size_t(j)] = F.add(out[std::size_t(j)], F.mul(v[std::size_t(i)], M.at(i, j)));
  }
  return out;
}

// Smallest subspace containing v and closed under every action matrix.
Echelon spin(const std::vector<Fe>& v, const std::vector<Mat>& acts, const Fq& F) {
  Echelon e;
  std::vector<std::vector<Fe>> work;
  if (const auto* r = e.insert(v, F)) work.push_back(*r);
  while (!work.empty()) {
    std::vector<Fe> cur = std::move(work.back());
    work.pop_back();
    for (const Mat& a : acts)
      if (const auto* r = e.insert(row_times(cur, a, F), F)) work.push_back(*r);
  }
  return e;
}

Mat poly_at_matrix(const Poly& f, const Mat& M, const Fq& F) {
  Mat acc(M.rows, M.cols);
  for (int d = f.deg(); d >= 0; --d) {
    acc = mat_mul(acc, M, F);
    Fe c = f.coeff(d);
    if (c != 0)
      for (int i = 0; i < M.rows; ++i) acc.at(i, i) = F.add(acc.at(i, i), c);
  }
  return acc;
}

// {v : v * M = 0} as a canonical subspace.
Subspace left_kernel(const Mat& M, const Fq& F) { return kernel(mat_transpose(M), F); }

std::vector<Fe> subspace_row(const Subspace& S, int r) {
  std::vector<Fe> v(std::size_t(S.ambient));
  for (int j = 0; j < S.ambient; ++j) v[std::size_t(j)] = S.basis.at(r, j);
  return v;
}

// A section U/W of the regular module, with the action of every algebra
// basis element expressed in the section basis (rows of U whose pivots are
// not pivots of W).
struct Section {
  Subspace U, W;
  int dim = 0;
  Mat basis;               // dim x ambient, rows of the section basis
  std::vector<Mat> acts;   // per algebra basis element, dim x dim
};

Section make_section(const Algebra& A, Subspace U, Subspace W) {
  Section s;
  s.U = std::move(U);
  s.W = std::move(W);
  std::vector<int> wp = subspace_pivots(s.W);
  std::vector<bool> in_w(std::size_t(s.U.ambient), false);
  for (int p : wp) in_w[std::size_t(p)] = true;

  std::vector<int> section_rows, section_pivots;
  std::vector<int> up = subspace_pivots(s.U);
  for (int r = 0; r < s.U.dim(); ++r)
    if (!in_w[std::size_t(up[std::size_t(r)])]) {
      section_rows.push_back(r);
      section_pivots.push_back(up[std::size_t(r)]);
    }
  s.dim = int(section_rows.size());
  if (s.dim != s.U.dim() - s.W.dim()) fail(errc::internal, "section pivot mismatch");

  s.basis = Mat(s.dim, s.U.ambient);
  for (int r = 0; r < s.dim; ++r)
    for (int j = 0; j < s.U.ambient; ++j) s.basis.at(r, j) = s.U.basis.at(section_rows[std::size_t(r)], j);

  // Coordinates of an ambient vector (known to lie in U) w.r.t. the section
  // basis mod W.
  auto section_coords = [&](std::vector<Fe> v) {
    const Fq& F = A.F;
    for (int r = 0; r < s.W.dim(); ++r) {
      Fe c = v[std::size_t(wp[std::size_t(r)])];
      if (c == 0) continue;
      for (int j = 0; j < s.W.ambient; ++j)
        v[std::size_t(j)] = F.sub(v[std::size_t(j)], F.mul(c, s.W.basis.at(r, j)));
    }
    std::vector<Fe> coords(std::size_t(s.dim), 0);
    for (int r = 0; r < s.dim; ++r) {
      Fe c = v[std::size_t(section_pivots[std::size_t(r)])];
      coords[std::size_t(r)] = c;
      if (c == 0) continue;
      for (int j = 0; j < s.U.ambient; ++j)
        v[std::size_t(j)] = F.sub(v[std::size_t(j)], F.mul(c, s.basis.at(r, j)));
    }
    for (Fe c : v)
      if (c != 0) fail(errc::internal, "section is not invariant");
    return coords;
  };

  s.acts.reserve(std::size_t(A.dim));
  for (int t = 0; t < A.dim; ++t) {
    // Full action of basis element t on the regular module: row i is the
    // coordinate vector of b_i * b_t.
    Mat act(s.dim, s.dim);
    for (int r = 0; r < s.dim; ++r) {
      std::vector<Fe> img(std::size_t(A.dim), 0);
      for (int i = 0; i < A.dim; ++i) {
        Fe c = s.basis.at(r, i);
        if (c == 0) continue;
        const auto& prod = A.basis_product(i, t);
        for (int j = 0; j < A.dim; ++j)
          if (prod[std::size_t(j)] != 0) img[std::size_t(j)] = A.F.add(img[std::size_t(j)], A.F.mul(c, prod[std::size_t(j)]));
      }
      std::vector<Fe> coords = section_coords(std::move(img));
      for (int j = 0; j < s.dim; ++j) act.at(r, j) = coords[std::size_t(j)];
    }
    s.acts.push_back(std::move(act));
  }
  return s;
}

struct SplitResult {
  bool irreducible = false;
  Subspace submodule;  // coords relative to the section basis
};

SplitResult find_split(const Section& s, const Fq& F, std::mt19937_64& rng) {
  int d = s.dim;
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    // Action of a random algebra element.
    Mat theta(d, d);
    for (const Mat& a : s.acts) {
      Fe c = Fe(rng() % F.q());
      if (c == 0) continue;
      theta = mat_add(theta, mat_scale(a, c, F), F);
    }
    Poly cp = charpoly(theta, F);
    std::vector<PolyFactor> factors = berlekamp_factor(cp, F);
    for (const PolyFactor& pf : factors) {
      const Poly& f = pf.factor;
      Mat ft = poly_at_matrix(f, theta, F);
      Subspace N = left_kernel(ft, F);
      if (N.dim() == 0) fail(errc::internal, "charpoly factor with trivial kernel");

      Echelon sv = spin(subspace_row(N, 0), s.acts, F);
      if (sv.dim() < d) return {false, sv.to_subspace(d, F)};

      std::vector<Mat> acts_t;
      acts_t.reserve(s.acts.size());
      for (const Mat& a : s.acts) acts_t.push_back(mat_transpose(a));
      Subspace NT = left_kernel(mat_transpose(ft), F);
      Echelon sw = spin(subspace_row(NT, 0), acts_t, F);
      if (sw.dim() < d) {
        // The perp of a dual submodule is a submodule.
        Subspace dual = sw.to_subspace(d, F);
        return {false, kernel(dual.basis, F)};
      }
      // Both spins fill the space; conclusive only when the kernel is as
      // small as the factor degree (then every proper submodule would have
      // been seen through one of the two spins).
      if (N.dim() == f.deg()) return {true, {}};
    }
  }
  fail(errc::chopper_stall, "no conclusive random element found");
}

void chop(const Algebra& A, Subspace U, Subspace W, std::mt19937_64& rng,
          std::vector<IrreducibleRep>& out) {
  Section s = make_section(A, std::move(U), std::move(W));
  if (s.dim == 0) return;
  if (s.dim > 1) {
    SplitResult r = find_split(s, A.F, rng);
    if (!r.irreducible) {
      if (r.submodule.dim() == 0 || r.submodule.dim() >= s.dim)
        fail(errc::internal, "split produced a trivial submodule");
      // Lift the submodule to ambient coordinates: W + rows * basis.
      Mat lifted(r.submodule.dim(), s.U.ambient);
      for (int i = 0; i < r.submodule.dim(); ++i) {
        std::vector<Fe> v = row_times(subspace_row(r.submodule, i), s.basis, A.F);
        for (int j = 0; j < s.U.ambient; ++j) lifted.at(i, j) = v[std::size_t(j)];
      }
      Subspace mid = subspace_sum(s.W, span_rows(lifted, A.F), A.F);
      chop(A, mid, s.W, rng, out);
      chop(A, s.U, mid, rng, out);
      return;
    }
  }
  out.push_back(IrreducibleRep{s.dim, std::move(s.acts)});
}

// Uncertified radical kernel: stack every factor's images and solve.
Subspace radical_kernel(const Algebra& A, const std::vector<IrreducibleRep>& factors) {
  int nrows = 0;
  for (const auto& f : factors) nrows += f.dim * f.dim;
  Mat M(nrows, A.dim);
  int row = 0;
  for (const auto& f : factors)
    for (int r = 0; r < f.dim; ++r)
      for (int c = 0; c < f.dim; ++c) {
        for (int i = 0; i < A.dim; ++i) M.at(row, i) = f.images[std::size_t(i)].at(r, c);
        ++row;
      }
  return kernel(M, A.F);
}

}  // namespace

std::vector<IrreducibleRep> composition_factors(const Algebra& A, std::uint64_t seed) {
  if (A.dim < 1) fail(errc::degree_zero, "algebra must have dimension >= 1");
  std::mt19937_64 rng(seed);
  std::vector<IrreducibleRep> raw;
  chop(A, subspace_full(A.dim), subspace_zero(A.dim), rng, raw);
  std::vector<IrreducibleRep> out;
  for (auto& f : raw) {
    bool dup = false;
    for (const auto& kept : out)
      if (reps_isomorphic(kept, f, A.F)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(f));
  }
  return out;
}

bool reps_isomorphic(const IrreducibleRep& S, const IrreducibleRep& T, const Fq& F) {
  if (S.dim != T.dim) return false;
  if (S.images.size() != T.images.size()) return false;
  int ds = S.dim, dt = T.dim;
  int vars = ds * dt;
  Mat M(int(S.images.size()) * vars, vars);
  int row = 0;
  for (std::size_t g = 0; g < S.images.size(); ++g) {
    const Mat& sg = S.images[g];
    const Mat& tg = T.images[g];
    // (sigma X - X tau)[r][c] = 0, unknowns X[a][b] at column a*dt + b
    for (int r = 0; r < ds; ++r)
      for (int c = 0; c < dt; ++c) {
        for (int a = 0; a < ds; ++a)
          M.at(row, a * dt + c) = F.add(M.at(row, a * dt + c), sg.at(r, a));
        for (int b = 0; b < dt; ++b)
          M.at(row, r * dt + b) = F.sub(M.at(row, r * dt + b), tg.at(b, c));
        ++row;
      }
  }
  return kernel(M, F).dim() > 0;
}

Subspace jacobson_radical(const Algebra& A, std::uint64_t seed) {
  std::vector<IrreducibleRep> factors = composition_factors(A, seed);
  Subspace J = radical_kernel(A, factors);

  // Certificates: two-sided ideal, nilpotent, semisimple quotient.
  for (int r = 0; r < J.dim(); ++r) {
    std::vector<Fe> row = subspace_row(J, r);
    for (int i = 0; i < A.dim; ++i) {
      Algebra::Elt b(std::size_t(A.dim), 0);
      b[std::size_t(i)] = A.F.one();
      if (!subspace_contains(J, A.mul(b, row), A.F) ||
          !subspace_contains(J, A.mul(row, b), A.F))
        fail(errc::certification, "computed radical is not a two-sided ideal");
    }
  }
  {
    Subspace P = J;
    while (P.dim() > 0) {
      Mat prods(P.dim() * std::max(J.dim(), 1), A.dim);
      for (int i = 0; i < P.dim(); ++i)
        for (int j = 0; j < J.dim(); ++j) {
          std::vector<Fe> v = A.mul(subspace_row(P, i), subspace_row(J, j));
          for (int c = 0; c < A.dim; ++c) prods.at(i * J.dim() + j, c) = v[std::size_t(c)];
        }
      Subspace Pn = span_rows(prods, A.F);
      if (Pn.dim() >= P.dim()) fail(errc::certification, "computed radical is not nilpotent");
      P = std::move(Pn);
    }
  }
  {
    QuotientAlgebra Q = quotient_algebra(A, J);
    std::vector<IrreducibleRep> qf = composition_factors(Q.alg, seed + 0x9e3779b97f4a7c15ull);
    if (radical_kernel(Q.alg, qf).dim() != 0)
      fail(errc::certification, "quotient by the computed radical is not semisimple");
  }
  return J;
}

int nilpotency_index(const Subspace& J, const Algebra& A) {
  if (J.ambient != A.dim) fail(errc::ambient_mismatch, "ideal lives in a different algebra");
  if (J.dim() == 0) return 1;
  Subspace P = J;
  int idx = 1;
  while (true) {
    Mat prods(P.dim() * J.dim(), A.dim);
    for (int i = 0; i < P.dim(); ++i)
      for (int j = 0; j < J.dim(); ++j) {
        std::vector<Fe> v = A.mul(subspace_row(P, i), subspace_row(J, j));
        for (int c = 0; c < A.dim; ++c) prods.at(i * J.dim() + j, c) = v[std::size_t(c)];
      }
    Subspace Pn = span_rows(prods, A.F);
    ++idx;
    if (Pn.dim() == 0) return idx;
    if (Pn.dim() >= P.dim()) fail(errc::not_nilpotent, "power dimensions stalled above zero");
    P = std::move(Pn);
  }
}

}  // namespace gau
