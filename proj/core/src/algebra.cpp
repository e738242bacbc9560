#include "gau/algebra.hpp"

#include <algorithm>
#include <functional>

#include "gau/error.hpp"

namespace gau {

GroupAlgebra::Elt GroupAlgebra::basis(int g) const {
  Elt e(std::size_t(G.order), 0);
  e[std::size_t(g)] = F.one();
  return e;
}

bool GroupAlgebra::is_zero(const Elt& a) const {
  for (Fe c : a)
    if (c != 0) return false;
  return true;
}

GroupAlgebra::Elt GroupAlgebra::add(const Elt& a, const Elt& b) const {
  Elt r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(r[i], b[i]);
  return r;
}

GroupAlgebra::Elt GroupAlgebra::sub(const Elt& a, const Elt& b) const {
  Elt r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(r[i], b[i]);
  return r;
}

GroupAlgebra::Elt GroupAlgebra::scale(Fe s, const Elt& a) const {
  Elt r(a);
  for (Fe& c : r) c = F.mul(s, c);
  return r;
}

GroupAlgebra::Elt GroupAlgebra::mul(const Elt& a, const Elt& b) const {
  Elt r(std::size_t(G.order), 0);
  for (int g = 0; g < G.order; ++g) {
    if (a[std::size_t(g)] == 0) continue;
    Fe ag = a[std::size_t(g)];
    for (int h = 0; h < G.order; ++h) {
      if (b[std::size_t(h)] == 0) continue;
      std::size_t k = std::size_t(G.at(g, h));
      r[k] = F.add(r[k], F.mul(ag, b[std::size_t(h)]));
    }
  }
  return r;
}

GroupAlgebra::Elt GroupAlgebra::pow(const Elt& a, std::uint64_t e) const {
  Elt acc = one(), base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

GroupAlgebra::Elt GroupAlgebra::hat(const std::vector<int>& subset) const {
  Elt r = zero();
  for (int g : subset) r[std::size_t(g)] = F.add(r[std::size_t(g)], F.one());
  return r;
}

Mat GroupAlgebra::left_rep(const Elt& a) const {
  // column j = coords of a * e_j
  Mat m(G.order, G.order);
  for (int g = 0; g < G.order; ++g) {
    if (a[std::size_t(g)] == 0) continue;
    for (int j = 0; j < G.order; ++j) m.at(G.at(g, j), j) = F.add(m.at(G.at(g, j), j), a[std::size_t(g)]);
  }
  return m;
}

Mat GroupAlgebra::right_rep(const Elt& a) const {
  Mat m(G.order, G.order);
  for (int g = 0; g < G.order; ++g) {
    if (a[std::size_t(g)] == 0) continue;
    for (int j = 0; j < G.order; ++j) m.at(G.at(j, g), j) = F.add(m.at(G.at(j, g), j), a[std::size_t(g)]);
  }
  return m;
}

std::optional<GroupAlgebra::Elt> GroupAlgebra::inverse(const Elt& a) const {
  return solve(left_rep(a), one(), F);
}

std::string GroupAlgebra::to_string(const Elt& a) const {
  std::string out;
  for (int g = 0; g < G.order; ++g) {
    Fe c = a[std::size_t(g)];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != F.one() || g == 0) {
      out += F.to_string(c);
      if (g != 0) out += "*";
    }
    if (g != 0) out += G.names[std::size_t(g)];
  }
  return out.empty() ? "0" : out;
}

Subspace annihilator(const GroupAlgebra& A, const GroupAlgebra::Elt& a, Side side) {
  // v*a = 0 is a condition on coords(v) through right_rep; a*v = 0 through
  // left_rep.
  Mat m = side == Side::left ? A.right_rep(a) : A.left_rep(a);
  return kernel(m, A.F);
}

std::vector<GroupAlgebra::Elt> class_sums(const GroupAlgebra& A) {
  ClassPartition cls = conjugacy_classes(A.G);
  std::vector<GroupAlgebra::Elt> out;
  out.reserve(cls.classes.size());
  for (const auto& c : cls.classes) out.push_back(A.hat(c));
  return out;
}

Algebra::Elt Algebra::mul(const Elt& a, const Elt& b) const {
  Elt r(std::size_t(dim), 0);
  for (int i = 0; i < dim; ++i) {
    if (a[std::size_t(i)] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[std::size_t(j)] == 0) continue;
      Fe s = F.mul(a[std::size_t(i)], b[std::size_t(j)]);
      const auto& prod = basis_product(i, j);
      for (int t = 0; t < dim; ++t)
        if (prod[std::size_t(t)] != 0) r[std::size_t(t)] = F.add(r[std::size_t(t)], F.mul(s, prod[std::size_t(t)]));
    }
  }
  return r;
}

Mat Algebra::left_rep(const Elt& a) const {
  Mat m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (a[std::size_t(i)] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      const auto& prod = basis_product(i, j);
      for (int t = 0; t < dim; ++t)
        if (prod[std::size_t(t)] != 0)
          m.at(t, j) = F.add(m.at(t, j), F.mul(a[std::size_t(i)], prod[std::size_t(t)]));
    }
  }
  return m;
}

Mat Algebra::right_rep(const Elt& a) const {
  Mat m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    if (a[std::size_t(j)] == 0) continue;
    for (int i = 0; i < dim; ++i) {
      const auto& prod = basis_product(i, j);
      for (int t = 0; t < dim; ++t)
        if (prod[std::size_t(t)] != 0)
          m.at(t, i) = F.add(m.at(t, i), F.mul(a[std::size_t(j)], prod[std::size_t(t)]));
    }
  }
  return m;
}

void Algebra::validate() const {
  if (dim <= 0 || int(unit.size()) != dim || sc.size() != std::size_t(dim) * dim)
    fail(errc::internal, "malformed algebra presentation");
  auto basis_elt = [&](int i) {
    Elt e(std::size_t(dim), 0);
    e[std::size_t(i)] = F.one();
    return e;
  };
  for (int i = 0; i < dim; ++i) {
    Elt b = basis_elt(i);
    if (mul(unit, b) != b || mul(b, unit) != b)
      fail(errc::internal, "algebra unit does not act as identity");
  }
  auto check = [&](int i, int j, int k) {
    Elt left = mul(basis_product(i, j), basis_elt(k));
    Elt right = mul(basis_elt(i), basis_product(j, k));
    if (left != right) fail(errc::internal, "structure constants are not associative");
  };
  if (dim <= 32) {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) check(i, j, k);
  } else {
    std::uint64_t state = 0x2545f4914f6cdd1dull;
    auto next = [&]() {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    for (int t = 0; t < 20000; ++t)
      check(int(next() % dim), int(next() % dim), int(next() % dim));
  }
}

Algebra algebra_of(const GroupAlgebra& A) {
  Algebra B{A.F, A.dim(), {}, {}};
  B.sc.resize(std::size_t(B.dim) * B.dim);
  for (int i = 0; i < B.dim; ++i)
    for (int j = 0; j < B.dim; ++j) {
      std::vector<Fe> prod(std::size_t(B.dim), 0);
      prod[std::size_t(A.G.at(i, j))] = A.F.one();
      B.sc[std::size_t(i) * B.dim + j] = std::move(prod);
    }
  B.unit = std::vector<Fe>(std::size_t(B.dim), 0);
  B.unit[0] = A.F.one();
  B.validate();
  return B;
}

Algebra matrix_algebra(const Fq& F, int n) {
  if (n < 1) fail(errc::degree_zero, "matrix algebra needs n >= 1");
  int d = n * n;
  Algebra B{F, d, {}, {}};
  B.sc.resize(std::size_t(d) * d);
  auto idx = [&](int r, int c) { return r * n + c; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          std::vector<Fe> prod(std::size_t(d), 0);
          if (b == c) prod[std::size_t(idx(a, e))] = F.one();
          B.sc[std::size_t(idx(a, b)) * d + idx(c, e)] = std::move(prod);
        }
  B.unit = std::vector<Fe>(std::size_t(d), 0);
  for (int i = 0; i < n; ++i) B.unit[std::size_t(idx(i, i))] = F.one();
  B.validate();
  return B;
}

namespace {

// Kernel of the stacked commutator conditions v -> b_i*v - v*b_i.
Subspace center_from_reps(const Fq& F, int dim,
                          const std::function<Mat(int)>& commutator_block) {
  Mat stacked(0, dim);
  std::vector<Fe> rows;
  int nrows = 0;
  for (int i = 0; i < dim; ++i) {
    Mat c = commutator_block(i);
    rows.insert(rows.end(), c.a.begin(), c.a.end());
    nrows += c.rows;
  }
  stacked.rows = nrows;
  stacked.a = std::move(rows);
  return kernel(stacked, F);
}

}  // namespace

Subspace center_basis(const GroupAlgebra& A) {
  return center_from_reps(A.F, A.dim(), [&](int i) {
    auto b = A.basis(i);
    return mat_sub(A.left_rep(b), A.right_rep(b), A.F);
  });
}

Subspace center_basis(const Algebra& A) {
  return center_from_reps(A.F, A.dim, [&](int i) {
    Algebra::Elt b(std::size_t(A.dim), 0);
    b[std::size_t(i)] = A.F.one();
    return mat_sub(A.left_rep(b), A.right_rep(b), A.F);
  });
}

std::vector<Fe> QuotientAlgebra::project(const std::vector<Fe>& a) const {
  // Reduce against the ideal's RREF rows, then read off non-pivot coords.
  std::vector<Fe> v(a);
  const Fq& F = alg.F;
  const Mat& rows = ideal.basis;
  std::vector<int> pivots = subspace_pivots(ideal);
  for (int r = 0; r < rows.rows; ++r) {
    Fe c = v[std::size_t(pivots[std::size_t(r)])];
    if (c == 0) continue;
    for (int j = 0; j < rows.cols; ++j)
      v[std::size_t(j)] = F.sub(v[std::size_t(j)], F.mul(c, rows.at(r, j)));
  }
  std::vector<Fe> out(complement.size(), 0);
  for (std::size_t i = 0; i < complement.size(); ++i) out[i] = v[std::size_t(complement[i])];
  return out;
}

QuotientAlgebra quotient_algebra(const Algebra& A, const Subspace& ideal) {
  if (ideal.ambient != A.dim) fail(errc::ambient_mismatch, "ideal lives in a different algebra");
  // two-sided ideal check, exhaustive over basis products
  for (int r = 0; r < ideal.basis.rows; ++r) {
    std::vector<Fe> row(ideal.basis.a.begin() + std::size_t(r) * A.dim,
                        ideal.basis.a.begin() + std::size_t(r + 1) * A.dim);
    for (int i = 0; i < A.dim; ++i) {
      Algebra::Elt b(std::size_t(A.dim), 0);
      b[std::size_t(i)] = A.F.one();
      if (!subspace_contains(ideal, A.mul(b, row), A.F))
        fail(errc::not_an_ideal, "subspace is not closed under left multiplication");
      if (!subspace_contains(ideal, A.mul(row, b), A.F))
        fail(errc::not_an_ideal, "subspace is not closed under right multiplication");
    }
  }

  QuotientAlgebra Q{Algebra{A.F, 0, {}, {}}, ideal, {}};
  std::vector<bool> is_pivot(std::size_t(A.dim), false);
  for (int p : subspace_pivots(ideal)) is_pivot[std::size_t(p)] = true;
  for (int i = 0; i < A.dim; ++i)
    if (!is_pivot[std::size_t(i)]) Q.complement.push_back(i);

  int qd = int(Q.complement.size());
  Q.alg.dim = qd;
  Q.alg.sc.resize(std::size_t(qd) * qd);
  for (int i = 0; i < qd; ++i)
    for (int j = 0; j < qd; ++j) {
      Algebra::Elt bi(std::size_t(A.dim), 0), bj(std::size_t(A.dim), 0);
      bi[std::size_t(Q.complement[std::size_t(i)])] = A.F.one();
      bj[std::size_t(Q.complement[std::size_t(j)])] = A.F.one();
      Q.alg.sc[std::size_t(i) * qd + j] = Q.project(A.mul(bi, bj));
    }
  Q.alg.unit = Q.project(A.unit);
  Q.alg.validate();
  return Q;
}

InducedMap induced_quotient_map(const GroupAlgebra& A, const std::vector<int>& N) {
  Quotient q = quotient_by(A.G, N);
  GroupAlgebra target(A.F, q.group);
  Mat eta(q.group.order, A.G.order);
  for (int g = 0; g < A.G.order; ++g) eta.at(q.proj[std::size_t(g)], g) = A.F.one();
  Subspace ker = kernel(eta, A.F);
  return InducedMap{std::move(q), std::move(target), std::move(eta), std::move(ker)};
}

std::vector<Fe> InducedMap::apply(const std::vector<Fe>& a) const {
  return mat_apply(eta, a, target.F);
}

std::vector<Fe> coset_augmentations(const GroupAlgebra& A, const GroupAlgebra::Elt& a,
                                    const std::vector<int>& N) {
  return induced_quotient_map(A, N).apply(a);
}

}  // namespace gau
