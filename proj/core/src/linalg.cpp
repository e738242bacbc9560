#include "gau/linalg.hpp"

#include <algorithm>

namespace gau {

Mat mat_identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_add(const Mat& A, const Mat& B, const Fq& F) {
  Mat out(A.rows, A.cols);
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = F.add(A.a[i], B.a[i]);
  return out;
}

Mat mat_sub(const Mat& A, const Mat& B, const Fq& F) {
  Mat out(A.rows, A.cols);
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = F.sub(A.a[i], B.a[i]);
  return out;
}

Mat mat_scale(const Mat& A, Fe s, const Fq& F) {
  Mat out = A;
  for (auto& v : out.a) v = F.mul(v, s);
  return out;
}

Mat mat_mul(const Mat& A, const Mat& B, const Fq& F) {
  Mat out(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      Fe aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j)
        out.at(i, j) = F.add(out.at(i, j), F.mul(aik, B.at(k, j)));
    }
  return out;
}

Mat mat_transpose(const Mat& A) {
  Mat out(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) out.at(j, i) = A.at(i, j);
  return out;
}

std::vector<Fe> mat_apply(const Mat& A, const std::vector<Fe>& v, const Fq& F) {
  std::vector<Fe> out(std::size_t(A.rows), 0);
  for (int i = 0; i < A.rows; ++i) {
    Fe acc = 0;
    for (int j = 0; j < A.cols; ++j)
      if (A.at(i, j) != 0) acc = F.add(acc, F.mul(A.at(i, j), v[std::size_t(j)]));
    out[std::size_t(i)] = acc;
  }
  return out;
}

RrefResult rref(Mat m, const Fq& F) {
  RrefResult out;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Fe inv = F.inv(m.at(r, c));
    if (inv != 1)
      for (int j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      Fe f = m.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < m.cols; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.m = std::move(m);
  return out;
}

Fe det(Mat m, const Fq& F) {
  if (m.rows != m.cols) fail(errc::ambient_mismatch, "determinant of a non-square matrix");
  int n = m.rows;
  Fe d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = c; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      d = F.neg(d);
    }
    Fe pv = m.at(c, c);
    d = F.mul(d, pv);
    Fe inv = F.inv(pv);
    for (int i = c + 1; i < n; ++i) {
      Fe f = m.at(i, c);
      if (f == 0) continue;
      Fe fi = F.mul(f, inv);
      for (int j = c; j < n; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(fi, m.at(c, j)));
    }
  }
  return d;
}

Subspace subspace_zero(int ambient) { return Subspace{ambient, Mat(0, ambient)}; }

Subspace subspace_full(int ambient) { return Subspace{ambient, mat_identity(ambient)}; }

Subspace span_rows(const Mat& m, const Fq& F) {
  RrefResult r = rref(m, F);
  Subspace out;
  out.ambient = m.cols;
  out.basis = Mat(r.rank, m.cols);
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < m.cols; ++j) out.basis.at(i, j) = r.m.at(i, j);
  return out;
}

Subspace kernel(const Mat& m, const Fq& F) {
  RrefResult r = rref(m, F);
  std::vector<bool> is_pivot(std::size_t(m.cols), false);
  for (int c : r.pivots) is_pivot[std::size_t(c)] = true;

  Mat basis(m.cols - r.rank, m.cols);
  int row = 0;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[std::size_t(j)]) continue;
    basis.at(row, j) = 1;
    for (int i = 0; i < r.rank; ++i)
      basis.at(row, r.pivots[std::size_t(i)]) = F.neg(r.m.at(i, j));
    ++row;
  }
  return span_rows(basis, F);
}

Subspace subspace_sum(const Subspace& U, const Subspace& V, const Fq& F) {
  if (U.ambient != V.ambient) fail(errc::ambient_mismatch, "subspace sum: ambient mismatch");
  Mat stacked(U.dim() + V.dim(), U.ambient);
  for (int i = 0; i < U.dim(); ++i)
    for (int j = 0; j < U.ambient; ++j) stacked.at(i, j) = U.basis.at(i, j);
  for (int i = 0; i < V.dim(); ++i)
    for (int j = 0; j < U.ambient; ++j) stacked.at(U.dim() + i, j) = V.basis.at(i, j);
  return span_rows(stacked, F);
}

Subspace subspace_intersect(const Subspace& U, const Subspace& V, const Fq& F) {
  if (U.ambient != V.ambient) fail(errc::ambient_mismatch, "subspace intersect: ambient mismatch");
  int n = U.ambient;
  Mat z(U.dim() + V.dim(), 2 * n);
  for (int i = 0; i < U.dim(); ++i)
    for (int j = 0; j < n; ++j) {
      z.at(i, j) = U.basis.at(i, j);
      z.at(i, n + j) = U.basis.at(i, j);
    }
  for (int i = 0; i < V.dim(); ++i)
    for (int j = 0; j < n; ++j) z.at(U.dim() + i, j) = V.basis.at(i, j);
  RrefResult r = rref(z, F);
  Mat inter(0, n);
  for (int i = 0; i < r.rank; ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j)
      if (r.m.at(i, j) != 0) left_zero = false;
    if (!left_zero) continue;
    inter.rows += 1;
    inter.a.resize(std::size_t(inter.rows) * std::size_t(n));
    for (int j = 0; j < n; ++j) inter.at(inter.rows - 1, j) = r.m.at(i, n + j);
  }
  return span_rows(inter, F);
}

namespace {

// Reduce v against an RREF basis in place; returns per-row coordinates.
std::vector<Fe> reduce_against(const Subspace& U, std::vector<Fe>& v, const Fq& F) {
  std::vector<Fe> coords(std::size_t(U.dim()), 0);
  for (int i = 0; i < U.dim(); ++i) {
    int piv = -1;
    for (int j = 0; j < U.ambient; ++j)
      if (U.basis.at(i, j) != 0) {
        piv = j;
        break;
      }
    if (piv < 0) continue;
    Fe c = v[std::size_t(piv)];
    if (c == 0) continue;
    coords[std::size_t(i)] = c;
    for (int j = piv; j < U.ambient; ++j)
      v[std::size_t(j)] = F.sub(v[std::size_t(j)], F.mul(c, U.basis.at(i, j)));
  }
  return coords;
}

}  // namespace

bool subspace_contains(const Subspace& U, const std::vector<Fe>& v, const Fq& F) {
  if (int(v.size()) != U.ambient) fail(errc::ambient_mismatch, "vector size != ambient");
  std::vector<Fe> w = v;
  reduce_against(U, w, F);
  return std::all_of(w.begin(), w.end(), [](Fe x) { return x == 0; });
}

bool subspace_contains(const Subspace& U, const Subspace& V, const Fq& F) {
  for (int i = 0; i < V.dim(); ++i) {
    std::vector<Fe> v(std::size_t(U.ambient));
    for (int j = 0; j < U.ambient; ++j) v[std::size_t(j)] = V.basis.at(i, j);
    if (!subspace_contains(U, v, F)) return false;
  }
  return true;
}

std::vector<int> subspace_pivots(const Subspace& U) {
  std::vector<int> out;
  out.reserve(std::size_t(U.dim()));
  for (int i = 0; i < U.dim(); ++i)
    for (int j = 0; j < U.ambient; ++j)
      if (U.basis.at(i, j) != 0) {
        out.push_back(j);
        break;
      }
  return out;
}

std::optional<std::vector<Fe>> subspace_coordinates(const Subspace& U,
                                                    const std::vector<Fe>& v,
                                                    const Fq& F) {
  if (int(v.size()) != U.ambient) fail(errc::ambient_mismatch, "vector size != ambient");
  std::vector<Fe> w = v;
  std::vector<Fe> coords = reduce_against(U, w, F);
  for (Fe x : w)
    if (x != 0) return std::nullopt;
  return coords;
}

std::optional<std::vector<Fe>> solve(const Mat& A, const std::vector<Fe>& b, const Fq& F) {
  if (int(b.size()) != A.rows) fail(errc::ambient_mismatch, "solve: rhs size != rows");
  Mat aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[std::size_t(i)];
  }
  RrefResult r = rref(aug, F);
  std::vector<Fe> x(std::size_t(A.cols), 0);
  for (int i = 0; i < r.rank; ++i) {
    int piv = r.pivots[std::size_t(i)];
    if (piv == A.cols) return std::nullopt;  // inconsistent
    x[std::size_t(piv)] = r.m.at(i, A.cols);
  }
  return x;
}

Poly charpoly(const Mat& M, const Fq& F) {
  if (M.rows != M.cols) fail(errc::ambient_mismatch, "charpoly of a non-square matrix");
  int n = M.rows;
  if (n == 0) return poly_const(1);
  Mat H = M;

  // Similarity reduction to upper Hessenberg form.
  for (int c = 0; c + 2 < n; ++c) {
    int piv = -1;
    for (int i = c + 1; i < n; ++i)
      if (H.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(H.at(piv, j), H.at(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(H.at(i, piv), H.at(i, c + 1));
    }
    Fe inv = F.inv(H.at(c + 1, c));
    for (int i = c + 2; i < n; ++i) {
      Fe u = F.mul(H.at(i, c), inv);
      if (u == 0) continue;
      for (int j = 0; j < n; ++j) H.at(i, j) = F.sub(H.at(i, j), F.mul(u, H.at(c + 1, j)));
      for (int r = 0; r < n; ++r) H.at(r, c + 1) = F.add(H.at(r, c + 1), F.mul(u, H.at(r, i)));
    }
  }

  // Characteristic polynomials of leading principal submatrices.
  std::vector<Poly> p(std::size_t(n) + 1);
  p[0] = poly_const(1);
  for (int m = 1; m <= n; ++m) {
    Poly term = poly_mul(poly_sub(poly_x(), poly_const(H.at(m - 1, m - 1)), F), p[std::size_t(m - 1)], F);
    Fe run = 1;
    for (int i = 1; i < m; ++i) {
      run = F.mul(run, H.at(m - i, m - i - 1));
      if (run == 0) break;
      Fe coef = F.mul(H.at(m - 1 - i, m - 1), run);
      if (coef == 0) continue;
      term = poly_sub(term, poly_scale(p[std::size_t(m - 1 - i)], coef, F), F);
    }
    p[std::size_t(m)] = term;
  }
  return p[std::size_t(n)];
}

}  // namespace gau
