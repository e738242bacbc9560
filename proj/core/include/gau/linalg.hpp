#pragma once

#include <optional>
#include <vector>

#include "gau/field.hpp"
#include "gau/poly.hpp"

namespace gau {

/// Dense row-major matrix over a field fixed by context.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Fe> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * std::size_t(c), 0) {}

  Fe& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  Fe at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

  bool operator==(const Mat&) const = default;
};

Mat mat_identity(int n);
Mat mat_add(const Mat& A, const Mat& B, const Fq& F);
Mat mat_sub(const Mat& A, const Mat& B, const Fq& F);
Mat mat_scale(const Mat& A, Fe s, const Fq& F);
Mat mat_mul(const Mat& A, const Mat& B, const Fq& F);
Mat mat_transpose(const Mat& A);
std::vector<Fe> mat_apply(const Mat& A, const std::vector<Fe>& v, const Fq& F);

struct RrefResult {
  Mat m;
  int rank = 0;
  std::vector<int> pivots;  // pivot column per nonzero row
};

/// Reduced row echelon form: pivots are 1, pivot columns are otherwise zero,
/// pivot columns strictly increase.  Zero rows are kept at the bottom.
RrefResult rref(Mat m, const Fq& F);

Fe det(Mat m, const Fq& F);

/// Canonical subspace of F^ambient: the basis is in RREF with zero rows
/// dropped, so two subspaces are equal iff their representations are equal.
struct Subspace {
  int ambient = 0;
  Mat basis;  // basis.rows x ambient, RREF, no zero rows

  int dim() const { return basis.rows; }
  bool operator==(const Subspace&) const = default;
};

Subspace subspace_zero(int ambient);
Subspace subspace_full(int ambient);

/// Span of the rows of m (ambient = m.cols).
Subspace span_rows(const Mat& m, const Fq& F);

/// Right null space {v : m v = 0} as a subspace of F^cols.
Subspace kernel(const Mat& m, const Fq& F);

Subspace subspace_sum(const Subspace& U, const Subspace& V, const Fq& F);

/// Zassenhaus intersection.  Ambients must match (errc::ambient_mismatch).
Subspace subspace_intersect(const Subspace& U, const Subspace& V, const Fq& F);

bool subspace_contains(const Subspace& U, const std::vector<Fe>& v, const Fq& F);
bool subspace_contains(const Subspace& U, const Subspace& V, const Fq& F);

/// Pivot column of each basis row (the basis is RREF, so this is the leading
/// column), in row order.
std::vector<int> subspace_pivots(const Subspace& U);

/// Coordinates of v in U's basis, if v lies in U.
std::optional<std::vector<Fe>> subspace_coordinates(const Subspace& U,
                                                    const std::vector<Fe>& v,
                                                    const Fq& F);

/// One solution x of A x = b, if consistent.
std::optional<std::vector<Fe>> solve(const Mat& A, const std::vector<Fe>& b, const Fq& F);

/// Characteristic polynomial det(xI - M) via Hessenberg reduction.  Monic,
/// degree n, exact over any field.
Poly charpoly(const Mat& M, const Fq& F);

}  // namespace gau
