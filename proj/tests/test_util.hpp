#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gau/error.hpp"
#include "gau/linalg.hpp"

// Runs fn and reports the gau error code it throws, if any.
template <class Fn>
std::optional<gau::errc> code_of(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const gau::error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Stacks row vectors into a matrix with the given column count.
inline gau::Mat rows_mat(int ambient, const std::vector<std::vector<gau::Fe>>& rows) {
  gau::Mat m{int(rows.size()), ambient};
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < ambient; ++j) m.at(int(i), j) = rows[i][std::size_t(j)];
  return m;
}

inline gau::Subspace span_of(const gau::Fq& F, int ambient,
                             const std::vector<std::vector<gau::Fe>>& rows) {
  return gau::span_rows(rows_mat(ambient, rows), F);
}

inline std::vector<gau::Fe> basis_row(const gau::Subspace& U, int i) {
  std::vector<gau::Fe> v(std::size_t(U.ambient));
  for (int j = 0; j < U.ambient; ++j) v[std::size_t(j)] = U.basis.at(i, j);
  return v;
}

inline bool subspaces_equal(const gau::Subspace& U, const gau::Subspace& V,
                            const gau::Fq& F) {
  return gau::subspace_contains(U, V, F) && gau::subspace_contains(V, U, F);
}
