#include "gau/units.hpp"

#include <algorithm>
#include <utility>

#include "gau/error.hpp"
#include "gau/radical.hpp"

namespace gau {

BigInt gl_order(int n, const BigInt& q) {
  BigInt qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  BigInt out = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    out *= qn - qi;
    qi *= q;
  }
  return out;
}

BigInt unit_group_order(const Decomposition& dec, int radical_dim, std::uint64_t q) {
  BigInt out = 1;
  for (int i = 0; i < radical_dim; ++i) out *= q;
  for (const auto& c : dec.components) {
    BigInt qd = 1;
    for (int i = 0; i < c.d; ++i) qd *= q;
    BigInt gl = gl_order(c.n, qd);
    for (int i = 0; i < c.count; ++i) out *= gl;
  }
  return out;
}

bool is_unit(const GroupAlgebra& A, const GroupAlgebra::Elt& a) {
  return det(A.left_rep(a), A.F) != 0;
}

BigInt brute_force_units(const GroupTable& G, const Fq& F) {
  BigInt space = 1;
  for (int i = 0; i < G.order; ++i) {
    space *= F.q();
    if (space > (BigInt(1) << 20)) fail(errc::too_large, "element space exceeds the 2^20 cap");
  }
  GroupAlgebra A{F, G};
  GroupAlgebra::Elt a(std::size_t(G.order), 0);
  BigInt count = 0;
  for (;;) {
    if (is_unit(A, a)) ++count;
    int pos = 0;
    while (pos < G.order) {
      a[std::size_t(pos)] = Fe(a[std::size_t(pos)] + 1);
      if (a[std::size_t(pos)] < F.q()) break;
      a[std::size_t(pos)] = 0;
      ++pos;
    }
    if (pos == G.order) break;
  }
  return count;
}

GroupAlgebra::Elt AffineFamily::at(const GroupAlgebra& A, const std::vector<Fe>& params) const {
  if (params.size() != raw.size()) fail(errc::internal, "parameter count mismatch");
  GroupAlgebra::Elt v = A.one();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (params[i] == 0) continue;
    v = A.add(v, A.scale(params[i], raw[i]));
  }
  return v;
}

bool AffineFamily::contains(const GroupAlgebra& A, const GroupAlgebra::Elt& v) const {
  GroupAlgebra::Elt d = A.sub(v, A.one());
  return subspace_contains(dirs, d, A.F);
}

AffineFamily affine_family(std::string name, std::vector<GroupAlgebra::Elt> raw, const Fq& F) {
  AffineFamily fam;
  fam.name = std::move(name);
  if (!raw.empty()) {
    Mat m(int(raw.size()), int(raw[0].size()));
    for (std::size_t i = 0; i < raw.size(); ++i)
      for (std::size_t j = 0; j < raw[i].size(); ++j) m.at(int(i), int(j)) = raw[i][j];
    fam.dirs = span_rows(m, F);
    if (fam.dirs.dim() != int(raw.size()))
      fail(errc::internal, "family directions are not independent");
  }
  fam.raw = std::move(raw);
  return fam;
}

AffineFamily v_group(const Subspace& J) {
  AffineFamily fam;
  fam.name = "V";
  fam.dirs = J;
  for (int i = 0; i < J.dim(); ++i) {
    GroupAlgebra::Elt row(std::size_t(J.ambient));
    for (int j = 0; j < J.ambient; ++j) row[std::size_t(j)] = J.basis.at(i, j);
    fam.raw.push_back(std::move(row));
  }
  return fam;
}

Subspace centralizer_space(const GroupAlgebra& A,
                           const std::vector<GroupAlgebra::Elt>& targets, const Subspace& J) {
  if (targets.empty()) fail(errc::internal, "centralizer needs at least one target");
  // Solve (x*t - t*x) = 0 for x = params * J-basis: stack one |G|-row block
  // per target, columns indexed by J parameters.
  int n = J.dim();
  Mat M(int(targets.size()) * J.ambient, n);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    Mat R = A.right_rep(targets[t]);  // coords(x * t)
    Mat L = A.left_rep(targets[t]);   // coords(t * x)
    for (int i = 0; i < n; ++i) {
      GroupAlgebra::Elt b(std::size_t(J.ambient));
      for (int j = 0; j < J.ambient; ++j) b[std::size_t(j)] = J.basis.at(i, j);
      for (int r = 0; r < J.ambient; ++r) {
        Fe acc = 0;
        for (int c = 0; c < J.ambient; ++c)
          acc = A.F.add(acc, A.F.mul(A.F.sub(R.at(r, c), L.at(r, c)), b[std::size_t(c)]));
        M.at(int(t) * J.ambient + r, i) = acc;
      }
    }
  }
  Subspace params = kernel(M, A.F);
  // Map parameter solutions back to ambient coordinates.
  Mat out(params.dim(), J.ambient);
  for (int s = 0; s < params.dim(); ++s)
    for (int i = 0; i < n; ++i) {
      Fe c = params.basis.at(s, i);
      if (c == 0) continue;
      for (int j = 0; j < J.ambient; ++j)
        out.at(s, j) = A.F.add(out.at(s, j), A.F.mul(c, J.basis.at(i, j)));
    }
  return span_rows(out, A.F);
}

Subspace center_of_v(const GroupAlgebra& A, const Subspace& J) {
  if (J.dim() == 0) return subspace_zero(J.ambient);
  std::vector<GroupAlgebra::Elt> basis;
  for (int i = 0; i < J.dim(); ++i) {
    GroupAlgebra::Elt row(std::size_t(J.ambient));
    for (int j = 0; j < J.ambient; ++j) row[std::size_t(j)] = J.basis.at(i, j);
    basis.push_back(std::move(row));
  }
  return centralizer_space(A, basis, J);
}

namespace {

std::string modulus_string(const Fq& F) {
  const auto& m = F.modulus();
  std::string s;
  for (int i = int(m.size()) - 1; i >= 0; --i) {
    if (m[std::size_t(i)] == 0) continue;
    if (!s.empty()) s += " + ";
    std::uint32_t c = m[std::size_t(i)];
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace

UnitReport structure_report(const GroupTable& G, const Fq& F, std::uint64_t seed) {
  UnitReport rep;
  rep.p = F.p();
  rep.k = int(F.k());
  rep.q = F.q();
  rep.modulus = modulus_string(F);
  rep.group_spec = G.spec.empty() ? "order " + std::to_string(G.order) : G.spec;
  rep.group_order = G.order;

  GroupAlgebra GA{F, G};
  Algebra A = algebra_of(GA);
  Subspace J = jacobson_radical(A, seed);
  rep.radical_dim = J.dim();
  rep.nilpotency = nilpotency_index(J, A);

  QuotientAlgebra Q = quotient_algebra(A, J);
  Decomposition central = central_decomposition(Q.alg, seed);
  Decomposition counted = ferraz_decomposition(G, F, J.dim());
  if (!(central == counted))
    fail(errc::certification, "idempotent and counting decompositions disagree");
  rep.dec = central;
  rep.ferraz = cyclotomic_classes(G, F.p(), F.q());
  rep.unit_order = unit_group_order(rep.dec, rep.radical_dim, F.q());

  if (G.spec == "C3xD10" && F.p() != 3) {
    PredictedCase pc = predicted_c3xd10(F.p(), int(F.k()));
    if (!(pc.dec == rep.dec) || pc.radical_dim != rep.radical_dim ||
        pc.nilpotency != rep.nilpotency)
      fail(errc::certification, "computed invariants disagree with the reference table");
    rep.case_label = pc.case_label;
    rep.structure = pc.structure;
  } else {
    rep.case_label = "outside reference table";
    rep.structure = "";
  }
  return rep;
}

}  // namespace gau
