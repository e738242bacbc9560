#include "gau/p5.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gau/error.hpp"
#include "gau/group.hpp"
#include "gau/linalg.hpp"
#include "gau/radical.hpp"

namespace gau {

bool StepResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const StepCheck& c) { return c.ok; });
}

std::string StepResult::first_witness() const {
  for (const auto& c : checks)
    if (!c.ok) return c.what + ": " + c.witness;
  return {};
}

bool P5Report::passed() const {
  return std::all_of(steps.begin(), steps.end(), [](const StepResult& s) { return s.ok(); });
}

int P5Report::dim_of(const std::string& name) const {
  for (const auto& [n, d] : dims)
    if (n == name) return d;
  return -1;
}

namespace {

using Elt = GroupAlgebra::Elt;

// Polynomials in z with z^3 = 1.
Poly zfold(const Poly& a, const Fq& F) {
  std::vector<Fe> c(3, 0);
  for (int i = 0; i <= a.deg(); ++i)
    c[std::size_t(i % 3)] = F.add(c[std::size_t(i % 3)], a.coeff(i));
  return poly_trim(poly_from(std::move(c)));
}

Poly zmake(Fe c0, Fe c1, Fe c2) { return poly_trim(poly_from({c0, c1, c2})); }

Poly zmul(const Poly& a, const Poly& b, const Fq& F) { return zfold(poly_mul(a, b, F), F); }

Poly zlin(const Poly& a, Fe ca, const Poly& b, Fe cb, const Fq& F) {
  std::vector<Fe> c(3, 0);
  for (int i = 0; i < 3; ++i)
    c[std::size_t(i)] = F.add(F.mul(ca, a.coeff(i)), F.mul(cb, b.coeff(i)));
  return poly_trim(poly_from(std::move(c)));
}

Poly zscale(const Poly& a, int s, const Fq& F) {
  return zlin(a, F.from_int(std::uint64_t(((s % 5) + 5) % 5)), poly_const(0), 0, F);
}

Poly zadd(const Poly& a, const Poly& b, const Fq& F) { return zlin(a, F.one(), b, F.one(), F); }

Poly zsub(const Poly& a, const Poly& b, const Fq& F) {
  return zlin(a, F.one(), b, F.neg(F.one()), F);
}

// Builders for F[C3xD10] elements: y-polynomial times z^j, optionally times x.
struct Ctx {
  const GroupAlgebra& A;
  const Fq& F;
  int gx, gy, gz;
  Elt one, X, yhat;
  std::array<Elt, 5> Y;   // y^0..y^4
  std::array<Elt, 3> Zp;  // z^0..z^2
  Elt ym1, ym1sq, yp1sq, y3m1, y3m2, y1my3, prefR, prefM;

  explicit Ctx(const GroupAlgebra& a) : A(a), F(a.F) {
    gx = A.G.generator("x");
    gy = A.G.generator("y");
    gz = A.G.generator("z");
    one = A.one();
    X = A.basis(gx);
    Y[0] = one;
    for (int i = 1; i < 5; ++i) Y[std::size_t(i)] = A.mul(Y[std::size_t(i - 1)], A.basis(gy));
    Zp[0] = one;
    for (int j = 1; j < 3; ++j) Zp[std::size_t(j)] = A.mul(Zp[std::size_t(j - 1)], A.basis(gz));
    yhat = A.hat(subgroup_generated(A.G, {gy}));
    ym1 = A.sub(Y[1], one);
    ym1sq = A.mul(ym1, ym1);
    yp1sq = A.mul(A.add(Y[1], one), A.add(Y[1], one));
    y3m1 = A.mul(Y[3], ym1);
    y3m2 = A.mul(Y[3], ym1sq);
    Elt onemy = A.sub(one, Y[1]);
    Elt onemy3 = A.mul(onemy, A.mul(onemy, onemy));
    y1my3 = A.mul(Y[1], onemy3);
    prefR = A.mul(y1my3, X);
    prefM = A.mul(A.mul(A.mul(Y[1], yp1sq), onemy), A.add(one, X));
  }

  // Small-integer y-polynomial c0 + c1 y + ...
  Elt yp(std::initializer_list<int> cs) const {
    Elt e = A.zero();
    int i = 0;
    for (int c : cs) {
      int m = ((c % 5) + 5) % 5;
      if (m != 0) e = A.add(e, A.scale(F.from_int(std::uint64_t(m)), Y[std::size_t(i)]));
      ++i;
    }
    return e;
  }

  Elt term(const Elt& base, int zj, bool withx) const {
    Elt e = A.mul(base, Zp[std::size_t(zj)]);
    return withx ? A.mul(e, X) : e;
  }

  // base * f(z), optionally times x.
  Elt zterm(const Elt& base, const Poly& f, bool withx) const {
    Poly g = zfold(f, F);
    Elt e = A.zero();
    for (int j = 0; j < 3; ++j) {
      Fe c = g.coeff(j);
      if (c != 0) e = A.add(e, A.scale(c, term(base, j, withx)));
    }
    return e;
  }
};

std::string params_str(const std::vector<Fe>& par) {
  std::string s = "params [";
  for (std::size_t i = 0; i < par.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(par[i]);
  }
  return s + "]";
}

struct SweepResult {
  int visited = 0;
  int failed = 0;
  bool exhaustive = false;
  std::string witness;
};

// Visits every tuple in F^slots when |F|^slots <= 5^6, otherwise `samples`
// seeded draws.  fn returns empty on pass, a witness on failure.
SweepResult sweep(const Fq& F, int slots, int samples, std::mt19937_64& rng,
                  const std::function<std::string(const std::vector<Fe>&)>& fn) {
  SweepResult out;
  double bits = slots * std::log2(double(F.q()));
  out.exhaustive = bits <= std::log2(15625.0) + 1e-9;
  std::vector<Fe> par(std::size_t(slots), 0);
  auto visit = [&]() {
    std::string w = fn(par);
    ++out.visited;
    if (!w.empty() && out.failed++ == 0) out.witness = w;
  };
  if (out.exhaustive) {
    for (;;) {
      visit();
      int pos = 0;
      while (pos < slots) {
        par[std::size_t(pos)] = Fe(par[std::size_t(pos)] + 1);
        if (par[std::size_t(pos)] < F.q()) break;
        par[std::size_t(pos)] = 0;
        ++pos;
      }
      if (pos == slots) break;
    }
  } else {
    for (int s = 0; s < samples; ++s) {
      for (auto& v : par) v = Fe(rng() % F.q());
      visit();
    }
  }
  return out;
}

void add_check(StepResult& st, std::string what, bool ok, std::string witness = "") {
  // witness is diagnostic: kept only when the check fails
  st.checks.push_back({std::move(what), ok, ok ? std::string() : std::move(witness)});
}

void add_sweep(StepResult& st, std::string what, const SweepResult& r) {
  what += " (" + std::to_string(r.visited - r.failed) + "/" + std::to_string(r.visited);
  what += r.exhaustive ? ", exhaustive)" : ", sampled)";
  st.checks.push_back({std::move(what), r.failed == 0, r.witness});
}

std::vector<Fe> slice(const std::vector<Fe>& par, int from, int len) {
  return std::vector<Fe>(par.begin() + from, par.begin() + from + len);
}

}  // namespace

P5Hooks default_p5_hooks() {
  P5Hooks h;

  h.conjugation_delta = [](const GroupAlgebra& A, Fe a, const std::vector<Fe>& b) {
    Ctx c(A);
    const Fq& F = A.F;
    // 2a * yhat * (sum_j (sum_i i b_{i+4j}) z^j) * x
    Elt acc = A.zero();
    for (int j = 0; j < 3; ++j) {
      Fe s = 0;
      for (int i = 1; i <= 4; ++i)
        s = F.add(s, F.mul(F.from_int(std::uint64_t(i)), b[std::size_t(i - 1 + 4 * j)]));
      if (s != 0) acc = A.add(acc, A.scale(s, c.term(c.yhat, j, true)));
    }
    return A.scale(F.mul(F.from_int(2), a), acc);
  };

  h.st_corrections = [](const std::array<Poly, 5>& b, const std::array<Poly, 4>& c,
                        const Fq& F) {
    // k1 = (c4 + 2c3)(b4 - b5), k2 = (c4 + 2c3)(b2 - b3),
    // k3 = 2(c4^2 - c3 c4 - c3^2)(b4 - b5)
    const Poly &b2 = b[1], &b3 = b[2], &b4 = b[3], &b5 = b[4];
    const Poly &c3 = c[2], &c4 = c[3];
    Poly lin = zlin(c4, F.one(), c3, F.from_int(2), F);
    Poly b45 = zsub(b4, b5, F);
    Poly quad = zsub(zsub(zmul(c4, c4, F), zmul(c3, c4, F), F), zmul(c3, c3, F), F);
    return std::array<Poly, 3>{zmul(lin, b45, F), zmul(lin, zsub(b2, b3, F), F),
                               zscale(zmul(quad, b45, F), 2, F)};
  };

  h.nm_corrections = [](const GroupAlgebra& A, const std::vector<Fe>& cp, const Poly& r) {
    Ctx c(A);
    const Fq& F = A.F;
    // Index helpers into the 21 centralizer parameters: first block c_{i+3j}
    // (i = 1..3), x block c_{i+4j+9} (i = 1..4); cp is 0-based.
    auto first = [&](int i, int j) { return cp[std::size_t(i - 1 + 3 * j)]; };
    auto xblk = [&](int i, int j) { return cp[std::size_t(i + 4 * j + 8)]; };

    std::array<Fe, 3> Ac{}, Bc{}, Cc{};
    for (int j = 0; j < 3; ++j) {
      Ac[std::size_t(j)] =
          F.add(F.sub(F.sub(xblk(1, j), xblk(2, j)), xblk(3, j)), xblk(4, j));
      Fe s = 0;
      for (int i = 1; i <= 4; ++i)
        s = F.add(s, F.mul(F.from_int(std::uint64_t(i)), xblk(i, j)));
      Bc[std::size_t(j)] = s;
      Cc[std::size_t(j)] = F.sub(first(2, j), first(3, j));
    }
    Poly R = zfold(r, F);
    Poly Az = zmake(Ac[0], Ac[1], Ac[2]);
    Poly Bz = zmake(Bc[0], Bc[1], Bc[2]);
    Poly Cz = zmake(Cc[0], Cc[1], Cc[2]);

    // k1 = R (A + 3 R B) y(1-y)^3
    Poly k1z = zmul(R, zadd(Az, zscale(zmul(R, Bz, F), 3, F), F), F);
    Elt k1 = c.zterm(c.y1my3, k1z, false);

    // k2 = 2 R C y(1-y)^4 - 2 R^2 B y(1-y)^3 - 2 R sum_i d_i y^i
    Elt y1my4 = A.mul(c.y1my3, A.sub(c.one, c.Y[1]));
    Elt k2 = c.zterm(y1my4, zscale(zmul(R, Cz, F), 2, F), false);
    k2 = A.add(k2, c.zterm(c.y1my3, zscale(zmul(zmul(R, R, F), Bz, F), -2, F), false));

    static constexpr int dtab[5][4] = {
        {4, 4, 1, 1}, {4, 3, 3, 0}, {0, 4, 3, 3}, {2, 2, 1, 0}, {0, 2, 2, 1}};
    Elt dsum = A.zero();
    for (int i = 0; i <= 4; ++i) {
      std::array<Fe, 3> dc{};
      for (int j = 0; j < 3; ++j) {
        Fe acc = 0;
        for (int t = 0; t < 4; ++t)
          acc = F.add(acc, F.mul(F.from_int(std::uint64_t(dtab[i][t])), xblk(t + 1, j)));
        dc[std::size_t(j)] = acc;
      }
      dsum = A.add(dsum, c.zterm(c.Y[std::size_t(i)], zmake(dc[0], dc[1], dc[2]), false));
    }
    k2 = A.add(k2, A.mul(c.zterm(c.one, zscale(R, -2, F), false), dsum));
    return std::pair<Elt, Elt>{k1, k2};
  };

  return h;
}

P5Report verify_p5_structure(const Fq& F, std::uint64_t seed, const P5Hooks& hooks) {
  if (F.p() != 5) fail(errc::internal, "the step suite requires characteristic 5");
  P5Report rep;
  rep.seed = seed;
  rep.k = int(F.k());

  GroupTable G = build_group("C3xD10");
  GroupAlgebra A{F, G};
  Ctx c(A);
  Algebra alg = algebra_of(A);
  Subspace J = jacobson_radical(alg, seed);
  std::mt19937_64 rng(seed);
  const int kSamples = 200;

  // Witness families in their defining parameter orders.
  std::vector<Elt> vraw;
  for (bool withx : {false, true})
    for (int j = 0; j < 3; ++j)
      for (int i = 1; i <= 4; ++i)
        vraw.push_back(c.term(A.sub(c.Y[std::size_t(i)], c.one), j, withx));
  AffineFamily V = affine_family("V", vraw, F);

  AffineFamily R = affine_family("R", {c.prefR}, F);

  std::vector<Elt> craw;
  for (int j = 0; j < 3; ++j)
    for (int i = 1; i <= 3; ++i)
      craw.push_back(c.term(A.add(A.sub(c.Y[std::size_t(i)], c.one),
                                  A.scale(F.from_int(std::uint64_t(i)),
                                          A.sub(c.Y[4], c.one))),
                            j, false));
  for (int j = 0; j < 3; ++j)
    for (int i = 1; i <= 4; ++i)
      craw.push_back(c.term(A.sub(c.Y[std::size_t(i)], c.one), j, true));
  AffineFamily CVR = affine_family("C_V(R)", craw, F);

  const std::array<Elt, 5> sbase = {c.Y[1], c.yp({0, 2, 1}), c.one, c.Y[1], c.yp1sq};
  std::vector<Elt> sraw;
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 3; ++i)
      sraw.push_back(c.term(A.mul(c.y3m2, sbase[std::size_t(j)]), i, j >= 3));
  AffineFamily S = affine_family("S", sraw, F);

  const std::array<Elt, 4> tbase = {A.mul(c.ym1, c.Y[1]), A.mul(c.ym1, c.yp1sq), c.Y[1],
                                    c.yp({1, 1, 1})};
  std::vector<Elt> traw;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 3; ++i)
      traw.push_back(c.term(A.mul(c.y3m1, tbase[std::size_t(j)]), i, j >= 2));
  AffineFamily T = affine_family("T", traw, F);

  std::vector<Elt> uraw;
  for (const Elt& base : {c.Y[1], c.yp1sq})
    for (int i = 0; i < 3; ++i) uraw.push_back(c.term(A.mul(c.y3m2, base), i, false));
  AffineFamily U = affine_family("U", uraw, F);

  std::vector<Elt> mraw;
  for (int j = 0; j < 3; ++j) mraw.push_back(c.term(c.prefM, j, false));
  AffineFamily M = affine_family("M", mraw, F);

  std::vector<Elt> zraw;
  for (int j = 0; j < 3; ++j) zraw.push_back(c.term(A.mul(c.Y[4], c.ym1sq), j, false));
  Elt y2m1 = A.sub(c.Y[2], c.one);
  for (int j = 0; j < 3; ++j)
    zraw.push_back(c.term(A.mul(c.Y[3], A.mul(y2m1, y2m1)), j, false));
  for (int j = 0; j < 3; ++j) zraw.push_back(c.term(c.yhat, j, true));
  AffineFamily ZV = affine_family("Z(V)", zraw, F);

  std::vector<Elt> cyraw;
  for (int j = 0; j < 3; ++j)
    for (int i = 1; i <= 4; ++i)
      cyraw.push_back(c.term(A.sub(c.Y[std::size_t(i)], c.one), j, false));
  for (int j = 0; j < 3; ++j) cyraw.push_back(c.term(c.yhat, j, true));
  AffineFamily CVy = affine_family("C_V(y)", cyraw, F);

  auto inv = [&](const Elt& v) {
    auto iv = A.inverse(v);
    if (!iv) fail(errc::internal, "family element is not a unit");
    return *iv;
  };
  auto conj = [&](const Elt& n, const Elt& g) { return A.mul(A.mul(inv(g), n), g); };

  // Step 1: R.
  {
    StepResult st{1, "one-parameter subgroup R", {}};
    add_check(st, "directions lie in V", subspace_contains(V.dirs, R.dirs, F));
    add_sweep(st, "products add parameters and commute",
              sweep(F, 2, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                Elt ra = R.at(A, {par[0]}), rb = R.at(A, {par[1]});
                Elt prod = A.mul(ra, rb);
                if (prod != R.at(A, {F.add(par[0], par[1])}) || prod != A.mul(rb, ra))
                  return params_str(par);
                return {};
              }));
    add_sweep(st, "fifth powers are trivial",
              sweep(F, 1, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                return A.pow(R.at(A, {par[0]}), 5) == c.one ? "" : params_str(par);
              }));
    rep.steps.push_back(std::move(st));
  }

  // Step 2: the centralizer of R in V.
  Subspace cvr_computed = centralizer_space(A, {R.at(A, {F.one()})}, J);
  {
    StepResult st{2, "centralizer of R", {}};
    add_check(st, "solution space has 21 parameters", cvr_computed.dim() == 21,
              "dim " + std::to_string(cvr_computed.dim()));
    add_check(st, "closed form equals the computed centralizer",
              CVR.dirs == cvr_computed);
    add_sweep(st, "displayed conjugation delta matches",
              sweep(F, 25, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                Fe a = par[0];
                std::vector<Fe> b = slice(par, 1, 24);
                Elt r = R.at(A, {a}), v = V.at(A, b);
                Elt delta = A.sub(conj(r, v), r);
                if (delta != hooks.conjugation_delta(A, a, b)) return params_str(par);
                return {};
              }));
    add_sweep(st, "fixed points are exactly the closed-form family",
              sweep(F, 25, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                Fe a = par[0];
                if (a == 0) a = F.one();
                std::vector<Fe> b = slice(par, 1, 24);
                Elt r = R.at(A, {a}), v = V.at(A, b);
                bool fixes = conj(r, v) == r;
                if (fixes != CVR.contains(A, v)) return params_str(par);
                return {};
              }));
    add_sweep(st, "fifth powers in V are trivial",
              sweep(F, 24, 100, rng, [&](const std::vector<Fe>& par) -> std::string {
                return A.pow(V.at(A, par), 5) == c.one ? "" : params_str(par);
              }));
    // v^-1 = v^4 and, modulo (y-1)^2 FG, equals 1 + 4 v1 + 4 v2 x.
    Subspace ideal2;
    {
      Mat rows(G.order, G.order);
      for (int g = 0; g < G.order; ++g) {
        Elt e = A.mul(c.ym1sq, A.basis(g));
        for (int j = 0; j < G.order; ++j) rows.at(g, j) = e[std::size_t(j)];
      }
      ideal2 = span_rows(rows, F);
    }
    add_sweep(st, "inverse shortcut holds",
              sweep(F, 24, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                Elt v = V.at(A, par);
                Elt v4 = A.pow(v, 4);
                if (v4 != inv(v)) return params_str(par);
                Elt v1 = A.zero(), v2 = A.zero();
                for (int j = 0; j < 3; ++j)
                  for (int i = 1; i <= 4; ++i) {
                    Elt dir = c.term(A.sub(c.Y[std::size_t(i)], c.one), j, false);
                    v1 = A.add(v1, A.scale(par[std::size_t(i - 1 + 4 * j)], dir));
                    v2 = A.add(v2, A.scale(par[std::size_t(12 + i - 1 + 4 * j)], dir));
                  }
                Elt four = A.scale(F.from_int(4), A.add(v1, A.mul(v2, c.X)));
                Elt diff = A.sub(v4, A.add(c.one, four));
                if (!subspace_contains(ideal2, diff, F)) return params_str(par);
                return {};
              }));
    std::vector<int> N = subgroup_generated(G, {c.gy});
    auto aug_member = [&](const Elt& u) {
      std::vector<Fe> aug = coset_augmentations(A, u, N);
      if (aug[0] != F.one()) return false;
      for (std::size_t i = 1; i < aug.size(); ++i)
        if (aug[i] != 0) return false;
      return true;
    };
    add_sweep(st, "membership agrees with the coset augmentation test",
              sweep(F, 24, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                Elt v = V.at(A, par);
                if (V.contains(A, v) != aug_member(v)) return params_str(par) + " member";
                Elt w1 = A.add(v, c.one);
                if (V.contains(A, w1) != aug_member(w1)) return params_str(par) + " +1";
                Elt w2 = A.add(v, c.X);
                if (V.contains(A, w2) != aug_member(w2)) return params_str(par) + " +x";
                return {};
              }));
    rep.steps.push_back(std::move(st));
  }

  // Step 3: S, T, their intersection, and a complement of it in T.
  {
    StepResult st{3, "abelian subgroups S and T and the complement", {}};
    add_check(st, "S has 15 parameters", S.param_dim() == 15 && S.dirs.dim() == 15);
    add_check(st, "T has 12 parameters", T.param_dim() == 12 && T.dirs.dim() == 12);
    add_check(st, "S lies in the centralizer", subspace_contains(CVR.dirs, S.dirs, F));
    add_check(st, "T lies in the centralizer", subspace_contains(CVR.dirs, T.dirs, F));
    add_sweep(st, "S is closed and abelian",
              sweep(F, 30, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                Elt s1 = S.at(A, slice(par, 0, 15)), s2 = S.at(A, slice(par, 15, 15));
                Elt prod = A.mul(s1, s2);
                if (!S.contains(A, prod) || prod != A.mul(s2, s1)) return params_str(par);
                return {};
              }));
    add_sweep(st, "T is closed and abelian",
              sweep(F, 24, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                Elt t1 = T.at(A, slice(par, 0, 12)), t2 = T.at(A, slice(par, 12, 12));
                Elt prod = A.mul(t1, t2);
                if (!T.contains(A, prod) || prod != A.mul(t2, t1)) return params_str(par);
                return {};
              }));
    add_sweep(st, "conjugates of S by T stay in S",
              sweep(F, 27, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                Elt s = S.at(A, slice(par, 0, 15)), t = T.at(A, slice(par, 15, 12));
                return S.contains(A, conj(s, t)) ? "" : params_str(par);
              }));
    add_sweep(st, "displayed corrections reproduce the conjugate",
              sweep(F, 27, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                std::array<Poly, 5> b;
                for (int j = 0; j < 5; ++j)
                  b[std::size_t(j)] = zmake(par[std::size_t(3 * j)],
                                            par[std::size_t(3 * j + 1)],
                                            par[std::size_t(3 * j + 2)]);
                std::array<Poly, 4> cc;
                for (int j = 0; j < 4; ++j)
                  cc[std::size_t(j)] = zmake(par[std::size_t(15 + 3 * j)],
                                             par[std::size_t(15 + 3 * j + 1)],
                                             par[std::size_t(15 + 3 * j + 2)]);
                auto [k1, k2, k3] = hooks.st_corrections(b, cc, F);
                Elt innerf = c.zterm(c.Y[1], b[0], false);
                innerf = A.add(innerf, c.zterm(c.yp({0, 2, 1}), b[1], false));
                innerf = A.add(innerf, c.zterm(c.one, b[2], false));
                innerf = A.add(innerf, c.zterm(A.mul(c.Y[3], A.sub(c.one, c.Y[1])), k1, false));
                innerf = A.add(innerf, c.zterm(c.Y[1], b[3], true));
                innerf = A.add(innerf, c.zterm(c.yp1sq, b[4], true));
                innerf = A.add(innerf, c.zterm(c.ym1sq, zadd(k2, k3, F), true));
                Elt claimed = A.add(c.one, A.mul(c.y3m2, innerf));
                Elt s = S.at(A, slice(par, 0, 15)), t = T.at(A, slice(par, 15, 12));
                return conj(s, t) == claimed ? "" : params_str(par);
              }));
    Subspace inter = subspace_intersect(S.dirs, T.dirs, F);
    add_check(st, "intersection is the six-parameter family", inter == U.dirs && inter.dim() == 6,
              "dim " + std::to_string(inter.dim()));

    // Complement: the subgroup generated by the x-block parameter directions
    // of T, one generator per F5-basis scalar of each direction.
    int kk = int(F.k());
    std::vector<Elt> wgens;
    for (int i = 6; i < 12; ++i)
      for (int m = 0; m < kk; ++m) {
        std::vector<Fe> par(12, 0);
        std::vector<std::uint32_t> digits(std::size_t(kk), 0);
        digits[std::size_t(m)] = 1;
        par[std::size_t(i)] = F.from_digits(digits);
        wgens.push_back(T.at(A, par));
      }
    std::vector<std::vector<Elt>> wpow;
    for (const Elt& w : wgens) {
      std::vector<Elt> pows{c.one};
      for (int e = 1; e < 5; ++e) pows.push_back(A.mul(pows.back(), w));
      wpow.push_back(std::move(pows));
    }
    auto phi = [&](const std::vector<Fe>& a) {
      Elt out = c.one;
      for (int i = 0; i < 6; ++i) {
        auto digits = F.digits(a[std::size_t(i)]);
        for (int m = 0; m < kk; ++m) {
          std::uint32_t e = digits[std::size_t(m)];
          if (e != 0) out = A.mul(out, wpow[std::size_t(i * kk + m)][std::size_t(e)]);
        }
      }
      return out;
    };
    {
      Mat gdirs(int(wgens.size()), G.order);
      for (std::size_t i = 0; i < wgens.size(); ++i) {
        Elt d = A.sub(wgens[i], c.one);
        for (int j = 0; j < G.order; ++j) gdirs.at(int(i), j) = d[std::size_t(j)];
      }
      Subspace wspan = span_rows(gdirs, F);
      add_check(st, "complement generators span T over the intersection",
                subspace_sum(U.dirs, wspan, F) == T.dirs);
    }
    add_sweep(st, "generator map is a homomorphism",
              sweep(F, 12, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                std::vector<Fe> a = slice(par, 0, 6), b = slice(par, 6, 6);
                std::vector<Fe> ab(6);
                for (int i = 0; i < 6; ++i) ab[std::size_t(i)] = F.add(a[std::size_t(i)], b[std::size_t(i)]);
                return A.mul(phi(a), phi(b)) == phi(ab) ? "" : params_str(par);
              }));
    add_sweep(st, "complement meets the intersection and S only trivially",
              sweep(F, 6, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                bool zero = std::all_of(par.begin(), par.end(), [](Fe v) { return v == 0; });
                Elt w = phi(par);
                if (U.contains(A, w) != zero) return params_str(par) + " meets intersection";
                if (S.contains(A, w) != zero) return params_str(par) + " meets S";
                return {};
              }));
    add_sweep(st, "intersection times complement fills T",
              sweep(F, 12, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                Elt u = U.at(A, slice(par, 0, 6));
                Elt w = phi(slice(par, 6, 6));
                return T.contains(A, A.mul(u, w)) ? "" : params_str(par);
              }));
    add_sweep(st, "conjugates of S by the complement stay in S",
              sweep(F, 21, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                Elt s = S.at(A, slice(par, 0, 15));
                Elt w = phi(slice(par, 15, 6));
                return S.contains(A, conj(s, w)) ? "" : params_str(par);
              }));
    add_check(st, "S and complement parameters fill the centralizer",
              S.param_dim() + 6 == CVR.param_dim());
    add_sweep(st, "products of S and the complement stay in the centralizer",
              sweep(F, 21, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                Elt s = S.at(A, slice(par, 0, 15));
                Elt w = phi(slice(par, 15, 6));
                return CVR.contains(A, A.mul(s, w)) ? "" : params_str(par);
              }));
    rep.steps.push_back(std::move(st));
  }

  // Step 4: M.
  {
    StepResult st{4, "three-parameter subgroup M", {}};
    add_check(st, "directions lie in V", subspace_contains(V.dirs, M.dirs, F));
    add_sweep(st, "products add parameters and commute",
              sweep(F, 6, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                Elt m1 = M.at(A, slice(par, 0, 3)), m2 = M.at(A, slice(par, 3, 3));
                Elt prod = A.mul(m1, m2);
                std::vector<Fe> sums(3);
                for (int i = 0; i < 3; ++i)
                  sums[std::size_t(i)] = F.add(par[std::size_t(i)], par[std::size_t(i + 3)]);
                if (prod != M.at(A, sums) || prod != A.mul(m2, m1)) return params_str(par);
                return {};
              }));
    add_sweep(st, "fifth powers are trivial",
              sweep(F, 3, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                return A.pow(M.at(A, par), 5) == c.one ? "" : params_str(par);
              }));
    rep.steps.push_back(std::move(st));
  }

  // Step 5: V splits over the centralizer with complement M.
  {
    StepResult st{5, "V as centralizer times M", {}};
    add_sweep(st, "conjugates of the centralizer by M stay inside",
              sweep(F, 24, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                Elt n = CVR.at(A, slice(par, 0, 21));
                Elt m = M.at(A, slice(par, 21, 3));
                return CVR.contains(A, conj(n, m)) ? "" : params_str(par);
              }));
    add_sweep(st, "displayed corrections reproduce the conjugate",
              sweep(F, 24, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                std::vector<Fe> cp = slice(par, 0, 21);
                Poly r = zmake(par[21], par[22], par[23]);
                Elt n = CVR.at(A, cp);
                Elt m = M.at(A, slice(par, 21, 3));
                auto [k1, k2] = hooks.nm_corrections(A, cp, r);
                Elt claimed = A.add(n, A.add(k1, A.mul(k2, c.X)));
                return conj(n, m) == claimed ? "" : params_str(par);
              }));
    Subspace inter = subspace_intersect(CVR.dirs, M.dirs, F);
    add_check(st, "centralizer meets M trivially", inter.dim() == 0,
              "dim " + std::to_string(inter.dim()));
    add_check(st, "parameter counts fill V",
              CVR.param_dim() + M.param_dim() == J.dim() &&
                  subspace_sum(CVR.dirs, M.dirs, F) == J);
    add_sweep(st, "products of the centralizer and M stay in V",
              sweep(F, 24, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                Elt n = CVR.at(A, slice(par, 0, 21));
                Elt m = M.at(A, slice(par, 21, 3));
                return V.contains(A, A.mul(n, m)) ? "" : params_str(par);
              }));
    rep.steps.push_back(std::move(st));
  }

  // Step 6: the center of V and the centralizer of y.
  Subspace zv_computed = center_of_v(A, J);
  Subspace cvy_computed = centralizer_space(A, {A.basis(c.gy)}, J);
  {
    StepResult st{6, "center of V and centralizer of y", {}};
    add_check(st, "center solution space has 9 parameters", zv_computed.dim() == 9,
              "dim " + std::to_string(zv_computed.dim()));
    add_check(st, "closed form equals the computed center", ZV.dirs == zv_computed);
    add_check(st, "centralizer of y has 15 parameters", cvy_computed.dim() == 15,
              "dim " + std::to_string(cvy_computed.dim()));
    add_check(st, "closed form equals the computed centralizer of y",
              CVy.dirs == cvy_computed);
    add_check(st, "center lies in the centralizer of y",
              subspace_contains(CVy.dirs, ZV.dirs, F));
    add_check(st, "centralizer of y lies in V", subspace_contains(V.dirs, CVy.dirs, F));
    add_sweep(st, "center elements commute with V",
              sweep(F, 33, kSamples, rng, [&](const std::vector<Fe>& par) -> std::string {
                Elt u = ZV.at(A, slice(par, 0, 9));
                Elt v = V.at(A, slice(par, 9, 24));
                return A.mul(u, v) == A.mul(v, u) ? "" : params_str(par);
              }));
    rep.steps.push_back(std::move(st));
  }

  add_check(rep.steps.front(), "V directions equal the radical", V.dirs == J);

  rep.dims = {{"V", V.param_dim()},   {"R", R.param_dim()}, {"C_V(R)", cvr_computed.dim()},
              {"S", S.param_dim()},   {"T", T.param_dim()}, {"U", U.param_dim()},
              {"M", M.param_dim()},   {"Z(V)", zv_computed.dim()},
              {"C_V(y)", cvy_computed.dim()}};
  return rep;
}

}  // namespace gau
