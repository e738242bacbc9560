#include "gau/poly.hpp"

#include <algorithm>

#include "gau/linalg.hpp"

namespace gau {

Poly poly_trim(Poly a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
  return a;
}

Poly poly_from(std::vector<Fe> coeffs) { return poly_trim(Poly{std::move(coeffs)}); }

Poly poly_x(unsigned power) {
  Poly a;
  a.c.assign(power + 1, 0);
  a.c[power] = 1;
  return a;
}

Poly poly_const(Fe v) { return v == 0 ? Poly{} : Poly{{v}}; }

Poly poly_add(const Poly& a, const Poly& b, const Fq& F) {
  Poly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < out.c.size(); ++i)
    out.c[i] = F.add(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
  return poly_trim(out);
}

Poly poly_sub(const Poly& a, const Poly& b, const Fq& F) {
  Poly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < out.c.size(); ++i)
    out.c[i] = F.sub(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
  return poly_trim(out);
}

Poly poly_scale(const Poly& a, Fe s, const Fq& F) {
  if (s == 0) return {};
  Poly out = a;
  for (auto& c : out.c) c = F.mul(c, s);
  return poly_trim(out);
}

Poly poly_mul(const Poly& a, const Poly& b, const Fq& F) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly out;
  out.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = F.add(out.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  return poly_trim(out);
}

Poly poly_monic(const Poly& a, const Fq& F) {
  if (a.is_zero() || a.lead() == 1) return a;
  return poly_scale(a, F.inv(a.lead()), F);
}

PolyDivMod poly_divmod(const Poly& a, const Poly& b, const Fq& F) {
  if (b.is_zero()) fail(errc::zero_polynomial, "polynomial division by zero");
  PolyDivMod out;
  out.rem = a;
  if (a.deg() < b.deg()) return out;
  out.quot.c.assign(std::size_t(a.deg() - b.deg()) + 1, 0);
  Fe lead_inv = F.inv(b.lead());
  while (out.rem.deg() >= b.deg()) {
    int shift = out.rem.deg() - b.deg();
    Fe coef = F.mul(out.rem.lead(), lead_inv);
    out.quot.c[std::size_t(shift)] = coef;
    for (int i = 0; i <= b.deg(); ++i)
      out.rem.c[std::size_t(i + shift)] =
          F.sub(out.rem.c[std::size_t(i + shift)], F.mul(coef, b.c[std::size_t(i)]));
    out.rem = poly_trim(out.rem);
    if (out.rem.is_zero()) break;
  }
  out.quot = poly_trim(out.quot);
  return out;
}

Poly poly_mod(const Poly& a, const Poly& b, const Fq& F) { return poly_divmod(a, b, F).rem; }

Poly poly_gcd(Poly a, Poly b, const Fq& F) {
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a, F);
}

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& mod, const Fq& F) {
  Poly result = poly_mod(poly_const(1), mod, F);
  Poly b = poly_mod(base, mod, F);
  while (e > 0) {
    if (e & 1) result = poly_mod(poly_mul(result, b, F), mod, F);
    b = poly_mod(poly_mul(b, b, F), mod, F);
    e >>= 1;
  }
  return result;
}

Poly poly_derivative(const Poly& a, const Fq& F) {
  Poly out;
  if (a.deg() < 1) return out;
  out.c.resize(std::size_t(a.deg()), 0);
  for (int i = 1; i <= a.deg(); ++i)
    out.c[std::size_t(i - 1)] = F.mul(a.c[std::size_t(i)], F.from_int(std::uint64_t(i)));
  return poly_trim(out);
}

Fe poly_eval(const Poly& a, Fe x, const Fq& F) {
  Fe acc = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.c[i]);
  return acc;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (std::size_t i = a.c.size(); i-- > 0;)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

std::string poly_to_string(const Poly& a, const Fq&) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (a.c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(a.c[i]);
    } else {
      if (a.c[i] != 1) out += std::to_string(a.c[i]) + "*";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return out;
}

bool poly_irreducible(const Poly& f, const Fq& F) {
  int k = f.deg();
  if (k < 1) return false;
  if (k == 1) return true;
  Poly fm = poly_monic(f, F);
  if (fm.c[0] == 0 && k > 1) return false;  // x divides f

  std::vector<unsigned> primes;
  unsigned rem = unsigned(k);
  for (unsigned l = 2; l * l <= rem; ++l)
    if (rem % l == 0) {
      primes.push_back(l);
      while (rem % l == 0) rem /= l;
    }
  if (rem > 1) primes.push_back(rem);

  // h_i = x^(q^i) mod f, advanced one Frobenius step at a time so the
  // exponent never overflows.
  auto frobenius_iterate = [&](unsigned steps) {
    Poly h = poly_mod(poly_x(), fm, F);
    for (unsigned i = 0; i < steps; ++i) h = poly_powmod(h, F.q(), fm, F);
    return h;
  };

  Poly x = poly_mod(poly_x(), fm, F);
  if (frobenius_iterate(unsigned(k)) != x) return false;
  for (unsigned l : primes) {
    Poly h = poly_sub(frobenius_iterate(unsigned(k) / l), x, F);
    if (poly_gcd(h, fm, F).deg() != 0) return false;
  }
  return true;
}

namespace {

// p-th root of f when f'(x) = 0, i.e. f(x) = g(x^p): coefficient i of g is
// coefficient ip of f raised to p^(k-1) (the inverse Frobenius).
Poly pth_root(const Poly& f, const Fq& F) {
  std::uint64_t p = F.p();
  std::uint64_t inv_frob = 1;
  for (unsigned i = 0; i + 1 < F.k(); ++i) inv_frob *= p;  // p^(k-1)
  Poly g;
  g.c.assign(std::size_t(f.deg() / int(p)) + 1, 0);
  for (std::size_t i = 0; i < g.c.size(); ++i)
    g.c[i] = F.pow(f.c[i * std::size_t(p)], inv_frob);
  return poly_trim(g);
}

// Squarefree decomposition of a monic polynomial (char-p aware).
std::vector<PolyFactor> squarefree_parts(const Poly& f, const Fq& F) {
  std::vector<PolyFactor> out;
  if (f.deg() < 1) return out;
  Poly df = poly_derivative(f, F);
  if (df.is_zero()) {
    for (auto& pf : squarefree_parts(pth_root(f, F), F))
      out.push_back({pf.factor, pf.multiplicity * int(F.p())});
    return out;
  }
  Poly c = poly_gcd(f, df, F);
  Poly w = poly_divmod(f, c, F).quot;
  int i = 1;
  while (w.deg() > 0) {
    Poly y = poly_gcd(w, c, F);
    Poly z = poly_divmod(w, y, F).quot;
    if (z.deg() > 0) out.push_back({poly_monic(z, F), i});
    w = y;
    c = poly_divmod(c, y, F).quot;
    ++i;
  }
  if (c.deg() > 0) {
    for (auto& pf : squarefree_parts(pth_root(c, F), F))
      out.push_back({pf.factor, pf.multiplicity * int(F.p())});
  }
  return out;
}

// Berlekamp splitting of a monic squarefree polynomial.
std::vector<Poly> berlekamp_split(const Poly& g, const Fq& F) {
  int n = g.deg();
  if (n <= 1) return {g};

  // Column j of Q is x^(jq) mod g.
  Poly xq = poly_powmod(poly_x(), F.q(), g, F);
  Mat Q(n, n);
  Poly cur = poly_mod(poly_const(1), g, F);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) Q.at(i, j) = cur.coeff(i);
    cur = poly_mod(poly_mul(cur, xq, F), g, F);
  }
  for (int i = 0; i < n; ++i) Q.at(i, i) = F.sub(Q.at(i, i), 1);

  Subspace K = kernel(Q, F);
  std::size_t r = std::size_t(K.dim());  // number of irreducible factors
  std::vector<Poly> factors{g};
  if (r == 1) return factors;

  for (int row = 0; row < K.dim() && factors.size() < r; ++row) {
    Poly b;
    b.c.assign(std::size_t(n), 0);
    for (int j = 0; j < n; ++j) b.c[std::size_t(j)] = K.basis.at(row, j);
    b = poly_trim(b);
    if (b.deg() < 1) continue;
    for (std::uint64_t c = 0; c < F.q() && factors.size() < r; ++c) {
      Poly shifted = poly_sub(b, poly_const(Fe(c)), F);
      std::vector<Poly> next;
      for (const Poly& h : factors) {
        Poly d = poly_gcd(h, shifted, F);
        if (d.deg() > 0 && d.deg() < h.deg()) {
          next.push_back(d);
          next.push_back(poly_monic(poly_divmod(h, d, F).quot, F));
        } else {
          next.push_back(h);
        }
      }
      factors = std::move(next);
    }
  }
  return factors;
}

}  // namespace

std::vector<PolyFactor> berlekamp_factor(const Poly& f, const Fq& F) {
  if (f.is_zero()) fail(errc::zero_polynomial, "cannot factor the zero polynomial");
  if (F.q() > (1ull << 16)) fail(errc::too_large, "factorization requires q <= 2^16");

  std::vector<PolyFactor> out;
  Poly fm = poly_monic(f, F);
  for (const auto& part : squarefree_parts(fm, F))
    for (const Poly& irr : berlekamp_split(part.factor, F))
      out.push_back({irr, part.multiplicity});

  std::sort(out.begin(), out.end(),
            [](const PolyFactor& a, const PolyFactor& b) { return poly_less(a.factor, b.factor); });
  // merge any repeats (defensive; squarefree parts are coprime)
  std::vector<PolyFactor> merged;
  for (auto& pf : out) {
    if (!merged.empty() && merged.back().factor == pf.factor)
      merged.back().multiplicity += pf.multiplicity;
    else
      merged.push_back(pf);
  }
  return merged;
}

}  // namespace gau
