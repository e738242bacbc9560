#include "gau/field.hpp"

#include <algorithm>
#include <cstddef>

namespace gau {
namespace {

constexpr std::uint64_t kMaxQ = 1ull << 32;
constexpr std::uint64_t kTableLimit = 1ull << 16;

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over the prime field GF(p): digit vector, constant term first,
// no trailing zeros.  Used only for modulus search and inverses.
using PP = std::vector<std::uint32_t>;

void pp_trim(PP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pp_deg(const PP& a) { return int(a.size()) - 1; }

PP pp_mul(const PP& a, const PP& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PP out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = std::uint32_t((out[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  }
  pp_trim(out);
  return out;
}

// In-place reduction modulo monic f.
void pp_mod(PP& a, const PP& f, std::uint64_t p) {
  int df = pp_deg(f);
  while (pp_deg(a) >= df) {
    std::uint64_t c = a.back();
    int shift = pp_deg(a) - df;
    if (c != 0)
      for (int j = 0; j <= df; ++j) {
        std::uint64_t sub = (c * f[std::size_t(j)]) % p;
        std::uint64_t cur = a[std::size_t(j + shift)];
        a[std::size_t(j + shift)] = std::uint32_t((cur + p - sub) % p);
      }
    a.pop_back();
    pp_trim(a);
  }
}

PP pp_mulmod(const PP& a, const PP& b, const PP& f, std::uint64_t p) {
  PP out = pp_mul(a, b, p);
  pp_mod(out, f, p);
  return out;
}

// x^e mod f by binary exponentiation.
PP pp_powmod_x(std::uint64_t e, const PP& f, std::uint64_t p) {
  PP result{1};
  pp_mod(result, f, p);
  PP base{0, 1};
  pp_mod(base, f, p);
  while (e > 0) {
    if (e & 1) result = pp_mulmod(result, base, f, p);
    base = pp_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

void pp_make_monic(PP& a, std::uint64_t p) {
  if (a.empty()) return;
  std::uint64_t lead = a.back();
  if (lead == 1) return;
  // lead^(p-2) = lead^-1 in GF(p)
  std::uint64_t inv = 1, b = lead, e = p - 2;
  while (e > 0) {
    if (e & 1) inv = (inv * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  for (auto& c : a) c = std::uint32_t((std::uint64_t(c) * inv) % p);
}

PP pp_gcd(PP a, PP b, std::uint64_t p) {
  pp_trim(a);
  pp_trim(b);
  while (!b.empty()) {
    PP bm = b;
    pp_make_monic(bm, p);
    pp_mod(a, bm, p);
    std::swap(a, b);
  }
  pp_make_monic(a, p);
  return a;
}

// Rabin's criterion: monic f of degree k is irreducible over GF(p) iff
// x^(p^k) = x mod f and gcd(x^(p^(k/l)) - x, f) = 1 for each prime l | k.
bool rabin_irreducible(const PP& f, std::uint64_t p) {
  int k = pp_deg(f);
  if (k < 1) return false;
  if (k == 1) return true;

  std::vector<unsigned> primes;
  unsigned rem = unsigned(k);
  for (unsigned l = 2; l * l <= rem; ++l)
    if (rem % l == 0) {
      primes.push_back(l);
      while (rem % l == 0) rem /= l;
    }
  if (rem > 1) primes.push_back(rem);

  auto x_pow_p_to = [&](unsigned i) {
    std::uint64_t e = 1;
    for (unsigned j = 0; j < i; ++j) e *= p;
    return pp_powmod_x(e, f, p);
  };
  auto minus_x = [&](PP h) {
    if (h.size() < 2) h.resize(2, 0);
    h[1] = std::uint32_t((h[1] + p - 1) % p);
    pp_trim(h);
    return h;
  };

  PP x{0, 1};
  pp_mod(x, f, p);
  if (x_pow_p_to(unsigned(k)) != x) return false;
  for (unsigned l : primes) {
    PP g = pp_gcd(minus_x(x_pow_p_to(unsigned(k) / l)), f, p);
    if (pp_deg(g) != 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> unpack(std::uint64_t v, std::uint64_t p, unsigned len) {
  std::vector<std::uint32_t> d(len);
  for (unsigned i = 0; i < len; ++i) {
    d[i] = std::uint32_t(v % p);
    v /= p;
  }
  return d;
}

}  // namespace

Fq Fq::make(std::uint64_t p, unsigned k) {
  if (!is_prime_u64(p)) fail(errc::non_prime, "field characteristic must be prime, got " + std::to_string(p));
  if (k == 0) fail(errc::degree_zero, "extension degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > kMaxQ / p) fail(errc::too_large, "field size p^k exceeds 2^32");
    q *= p;
  }
  if (q > kMaxQ) fail(errc::too_large, "field size p^k exceeds 2^32");

  Fq F;
  F.p_ = p;
  F.k_ = k;
  F.q_ = q;
  if (k == 1) {
    F.modulus_ = {0, 1};  // t
  } else {
    // Scan monic candidates by packed value of the non-leading coefficients.
    for (std::uint64_t n = 0;; ++n) {
      PP f = unpack(n, p, k);
      f.push_back(1);
      if (f[0] == 0) continue;  // t divides f
      if (rabin_irreducible(f, p)) {
        F.modulus_ = f;
        break;
      }
    }
  }
  F.build_tables();
  return F;
}

Fq Fq::with_modulus(std::uint64_t p, const std::vector<std::uint32_t>& modulus) {
  if (!is_prime_u64(p)) fail(errc::non_prime, "field characteristic must be prime, got " + std::to_string(p));
  PP f = modulus;
  pp_trim(f);
  if (pp_deg(f) < 1) fail(errc::degree_zero, "modulus must have positive degree");
  if (f.back() != 1) fail(errc::parse, "modulus must be monic");
  for (auto c : f)
    if (c >= p) fail(errc::parse, "modulus digit out of range");
  unsigned k = unsigned(pp_deg(f));
  if (k > 1 && !rabin_irreducible(f, p)) fail(errc::parse, "modulus is reducible");

  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > kMaxQ / p) fail(errc::too_large, "field size p^k exceeds 2^32");
    q *= p;
  }
  Fq F;
  F.p_ = p;
  F.k_ = k;
  F.q_ = q;
  F.modulus_ = f;
  F.build_tables();
  return F;
}

std::uint64_t Fq::modulus_packed() const {
  std::uint64_t v = 0;
  for (std::size_t i = modulus_.size(); i-- > 0;) v = v * p_ + modulus_[i];
  return v;
}

Fe Fq::add_digits(Fe a, Fe b) const {
  std::uint64_t out = 0, place = 1, av = a, bv = b;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t s = av % p_ + bv % p_;
    if (s >= p_) s -= p_;
    out += s * place;
    av /= p_;
    bv /= p_;
    place *= p_;
  }
  return Fe(out);
}

Fe Fq::neg_digits(Fe a) const {
  std::uint64_t out = 0, place = 1, av = a;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t d = av % p_;
    if (d != 0) out += (p_ - d) * place;
    av /= p_;
    place *= p_;
  }
  return Fe(out);
}

Fe Fq::mul_generic(Fe a, Fe b) const {
  if (k_ == 1) return Fe((std::uint64_t(a) * b) % p_);
  // k >= 2 implies p <= 2^16, so digit products fit comfortably in 64 bits.
  PP da = unpack(a, p_, k_), db = unpack(b, p_, k_);
  PP prod = pp_mul(da, db, p_);
  pp_mod(prod, modulus_, p_);
  std::uint64_t out = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    if (i < prod.size()) out += std::uint64_t(prod[i]) * place;
    place *= p_;
  }
  return Fe(out);
}

Fe Fq::inv(Fe a) const {
  if (a == 0) fail(errc::zero_inverse, "inverse of zero");
  if (!log_.empty()) return exp_[(q_ - 1) - log_[a]];
  return inv_generic(a);
}

Fe Fq::inv_generic(Fe a) const {
  if (k_ == 1) {
    // extended gcd on integers
    std::int64_t t = 0, nt = 1, r = std::int64_t(p_), nr = std::int64_t(a);
    while (nr != 0) {
      std::int64_t quo = r / nr;
      std::int64_t tmp = t - quo * nt;
      t = nt;
      nt = tmp;
      tmp = r - quo * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += std::int64_t(p_);
    return Fe(t);
  }
  // extended gcd of a(t) against the modulus
  PP r0 = modulus_, r1 = unpack(a, p_, k_);
  pp_trim(r1);
  PP s0 = {}, s1 = {1};
  while (!r1.empty()) {
    // divide r0 by r1: quotient q, remainder r
    PP quo;
    PP rem = r0;
    int d1 = pp_deg(r1);
    std::uint64_t lead_inv = 0;
    {
      std::uint64_t inv = 1, b = r1.back(), e = p_ - 2;
      while (e > 0) {
        if (e & 1) inv = (inv * b) % p_;
        b = (b * b) % p_;
        e >>= 1;
      }
      lead_inv = inv;
    }
    while (pp_deg(rem) >= d1) {
      int shift = pp_deg(rem) - d1;
      std::uint64_t c = (std::uint64_t(rem.back()) * lead_inv) % p_;
      if (int(quo.size()) <= shift) quo.resize(std::size_t(shift) + 1, 0);
      quo[std::size_t(shift)] = std::uint32_t(c);
      for (int j = 0; j <= d1; ++j) {
        std::uint64_t sub = (c * r1[std::size_t(j)]) % p_;
        std::uint64_t cur = rem[std::size_t(j + shift)];
        rem[std::size_t(j + shift)] = std::uint32_t((cur + p_ - sub) % p_);
      }
      pp_trim(rem);
    }
    PP s_next = s0;
    PP qs = pp_mul(quo, s1, p_);
    if (s_next.size() < qs.size()) s_next.resize(qs.size(), 0);
    for (std::size_t i = 0; i < qs.size(); ++i)
      s_next[i] = std::uint32_t((s_next[i] + p_ - qs[i]) % p_);
    pp_trim(s_next);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s_next;
  }
  // r0 is a nonzero constant gcd; scale s0 by its inverse
  std::uint64_t g = r0.empty() ? 0 : r0[0];
  std::uint64_t inv = 1, b = g, e = p_ - 2;
  while (e > 0) {
    if (e & 1) inv = (inv * b) % p_;
    b = (b * b) % p_;
    e >>= 1;
  }
  std::uint64_t out = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t c = i < s0.size() ? (std::uint64_t(s0[i]) * inv) % p_ : 0;
    out += c * place;
    place *= p_;
  }
  return Fe(out);
}

Fe Fq::pow(Fe a, std::uint64_t e) const {
  Fe result = one(), base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint32_t> Fq::digits(Fe a) const { return unpack(a, p_, k_); }

Fe Fq::from_digits(const std::vector<std::uint32_t>& d) const {
  std::uint64_t out = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t c = i < d.size() ? d[i] : 0;
    if (c >= p_) fail(errc::parse, "field element digit out of range");
    out += c * place;
    place *= p_;
  }
  return Fe(out);
}

std::string Fq::to_string(Fe a) const { return std::to_string(a); }

void Fq::build_tables() {
  if (q_ > kTableLimit) return;
  std::size_t q = std::size_t(q_);

  // find a generator of the multiplicative group
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t n = q_ - 1;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      prime_factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) prime_factors.push_back(n);

  Fe gen = 1;
  if (q_ > 2) {
    for (std::uint64_t c = 2; c < q_; ++c) {
      Fe g = Fe(c);
      bool ok = true;
      for (auto l : prime_factors)
        if (pow(g, (q_ - 1) / l) == one()) {
          ok = false;
          break;
        }
      if (ok) {
        gen = g;
        break;
      }
    }
  }

  log_.assign(q, 0);
  exp_.assign(2 * (q - 1), 0);
  Fe cur = one();
  for (std::size_t i = 0; i < q - 1; ++i) {
    exp_[i] = cur;
    exp_[i + (q - 1)] = cur;
    log_[cur] = std::uint32_t(i);
    cur = mul_generic(cur, gen);
  }
}

}  // namespace gau
