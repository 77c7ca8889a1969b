#include "cgt/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace cgt::gf {

namespace {

// Polynomials over GF(p) as coefficient vectors, low degree first, no
// trailing zeros.
using Poly = std::vector<unsigned>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  // reduce modulo the monic polynomial `mod` of degree d
  size_t d = mod.size() - 1;
  for (size_t i = prod.size(); i-- > d;) {
    unsigned c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (size_t j = 0; j < d; ++j)
      prod[i - d + j] = (prod[i - d + j] + c * (p - mod[j] % p)) % p;
  }
  prod.resize(d);
  trim(prod);
  return prod;
}

Poly poly_pow_mod(Poly base, unsigned long long e, const Poly& mod, unsigned p) {
  Poly result = {1};
  while (e) {
    if (e & 1) result = poly_mul_mod(result, base, mod, p);
    base = poly_mul_mod(base, base, mod, p);
    e >>= 1;
  }
  return result;
}

Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  size_t d = b.size() - 1;
  unsigned lead_inv = 1;
  // b need not be monic here; compute inverse of leading coefficient mod p
  for (unsigned i = 1; i < p; ++i)
    if (b.back() * i % p == 1) lead_inv = i;
  while (a.size() > d) {
    unsigned c = a.back() * lead_inv % p;
    size_t shift = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j)
      a[shift + j] = (a[shift + j] + c * (p - b[j] % p)) % p;
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin irreducibility test: f monic of degree k is irreducible over GF(p)
// iff x^(p^k) = x (mod f) and gcd(x^(p^(k/r)) - x, f) = 1 for each prime r|k.
bool is_irreducible(const Poly& f, unsigned p, unsigned k) {
  Poly x = {0, 1};
  auto frob_power = [&](unsigned e) {
    // x^(p^e) mod f by repeated p-th powering
    Poly r = x;
    for (unsigned i = 0; i < e; ++i) r = poly_pow_mod(r, p, f, p);
    return r;
  };
  Poly xk = frob_power(k);
  if (xk != x) return false;
  for (unsigned r = 2; r <= k; ++r) {
    if (k % r != 0) continue;
    bool rp = true;
    for (unsigned d = 2; d * d <= r; ++d)
      if (r % d == 0) rp = false;
    if (!rp) continue;
    Poly g = frob_power(k / r);
    // g - x
    Poly diff = g;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    Poly gc = poly_gcd(f, diff, p);
    if (gc.size() != 1) return false;
  }
  return true;
}

std::mutex cache_mutex;
std::map<std::pair<unsigned, unsigned>, FieldPtr> field_cache;

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldPtr Field::make(unsigned p, unsigned k) {
  require(is_prime(p), "NotPrime", "p = " + std::to_string(p));
  require(k >= 1, "FieldTooLarge", "k must be >= 1");
  unsigned long long q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    require(q <= 65536, "FieldTooLarge", "p^k exceeds 2^16");
  }
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = field_cache.find({p, k});
    if (it != field_cache.end()) return it->second;
  }

  // Lexicographically least monic irreducible, coefficients compared
  // low-degree-first: scan (c_0,...,c_{k-1}) with c_0 most significant.
  std::vector<unsigned> mod(k + 1, 0);
  mod[k] = 1;
  if (k == 1) {
    // x is irreducible; modulus x selects the prime field itself
    mod[0] = 0;
  } else {
    std::vector<unsigned> c(k, 0);
    bool found = false;
    while (!found) {
      Poly f(c.begin(), c.end());
      f.push_back(1);
      if (is_irreducible(f, p, k)) {
        for (unsigned i = 0; i < k; ++i) mod[i] = c[i];
        found = true;
        break;
      }
      // next tuple in lex order: last coordinate varies fastest
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && c[i] == p - 1) c[i--] = 0;
      require(i >= 0, "FieldTooLarge", "no irreducible polynomial found");
      ++c[i];
    }
  }

  FieldPtr f(new Field(p, k, std::move(mod)));
  std::lock_guard<std::mutex> lock(cache_mutex);
  field_cache[{p, k}] = f;
  return f;
}

Field::Field(unsigned p, unsigned k, std::vector<unsigned> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  q_ = 1;
  for (unsigned i = 0; i < k; ++i) q_ *= p;
  if (q_ <= 1024) {
    mul_table_.resize(static_cast<size_t>(q_) * q_);
    for (unsigned a = 0; a < q_; ++a)
      for (unsigned b = a; b < q_; ++b) {
        uint16_t m = static_cast<uint16_t>(mul_poly(a, b));
        mul_table_[static_cast<size_t>(a) * q_ + b] = m;
        mul_table_[static_cast<size_t>(b) * q_ + a] = m;
      }
    inv_table_.assign(q_, 0);
    for (unsigned a = 1; a < q_; ++a) {
      if (inv_table_[a]) continue;
      for (unsigned b = 1; b < q_; ++b)
        if (mul_table_[static_cast<size_t>(a) * q_ + b] == 1) {
          inv_table_[a] = static_cast<uint16_t>(b);
          inv_table_[b] = static_cast<uint16_t>(a);
          break;
        }
    }
  }
}

std::vector<unsigned> Field::coeffs(unsigned a) const {
  std::vector<unsigned> c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

unsigned Field::from_coeffs(const std::vector<unsigned>& c) const {
  require(c.size() == k_, "BadParameters", "coefficient vector length");
  unsigned a = 0;
  for (unsigned i = k_; i-- > 0;) {
    require(c[i] < p_, "BadParameters", "coefficient out of range");
    a = a * p_ + c[i];
  }
  return a;
}

unsigned Field::add(unsigned a, unsigned b) const {
  unsigned r = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

unsigned Field::neg(unsigned a) const {
  unsigned r = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

unsigned Field::sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

unsigned Field::mul_poly(unsigned a, unsigned b) const {
  Poly pa, pb;
  for (unsigned i = 0, x = a; i < k_; ++i, x /= p_) pa.push_back(x % p_);
  for (unsigned i = 0, x = b; i < k_; ++i, x /= p_) pb.push_back(x % p_);
  trim(pa);
  trim(pb);
  Poly mod(modulus_.begin(), modulus_.end());
  Poly pr = poly_mul_mod(pa, pb, mod, p_);
  unsigned r = 0;
  for (size_t i = pr.size(); i-- > 0;) r = r * p_ + pr[i];
  // rebuild respecting positional weights
  r = 0;
  unsigned mult = 1;
  for (size_t i = 0; i < k_; ++i) {
    r += (i < pr.size() ? pr[i] : 0) * mult;
    mult *= p_;
  }
  return r;
}

unsigned Field::mul(unsigned a, unsigned b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * q_ + b];
  return mul_poly(a, b);
}

unsigned Field::inv(unsigned a) const {
  require(a != 0, "DivisionByZero", "inverse of zero");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, static_cast<long long>(q_) - 2);
}

unsigned Field::pow(unsigned a, long long e) const {
  if (a == 0) {
    require(e > 0 || e == 0, "DivisionByZero", "0 to a negative power");
    return e == 0 ? 1 : 0;
  }
  long long m = static_cast<long long>(q_) - 1;
  e %= m;
  if (e < 0) e += m;
  unsigned r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

unsigned Field::frobenius(unsigned a, unsigned e) const {
  unsigned r = a;
  e %= k_;
  for (unsigned i = 0; i < e; ++i) r = pow(r, p_);
  return r;
}

unsigned Field::from_int(long long n) const {
  long long m = n % static_cast<long long>(p_);
  if (m < 0) m += p_;
  return static_cast<unsigned>(m);
}

unsigned Field::mult_order(unsigned a) const {
  require(a != 0, "DivisionByZero", "order of zero");
  unsigned ord = 1, x = a;
  while (x != 1) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

unsigned Field::generator() const {
  for (unsigned a = 1; a < q_; ++a)
    if (mult_order(a) == q_ - 1) return a;
  fail("BadParameters", "no multiplicative generator found");
}

}  // namespace cgt::gf
