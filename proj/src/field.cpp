#include "corelab/field.hpp"

#include <map>
#include <mutex>

namespace corelab {

namespace {

// Least irreducible polynomial of degree k over F_2 with nonzero constant
// term, encoded with bit i = coefficient of x^i.  Validated at first use.
constexpr uint64_t kReductionPoly[33] = {
    0,
    0x3,         0x7,         0xb,         0x13,        0x25,
    0x43,        0x83,        0x11b,       0x203,       0x409,
    0x805,       0x1009,      0x201b,      0x4021,      0x8003,
    0x1002b,     0x20009,     0x40009,     0x80027,     0x100009,
    0x200005,    0x400003,    0x800021,    0x100001b,   0x2000009,
    0x400001b,   0x8000027,   0x10000003,  0x20000005,  0x40000003,
    0x80000009,  0x10000008d,
};

int gf2_deg(uint64_t a) {
  if (a == 0) return -1;
  return 63 - __builtin_clzll(a);
}

uint64_t gf2_mod(uint64_t a, uint64_t b) {
  const int db = gf2_deg(b);
  while (a != 0 && gf2_deg(a) >= db) a ^= b << (gf2_deg(a) - db);
  return a;
}

uint64_t gf2_gcd(uint64_t a, uint64_t b) {
  while (b != 0) {
    uint64_t r = gf2_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

// x^(2^e) mod f, by repeated squaring in GF(2)[x]/(f).
uint64_t gf2_x_pow_pow2(unsigned e, uint64_t f, unsigned k) {
  uint64_t r = gf2_mod(2, f);
  for (unsigned i = 0; i < e; ++i) r = gf2_poly_mul_mod(r, r, f, k);
  return r;
}

bool is_small_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

uint64_t gf2_poly_mul_mod(uint64_t a, uint64_t b, uint64_t f, unsigned k) {
  uint64_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> k) & 1) a ^= f;
  }
  return r;
}

bool gf2_poly_irreducible(uint64_t f, unsigned k) {
  if (k == 0 || gf2_deg(f) != static_cast<int>(k)) return false;
  // x^(2^k) == x mod f
  if (gf2_x_pow_pow2(k, f, k) != gf2_mod(2, f)) return false;
  // gcd(x^(2^(k/q)) - x, f) == 1 for every prime q | k
  unsigned m = k;
  for (unsigned q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    uint64_t h = gf2_x_pow_pow2(k / q, f, k) ^ gf2_mod(2, f);
    if (gf2_gcd(f, h) != 1) return false;
  }
  if (m > 1 && m < k) {
    uint64_t h = gf2_x_pow_pow2(k / m, f, k) ^ gf2_mod(2, f);
    if (gf2_gcd(f, h) != 1) return false;
  }
  return true;
}

void Field::init_prime(uint64_t p) {
  if (p >= (uint64_t{1} << 31))
    throw Error("prime modulus too large (need p < 2^31)");
  if (!is_small_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
  kind_ = Kind::kPrime;
  char_ = p;
  size_ = p;
  k_ = 1;
}

void Field::init_gf2(unsigned k) {
  if (k < 1 || k > 32) throw Error("GF(2^k) supports 1 <= k <= 32");
  kind_ = Kind::kGf2Ext;
  char_ = 2;
  k_ = k;
  size_ = uint64_t{1} << k;
  redpoly_ = kReductionPoly[k];
  if (!gf2_poly_irreducible(redpoly_, k))
    throw Error("reduction polynomial table entry for k=" + std::to_string(k) +
                " failed the irreducibility check");
  if (k <= 16) {
    // Discrete log tables over a multiplicative generator.
    const uint64_t n = size_ - 1;
    exp_.assign(2 * n, 0);
    log_.assign(size_, 0);
    for (uint64_t g = 1; g < size_; ++g) {
      uint64_t v = 1;
      uint64_t i = 0;
      for (; i < n; ++i) {
        exp_[i] = static_cast<uint32_t>(v);
        v = gf2_poly_mul_mod(v, g, redpoly_, k);
        if (v == 1) {
          ++i;
          break;
        }
      }
      if (i == n && v == 1) break;  // g generates the full group
    }
    for (uint64_t i = 0; i < n; ++i) {
      exp_[n + i] = exp_[i];
      log_[exp_[i]] = static_cast<uint32_t>(i);
    }
  }
}

FieldPtr Field::prime(uint64_t p) {
  static std::mutex mu;
  static std::map<uint64_t, FieldPtr> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(p);
  if (it != registry.end()) return it->second;
  auto f = std::shared_ptr<Field>(new Field());
  f->init_prime(p);
  registry[p] = f;
  return f;
}

FieldPtr Field::gf2_ext(unsigned k) {
  static std::mutex mu;
  static std::map<unsigned, FieldPtr> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(k);
  if (it != registry.end()) return it->second;
  auto f = std::shared_ptr<Field>(new Field());
  f->init_gf2(k);
  registry[k] = f;
  return f;
}

uint64_t Field::add(uint64_t a, uint64_t b) const {
  if (kind_ == Kind::kPrime) {
    uint64_t s = a + b;
    return s >= char_ ? s - char_ : s;
  }
  return a ^ b;
}

uint64_t Field::sub(uint64_t a, uint64_t b) const {
  if (kind_ == Kind::kPrime) return a >= b ? a - b : a + char_ - b;
  return a ^ b;
}

uint64_t Field::neg(uint64_t a) const {
  if (kind_ == Kind::kPrime) return a == 0 ? 0 : char_ - a;
  return a;
}

uint64_t Field::mul(uint64_t a, uint64_t b) const {
  if (kind_ == Kind::kPrime) return (a * b) % char_;
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return gf2_poly_mul_mod(a, b, redpoly_, k_);
}

uint64_t Field::inv(uint64_t a) const {
  if (a == 0) throw Error("division by zero in " + describe());
  if (kind_ == Kind::kPrime) {
    // extended Euclid on (a, p)
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(char_), nr = static_cast<int64_t>(a);
    while (nr != 0) {
      int64_t q = r / nr;
      int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += static_cast<int64_t>(char_);
    return static_cast<uint64_t>(t);
  }
  if (!exp_.empty()) return exp_[(size_ - 1) - log_[a]];
  return pow(a, size_ - 2);
}

uint64_t Field::pow(uint64_t a, uint64_t e) const {
  uint64_t r = 1;
  uint64_t base = a;
  while (e != 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

uint64_t Field::from_int(long long n) const {
  const long long m = static_cast<long long>(char_);
  long long v = n % m;
  if (v < 0) v += m;
  return static_cast<uint64_t>(v);
}

uint64_t Field::frobenius(uint64_t a) const { return pow(a, char_); }

uint64_t Field::mul_int(uint64_t a, uint64_t n) const {
  return mul(a, from_int(static_cast<long long>(n % char_)));
}

std::string Field::to_string(uint64_t a) const { return std::to_string(a); }

std::string Field::describe() const {
  if (kind_ == Kind::kPrime) return "F_" + std::to_string(char_);
  return "GF(2^" + std::to_string(k_) + ")";
}

}  // namespace corelab
