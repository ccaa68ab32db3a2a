#include "cremona/field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "cremona/poly.hpp"

namespace cremona {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using UPoly = std::vector<u64>;  // over F_p, constant term first

void utrim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 powmod_u(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = static_cast<u64>(static_cast<u128>(r) * b % p);
    b = static_cast<u64>(static_cast<u128>(b) * b % p);
    e >>= 1;
  }
  return r;
}

u64 inv_u(u64 a, u64 p) {
  if (a % p == 0) throw ArgumentError("division by zero in finite field");
  return powmod_u(a, p - 2, p);
}

UPoly umod(UPoly a, const UPoly& f, u64 p) {
  utrim(a);
  const std::size_t df = f.size() - 1;
  const u64 lead_inv = inv_u(f.back(), p);
  while (a.size() > df) {
    u64 t = static_cast<u64>(static_cast<u128>(a.back()) * lead_inv % p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j)
      a[shift + j] = (a[shift + j] + p - static_cast<u64>(static_cast<u128>(t) * f[j] % p)) % p;
    utrim(a);
  }
  return a;
}

UPoly umul(const UPoly& a, const UPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<u64>((static_cast<u128>(a[i]) * b[j] + r[i + j]) % p);
  utrim(r);
  return r;
}

UPoly usub(UPoly a, const UPoly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  utrim(a);
  return a;
}

UPoly ugcd(UPoly a, UPoly b, u64 p) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f
UPoly frobenius_power(const UPoly& f, u64 p, int k) {
  UPoly x = umod(UPoly{0, 1}, f, p);
  for (int i = 0; i < k; ++i) {
    UPoly r{1}, base = x;
    u64 e = p;
    while (e) {
      if (e & 1) r = umod(umul(r, base, p), f, p);
      base = umod(umul(base, base, p), f, p);
      e >>= 1;
    }
    x = r;
  }
  return x;
}

bool is_irreducible(const UPoly& f, u64 p) {
  const int e = static_cast<int>(f.size()) - 1;
  UPoly x{0, 1};
  if (usub(frobenius_power(f, p, e), umod(x, f, p), p).size() != 0) return false;
  for (int r = 2; r <= e; ++r) {
    if (e % r) continue;
    bool prime = true;
    for (int d = 2; d * d <= r; ++d)
      if (r % d == 0) prime = false;
    if (!prime) continue;
    UPoly g = ugcd(f, usub(frobenius_power(f, p, e / r), x, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

UPoly first_irreducible(u64 p, int e) {
  if (e == 1) return {0, 1};
  // Enumerate monic x^e + a_{e-1} x^{e-1} + ... + a_0 by increasing
  // (a_0, a_1, ...) read as a base-p number.
  std::vector<u64> digits(e, 0);
  digits[0] = 1;
  for (;;) {
    UPoly f(digits.begin(), digits.end());
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
    int i = 0;
    while (i < e && ++digits[i] == p) digits[i++] = 0;
    if (i == e) throw std::logic_error("no irreducible polynomial found");
  }
}

bool is_prime(u64 p) {
  if (p < 2) return false;
  for (u64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<u64, int>, std::unique_ptr<Field>> fields;
  std::map<std::pair<const Field*, const Field*>, FieldElement> generator_images;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

Field::Field(std::uint64_t p, int e) : p_(p), e_(e) {
  if (p == 0) {
    q_ = 0;
    return;
  }
  mpz_ui_pow_ui(q_.get_mpz_t(), p, static_cast<unsigned long>(e));
  modulus_ = first_irreducible(p, e);
}

const Field& Field::rationals() {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto& slot = r.fields[{0, 1}];
  if (!slot) slot.reset(new Field(0, 1));
  return *slot;
}

const Field& Field::finite(std::uint64_t p, int e) {
  if (!is_prime(p) || p >= (1ull << 31)) throw ArgumentError("field characteristic must be a prime below 2^31");
  if (e < 1 || e > kMaxFieldDegree) throw ArgumentError("extension degree must be in [1, " + std::to_string(kMaxFieldDegree) + "]");
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto& slot = r.fields[{p, e}];
  if (!slot) slot.reset(new Field(p, e));
  return *slot;
}

std::string Field::describe() const {
  if (is_rational()) return "Q";
  if (e_ == 1) return "F_" + std::to_string(p_);
  return "F_" + std::to_string(p_) + "^" + std::to_string(e_);
}

FieldElement Field::zero() const { return FieldElement(this); }

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long v) const { return from_integer(Integer(v)); }

FieldElement Field::from_integer(const Integer& v) const {
  FieldElement x(this);
  if (is_rational()) {
    x.q_ = v;
  } else {
    Integer r = v % Integer(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    x.c_[0] = static_cast<std::uint32_t>(r.get_ui());
  }
  return x;
}

FieldElement Field::from_rational(const mpq_class& v) const {
  if (is_rational()) {
    FieldElement x(this);
    x.q_ = v;
    x.q_.canonicalize();
    return x;
  }
  return from_integer(v.get_num()) / from_integer(v.get_den());
}

FieldElement Field::from_coefficients(const std::vector<Integer>& c) const {
  if (is_rational()) {
    if (c.size() > 1) throw ArgumentError("rational elements take one coefficient");
    return c.empty() ? zero() : from_integer(c[0]);
  }
  if (c.size() > static_cast<std::size_t>(e_)) throw ArgumentError("too many coefficients for " + describe());
  FieldElement x(this);
  for (std::size_t i = 0; i < c.size(); ++i) {
    Integer r = c[i] % Integer(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    x.c_[i] = static_cast<std::uint32_t>(r.get_ui());
  }
  return x;
}

FieldElement Field::element(const Integer& index) const {
  if (is_rational()) return from_integer(index);
  FieldElement x(this);
  Integer rest = index;
  for (int i = 0; i < e_; ++i) {
    Integer d = rest % Integer(static_cast<unsigned long>(p_));
    x.c_[i] = static_cast<std::uint32_t>(d.get_ui());
    rest /= static_cast<unsigned long>(p_);
  }
  return x;
}

FieldElement Field::random(std::mt19937_64& rng) const {
  if (is_rational()) return from_int(std::uniform_int_distribution<long>(-1000, 1000)(rng));
  FieldElement x(this);
  std::uniform_int_distribution<u64> dist(0, p_ - 1);
  for (int i = 0; i < e_; ++i) x.c_[i] = static_cast<std::uint32_t>(dist(rng));
  return x;
}

const Field& Field::extension(int k) const {
  if (is_rational()) throw DomainError("extensions of Q are not supported");
  if (k < 1) throw ArgumentError("extension degree must be positive");
  return finite(p_, e_ * k);
}

bool Field::embeds_into(const Field& ext) const {
  if (this == &ext) return true;
  return is_finite() && ext.p_ == p_ && ext.e_ % e_ == 0;
}

FieldElement Field::embed(const FieldElement& x, const Field& ext) const {
  if (&x.field() != this) throw ArgumentError("element does not belong to this field");
  if (this == &ext) return x;
  if (!embeds_into(ext)) throw ArgumentError(describe() + " does not embed into " + ext.describe());
  FieldElement theta;
  {
    auto& r = registry();
    std::unique_lock lock(r.mu);
    auto it = r.generator_images.find({this, &ext});
    if (it != r.generator_images.end()) {
      theta = it->second;
    } else {
      lock.unlock();
      // image of the generator: the least root of the defining polynomial
      std::vector<FieldElement> coeffs;
      for (u64 c : modulus_) coeffs.push_back(ext.from_int(static_cast<long>(c)));
      auto roots = Poly(ext, coeffs).roots();
      if (roots.empty()) throw std::logic_error("defining polynomial has no root in the extension");
      theta = roots.front();
      lock.lock();
      r.generator_images.emplace(std::make_pair(this, &ext), theta);
    }
  }
  FieldElement out = ext.zero(), power = ext.one();
  for (int i = 0; i < e_; ++i) {
    if (x.c_[i]) out += power.scaled(x.c_[i]);
    power *= theta;
  }
  return out;
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.valid() || !b.valid() || &a.field() != &b.field()) throw ArgumentError("field elements from different fields");
}

}  // namespace

bool FieldElement::is_zero() const {
  if (f_->is_rational()) return q_ == 0;
  for (int i = 0; i < f_->degree(); ++i)
    if (c_[i]) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (f_->is_rational()) return q_ == 1;
  if (c_[0] != 1) return false;
  for (int i = 1; i < f_->degree(); ++i)
    if (c_[i]) return false;
  return true;
}

FieldElement FieldElement::operator-() const {
  FieldElement r(f_);
  if (f_->is_rational()) {
    r.q_ = -q_;
    return r;
  }
  const u64 p = f_->characteristic();
  for (int i = 0; i < f_->degree(); ++i) r.c_[i] = c_[i] ? static_cast<std::uint32_t>(p - c_[i]) : 0;
  return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  FieldElement r(a.f_);
  if (a.f_->is_rational()) {
    r.q_ = a.q_ + b.q_;
    return r;
  }
  const u64 p = a.f_->characteristic();
  for (int i = 0; i < a.f_->degree(); ++i) r.c_[i] = static_cast<std::uint32_t>((u64(a.c_[i]) + b.c_[i]) % p);
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  FieldElement r(a.f_);
  if (a.f_->is_rational()) {
    r.q_ = a.q_ * b.q_;
    return r;
  }
  const u64 p = a.f_->characteristic();
  const int e = a.f_->degree();
  if (e == 1) {
    r.c_[0] = static_cast<std::uint32_t>(u64(a.c_[0]) * b.c_[0] % p);
    return r;
  }
  std::array<u128, 2 * kMaxFieldDegree> acc{};
  for (int i = 0; i < e; ++i) {
    if (!a.c_[i]) continue;
    for (int j = 0; j < e; ++j) acc[i + j] += u128(u64(a.c_[i]) * b.c_[j]);
  }
  std::array<u64, 2 * kMaxFieldDegree> t{};
  for (int i = 0; i < 2 * e - 1; ++i) t[i] = static_cast<u64>(acc[i] % p);
  const auto& f = a.f_->modulus();
  for (int i = 2 * e - 2; i >= e; --i) {
    const u64 c = t[i];
    if (!c) continue;
    t[i] = 0;
    for (int j = 0; j < e; ++j) t[i - e + j] = (t[i - e + j] + (p - c) * f[j] % p) % p;
  }
  for (int i = 0; i < e; ++i) r.c_[i] = static_cast<std::uint32_t>(t[i]);
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw ArgumentError("division by zero");
  FieldElement r(f_);
  if (f_->is_rational()) {
    r.q_ = 1 / q_;
    return r;
  }
  const u64 p = f_->characteristic();
  const int e = f_->degree();
  if (e == 1) {
    r.c_[0] = static_cast<std::uint32_t>(inv_u(c_[0], p));
    return r;
  }
  // extended Euclid in F_p[x]: s a + t f = 1
  UPoly a(c_.begin(), c_.begin() + e), f(f_->modulus());
  utrim(a);
  UPoly r0 = f, r1 = a, s0{}, s1{1};
  while (r1.size() > 1) {
    // quotient of r0 by r1
    UPoly q, rem = r0;
    const u64 li = inv_u(r1.back(), p);
    while (rem.size() >= r1.size()) {
      const std::size_t shift = rem.size() - r1.size();
      u64 t = static_cast<u64>(static_cast<u128>(rem.back()) * li % p);
      if (q.size() <= shift) q.resize(shift + 1, 0);
      q[shift] = t;
      for (std::size_t j = 0; j < r1.size(); ++j)
        rem[shift + j] = (rem[shift + j] + p - static_cast<u64>(static_cast<u128>(t) * r1[j] % p)) % p;
      utrim(rem);
    }
    UPoly s2 = usub(s0, umul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant
  const u64 ci = inv_u(r1[0], p);
  for (std::size_t i = 0; i < s1.size() && i < static_cast<std::size_t>(e); ++i)
    r.c_[i] = static_cast<std::uint32_t>(static_cast<u128>(s1[i]) * ci % p);
  return r;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.f_ != b.f_) return false;
  if (!a.f_) return true;
  if (a.f_->is_rational()) return a.q_ == b.q_;
  return a.c_ == b.c_;
}

FieldElement FieldElement::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement r = f_->one(), b = *this;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) r *= b;
    if (i + 1 < bits) b *= b;
  }
  return r;
}

FieldElement FieldElement::scaled(long k) const { return *this * f_->from_int(k); }

Integer FieldElement::index() const {
  if (f_->is_rational()) throw ArgumentError("index is defined for finite fields only");
  Integer r = 0;
  for (int i = f_->degree(); i-- > 0;) r = r * static_cast<unsigned long>(f_->characteristic()) + c_[i];
  return r;
}

bool less(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.f_->is_rational()) return a.q_ < b.q_;
  for (int i = a.f_->degree(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

std::string FieldElement::to_string() const {
  if (!f_) return "<unset>";
  if (f_->is_rational()) return q_.get_str();
  if (f_->degree() == 1) return std::to_string(c_[0]);
  std::string s = "[";
  for (int i = 0; i < f_->degree(); ++i) s += (i ? ", " : "") + std::to_string(c_[i]);
  return s + "]";
}

}  // namespace cremona
