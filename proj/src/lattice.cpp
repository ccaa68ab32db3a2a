#include "cremona/lattice.hpp"

#include <sstream>

namespace cremona {

namespace {

void require_same(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw ArgumentError("lattice vectors of different dimension");
}

void require_n(int n) {
  if (n < 3) throw ArgumentError("lattice needs n >= 3, got " + std::to_string(n));
}

}  // namespace

LatticeVector::LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw ArgumentError("lattice vector needs at least one coordinate");
}

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
  if (coords_.empty()) throw ArgumentError("lattice vector needs at least one coordinate");
}

LatticeVector LatticeVector::zero(int n) { return LatticeVector(std::vector<Integer>(n + 1)); }

LatticeVector LatticeVector::basis(int n, int i) {
  if (i < 0 || i > n) throw ArgumentError("basis index out of range");
  std::vector<Integer> c(n + 1);
  c[i] = 1;
  return LatticeVector(std::move(c));
}

bool LatticeVector::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

Integer LatticeVector::content() const {
  Integer g = 0;
  for (const auto& c : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

LatticeVector LatticeVector::primitive() const {
  Integer g = content();
  if (g == 0 || g == 1) return *this;
  std::vector<Integer> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) mpz_divexact(c[i].get_mpz_t(), coords_[i].get_mpz_t(), g.get_mpz_t());
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator-() const {
  std::vector<Integer> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
  return LatticeVector(std::move(c));
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  require_same(a, b);
  std::vector<Integer> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return LatticeVector(std::move(c));
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  require_same(a, b);
  std::vector<Integer> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return LatticeVector(std::move(c));
}

LatticeVector operator*(const Integer& s, const LatticeVector& v) {
  std::vector<Integer> c(v.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * v[i];
  return LatticeVector(std::move(c));
}

LatticeVector operator*(long s, const LatticeVector& v) { return Integer(s) * v; }

bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.coords_ == b.coords_; }

std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string LatticeVector::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += coords_[i].get_str();
  }
  return s + "]";
}

Integer inner(const LatticeVector& u, const LatticeVector& v) {
  require_same(u, v);
  Integer s = u[0] * v[0];
  for (std::size_t i = 1; i < u.size(); ++i) s -= u[i] * v[i];
  return s;
}

Integer square(const LatticeVector& v) { return inner(v, v); }

LatticeVector canonical_vector(int n) {
  require_n(n);
  std::vector<Integer> c(n + 1, Integer(1));
  c[0] = -3;
  return LatticeVector(std::move(c));
}

LatticeVector simple_root(int n, int i) {
  require_n(n);
  if (i < 0 || i >= n) throw ArgumentError("simple root index out of range");
  std::vector<Integer> c(n + 1);
  if (i == 0) {
    c[0] = 1;
    c[1] = c[2] = c[3] = -1;
  } else {
    c[i] = 1;
    c[i + 1] = -1;
  }
  return LatticeVector(std::move(c));
}

std::vector<LatticeVector> simple_roots(int n) {
  require_n(n);
  std::vector<LatticeVector> r;
  r.reserve(n);
  for (int i = 0; i < n; ++i) r.push_back(simple_root(n, i));
  return r;
}

std::vector<std::vector<long>> gram_matrix(int n) {
  auto roots = simple_roots(n);
  std::vector<std::vector<long>> g(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = inner(roots[i], roots[j]).get_si();
  return g;
}

std::vector<Integer> root_coordinates(const LatticeVector& v) {
  const int n = v.n();
  require_n(n);
  if (inner(v, canonical_vector(n)) != 0) throw ArgumentError("vector is not orthogonal to k_n");
  std::vector<Integer> c(n);
  c[0] = v[0];
  c[1] = v[1] + c[0];
  c[2] = v[2] + c[0] + c[1];
  if (n > 3) c[3] = v[3] + c[0] + c[2];
  for (int j = 4; j < n; ++j) c[j] = v[j] + c[j - 1];
  return c;
}

LatticeVector from_root_coordinates(int n, std::span<const Integer> c) {
  require_n(n);
  if (c.size() != static_cast<std::size_t>(n)) throw ArgumentError("wrong number of root coordinates");
  std::vector<Integer> v(n + 1);
  v[0] = c[0];
  v[1] = v[2] = v[3] = -c[0];
  for (int i = 1; i < n; ++i) {
    v[i] += c[i];
    v[i + 1] -= c[i];
  }
  return LatticeVector(std::move(v));
}

bool is_root(const LatticeVector& v) {
  if (v.n() < 3) return false;
  return square(v) == -2 && inner(v, canonical_vector(v.n())) == 0;
}

LatticeIsometry::LatticeIsometry(int n, std::vector<Integer> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 0 || entries_.size() != static_cast<std::size_t>((n + 1) * (n + 1)))
    throw ArgumentError("isometry matrix has the wrong size");
}

LatticeIsometry LatticeIsometry::identity(int n) {
  std::vector<Integer> e(static_cast<std::size_t>((n + 1) * (n + 1)));
  for (int i = 0; i <= n; ++i) e[static_cast<std::size_t>(i) * (n + 1) + i] = 1;
  return LatticeIsometry(n, std::move(e));
}

LatticeIsometry LatticeIsometry::from_columns(const std::vector<LatticeVector>& columns) {
  const int d = static_cast<int>(columns.size());
  if (d == 0) throw ArgumentError("no columns");
  std::vector<Integer> e(static_cast<std::size_t>(d * d));
  for (int c = 0; c < d; ++c) {
    if (static_cast<int>(columns[c].size()) != d) throw ArgumentError("column of wrong size");
    for (int r = 0; r < d; ++r) e[static_cast<std::size_t>(r) * d + c] = columns[c][r];
  }
  return LatticeIsometry(d - 1, std::move(e));
}

LatticeVector LatticeIsometry::apply(const LatticeVector& v) const {
  if (static_cast<int>(v.size()) != dim()) throw ArgumentError("vector and isometry dimensions differ");
  std::vector<Integer> out(dim());
  for (int r = 0; r < dim(); ++r) {
    Integer s = 0;
    for (int c = 0; c < dim(); ++c) s += at(r, c) * v[c];
    out[r] = std::move(s);
  }
  return LatticeVector(std::move(out));
}

LatticeVector LatticeIsometry::column(int c) const {
  std::vector<Integer> out(dim());
  for (int r = 0; r < dim(); ++r) out[r] = at(r, c);
  return LatticeVector(std::move(out));
}

bool LatticeIsometry::preserves_form() const {
  std::vector<LatticeVector> cols;
  for (int c = 0; c < dim(); ++c) cols.push_back(column(c));
  for (int i = 0; i < dim(); ++i)
    for (int j = i; j < dim(); ++j) {
      Integer want = (i != j) ? 0 : (i == 0 ? 1 : -1);
      if (inner(cols[i], cols[j]) != want) return false;
    }
  return true;
}

bool LatticeIsometry::fixes(const LatticeVector& v) const { return apply(v) == v; }

LatticeIsometry LatticeIsometry::inverse() const {
  std::vector<Integer> e(entries_.size());
  for (int r = 0; r < dim(); ++r)
    for (int c = 0; c < dim(); ++c) {
      int sign = ((r == 0) == (c == 0)) ? 1 : -1;
      e[static_cast<std::size_t>(r) * dim() + c] = sign * at(c, r);
    }
  return LatticeIsometry(n_, std::move(e));
}

LatticeIsometry operator*(const LatticeIsometry& a, const LatticeIsometry& b) {
  if (a.dim() != b.dim()) throw ArgumentError("isometry dimensions differ");
  const int d = a.dim();
  std::vector<Integer> e(static_cast<std::size_t>(d * d));
  for (int r = 0; r < d; ++r)
    for (int k = 0; k < d; ++k) {
      const Integer& x = a.at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < d; ++c) e[static_cast<std::size_t>(r) * d + c] += x * b.at(k, c);
    }
  return LatticeIsometry(a.n(), std::move(e));
}

LatticeIsometry LatticeIsometry::power(const Integer& exponent) const {
  if (exponent < 0) return inverse().power(-exponent);
  LatticeIsometry result = identity(n_);
  LatticeIsometry base = *this;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = result * base;
    if (i + 1 < bits) base = base * base;
  }
  return result;
}

bool LatticeIsometry::is_identity() const { return *this == identity(n_); }

std::string LatticeIsometry::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < dim(); ++r) {
    if (r) os << ", ";
    os << "[";
    for (int c = 0; c < dim(); ++c) os << (c ? ", " : "") << at(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace cremona
