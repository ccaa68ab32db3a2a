#include "cremona/quadres.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace cremona {

std::int64_t mod_reduce(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(mod_reduce(a, m)) * mod_reduce(b, m) % m);
}

namespace {

// g = x a + y b over Z, with (x, y) = (1, 0) whenever a divides b
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (a > 0 && b % a == 0) {
    x = 1;
    y = 0;
    return a;
  }
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b = mod_reduce(b, m);
  while (e > 0) {
    if (e & 1) r = mod_mul(r, b, m);
    b = mod_mul(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t x, y;
  if (ext_gcd(mod_reduce(a, m), m, x, y) != 1)
    throw ArgumentError(std::to_string(a) + " is not a unit mod " + std::to_string(m));
  return mod_reduce(x, m);
}

std::vector<std::pair<std::int64_t, int>> prime_power_factors(std::int64_t m) {
  if (m < 2) throw ArgumentError("modulus must be at least 2");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    int k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

ResidueModule::ResidueModule(std::int64_t modulus, int rank) : m_(modulus), n_(rank) {
  if (modulus < 2) throw ArgumentError("modulus must be at least 2");
  if (modulus > (std::int64_t{1} << 40)) throw ArgumentError("modulus too large");
  gram_ = gram_matrix(rank);
}

Residue ResidueModule::reduce(const std::vector<std::int64_t>& v) const {
  if (static_cast<int>(v.size()) != n_) throw ArgumentError("residue has the wrong length");
  Residue r(n_);
  for (int i = 0; i < n_; ++i) r[i] = mod_reduce(v[i], m_);
  return r;
}

Residue ResidueModule::of_root(const LatticeVector& v) const {
  if (v.n() != n_) throw ArgumentError("vector rank does not match the module");
  const auto c = root_coordinates(v);
  Residue r(n_);
  for (int i = 0; i < n_; ++i) {
    Integer t = c[i] % Integer(static_cast<long>(m_));
    if (t < 0) t += static_cast<long>(m_);
    r[i] = t.get_si();
  }
  return r;
}

Residue ResidueModule::simple_root(int i) const {
  if (i < 0 || i >= n_) throw ArgumentError("simple root index out of range");
  Residue r = zero();
  r[i] = 1;
  return r;
}

Residue ResidueModule::add(const Residue& a, const Residue& b) const {
  Residue r(n_);
  for (int i = 0; i < n_; ++i) r[i] = mod_reduce(a[i] + b[i], m_);
  return r;
}

Residue ResidueModule::sub(const Residue& a, const Residue& b) const {
  Residue r(n_);
  for (int i = 0; i < n_; ++i) r[i] = mod_reduce(a[i] - b[i], m_);
  return r;
}

Residue ResidueModule::scale(std::int64_t c, const Residue& a) const {
  Residue r(n_);
  for (int i = 0; i < n_; ++i) r[i] = mod_mul(c, a[i], m_);
  return r;
}

std::int64_t ResidueModule::b(const Residue& x, const Residue& y) const {
  __int128 s = 0;
  for (int i = 0; i < n_; ++i) {
    if (!x[i]) continue;
    __int128 row = 0;
    for (int j = 0; j < n_; ++j)
      if (gram_[i][j]) row += static_cast<__int128>(gram_[i][j]) * y[j];
    s += static_cast<__int128>(x[i]) * (row % m_);
    s %= m_;
  }
  return mod_reduce(static_cast<std::int64_t>(s % m_), m_);
}

std::int64_t ResidueModule::q(const Residue& x) const {
  __int128 s = 0;
  for (int i = 0; i < n_; ++i) {
    if (!x[i]) continue;
    s -= static_cast<__int128>(x[i]) * x[i] % m_;
    for (int j = i + 1; j < n_; ++j)
      if (gram_[i][j]) s += static_cast<__int128>(gram_[i][j]) * x[i] % m_ * x[j] % m_;
    s %= m_;
  }
  return mod_reduce(static_cast<std::int64_t>(s % m_), m_);
}

bool ResidueModule::is_unit(std::int64_t a) const { return std::gcd(mod_reduce(a, m_), m_) == 1; }

Residue ResidueModule::reflect(const Residue& h, const Residue& x) const {
  const std::int64_t qh = q(h);
  if (!is_unit(qh)) throw ArgumentError("reflection vector has non-unit norm " + std::to_string(qh));
  const std::int64_t c = mod_mul(b(x, h), mod_inverse(qh, m_), m_);
  return sub(x, scale(c, h));
}

Residue ResidueModule::simple_reflect(int i, const Residue& x) const {
  std::int64_t c = 0;
  for (int j = 0; j < n_; ++j)
    if (gram_[j][i]) c += gram_[j][i] * x[j];
  Residue r = x;
  r[i] = mod_reduce(r[i] + mod_reduce(c, m_), m_);
  return r;
}

ResidueSubmodule::ResidueSubmodule(const ResidueModule& parent, std::vector<Residue> generators)
    : parent_(&parent), gens_(std::move(generators)) {
  const int n = parent.rank();
  const std::int64_t m = parent.modulus();
  for (auto& g : gens_) g = parent.reduce(g);
  std::vector<Residue> a = gens_;
  std::vector<Residue> v(n, Residue(n, 0)), p(n, Residue(n, 0));
  for (int i = 0; i < n; ++i) v[i][i] = p[i][i] = 1;
  const std::size_t rows = a.size();
  auto row_combine = [&](std::size_t t, std::size_t r, int col) {
    std::int64_t x, y;
    const std::int64_t av = a[t][col], bv = a[r][col];
    const std::int64_t g = ext_gcd(av, bv, x, y);
    const std::int64_t ag = av / g, bg = bv / g;
    for (int j = 0; j < n; ++j) {
      const std::int64_t rt = a[t][j], rr = a[r][j];
      a[t][j] = mod_reduce(mod_mul(x, rt, m) + mod_mul(y, rr, m), m);
      a[r][j] = mod_reduce(mod_mul(ag, rr, m) - mod_mul(bg, rt, m), m);
    }
  };
  auto col_combine = [&](int t, int c) {
    std::int64_t x, y;
    const std::int64_t av = a[t][t], bv = a[t][c];
    const std::int64_t g = ext_gcd(av, bv, x, y);
    const std::int64_t ag = av / g, bg = bv / g;
    auto cols = [&](std::vector<Residue>& mat) {
      for (auto& row : mat) {
        const std::int64_t ct = row[t], cc = row[c];
        row[t] = mod_reduce(mod_mul(x, ct, m) + mod_mul(y, cc, m), m);
        row[c] = mod_reduce(mod_mul(ag, cc, m) - mod_mul(bg, ct, m), m);
      }
    };
    cols(a);
    cols(v);
    const Residue pt = p[t], pc = p[c];
    for (int j = 0; j < n; ++j) {
      p[t][j] = mod_reduce(mod_mul(ag, pt[j], m) + mod_mul(bg, pc[j], m), m);
      p[c][j] = mod_reduce(mod_mul(x, pc[j], m) - mod_mul(y, pt[j], m), m);
    }
  };
  div_.assign(n, m);
  for (int t = 0; t < n && static_cast<std::size_t>(t) < rows; ++t) {
    std::size_t br = rows;
    int bc = -1;
    std::int64_t best = m;
    for (std::size_t r = t; r < rows; ++r)
      for (int c = t; c < n; ++c)
        if (a[r][c] && std::gcd(a[r][c], m) < best) {
          best = std::gcd(a[r][c], m);
          br = r;
          bc = c;
        }
    if (bc < 0) break;
    std::swap(a[t], a[br]);
    if (bc != t) {
      for (auto& row : a) std::swap(row[t], row[bc]);
      for (auto& row : v) std::swap(row[t], row[bc]);
      std::swap(p[t], p[bc]);
    }
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r)
        if (a[r][t]) row_combine(t, r, t);
      for (int c = t + 1; c < n; ++c)
        if (a[t][c]) col_combine(t, c);
      for (std::size_t r = t + 1; r < rows; ++r)
        if (a[r][t]) dirty = true;
    }
    div_[t] = std::gcd(a[t][t], m);
  }
  basis_ = p;
  dual_.assign(n, Residue(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) dual_[j][i] = v[i][j];
}

bool ResidueSubmodule::contains(const Residue& x) const {
  const int n = parent_->rank();
  const std::int64_t m = parent_->modulus();
  const Residue r = parent_->reduce(x);
  for (int t = 0; t < n; ++t) {
    __int128 c = 0;
    for (int j = 0; j < n; ++j) c += static_cast<__int128>(r[j]) * dual_[t][j];
    const std::int64_t ct = static_cast<std::int64_t>(c % m);
    if (ct % div_[t] != 0) return false;
  }
  return true;
}

int ResidueSubmodule::free_rank() const {
  int best = parent_->rank();
  for (const auto& [p, k] : prime_power_factors(parent_->modulus())) {
    int count = 0;
    for (auto d : div_)
      if (d % p != 0) ++count;
    best = std::min(best, count);
  }
  return best;
}

std::vector<Residue> ResidueSubmodule::free_basis(std::int64_t prime, int exponent) const {
  const std::int64_t pk = ipow(prime, exponent);
  if (parent_->modulus() % pk != 0) throw ArgumentError("prime power does not divide the modulus");
  std::vector<Residue> out;
  for (std::size_t t = 0; t < div_.size(); ++t) {
    if (div_[t] % prime == 0) continue;
    Residue r = basis_[t];
    for (auto& c : r) c %= pk;
    out.push_back(std::move(r));
  }
  return out;
}

ResidueSubmodule random_submodule(const ResidueModule& module, int rank, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, module.modulus() - 1);
  std::vector<Residue> gens;
  for (int i = 0; i < rank; ++i) {
    Residue r(module.rank());
    for (auto& c : r) c = dist(rng);
    gens.push_back(std::move(r));
  }
  return ResidueSubmodule(module, std::move(gens));
}

namespace {

std::pair<std::int64_t, int> as_prime_power(std::int64_t m) {
  const auto f = prime_power_factors(m);
  if (f.size() != 1) throw ArgumentError("modulus " + std::to_string(m) + " is not a prime power");
  return f[0];
}

// Hensel correction inside span(basis); nullopt when no companion vector
// has a unit pairing with v.
std::optional<Residue> lift(const ResidueModule& module, const std::vector<Residue>& basis, Residue v,
                            std::int64_t a) {
  const std::int64_t m = module.modulus();
  for (int iter = 0; iter < 128; ++iter) {
    const std::int64_t delta = mod_reduce(module.q(v) - a, m);
    if (delta == 0) return v;
    std::optional<Residue> w;
    for (const auto& c : basis)
      if (module.is_unit(module.b(v, c))) {
        w = c;
        break;
      }
    if (!w && module.is_unit(module.b(v, v))) w = v;
    for (std::size_t i = 0; !w && i < basis.size(); ++i)
      for (std::size_t j = i + 1; !w && j < basis.size(); ++j) {
        Residue c = module.add(basis[i], basis[j]);
        if (module.is_unit(module.b(v, c))) w = c;
      }
    if (!w) return std::nullopt;
    const std::int64_t t = mod_mul(m - delta, mod_inverse(module.b(v, *w), m), m);
    v = module.add(v, module.scale(t, *w));
  }
  return std::nullopt;
}

}  // namespace

Residue represent_unit(const ResidueModule& module, const std::vector<Residue>& basis_in, std::int64_t a) {
  const std::int64_t m = module.modulus();
  const auto [p, k] = as_prime_power(m);
  a = mod_reduce(a, m);
  if (!module.is_unit(a)) throw ArgumentError(std::to_string(a) + " is not a unit mod " + std::to_string(m));
  std::vector<Residue> basis;
  for (const auto& b : basis_in) basis.push_back(module.reduce(b));
  if (basis.empty())
    for (int i = 0; i < module.rank(); ++i) basis.push_back(module.simple_root(i));
  if (basis.size() < 2) throw ArgumentError("submodule rank too small to represent units");
  const ResidueSubmodule span(module, basis);

  auto attempt = [&](const Residue& v) -> std::optional<Residue> {
    if (mod_reduce(module.q(v) - a, p) != 0) return std::nullopt;
    return lift(module, basis, v, a);
  };
  // simple roots first
  std::vector<int> order;
  for (int i = 1; i < module.rank(); ++i) order.push_back(i);
  order.push_back(0);
  for (int i : order) {
    const Residue s = module.simple_root(i);
    if (span.contains(s))
      if (auto r = attempt(s)) return *r;
  }
  // one and two basis vectors with small coefficients
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::int64_t c = 1; c < p; ++c)
      if (auto r = attempt(module.scale(c, basis[i]))) return *r;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      for (std::int64_t c = 1; c < p; ++c)
        for (std::int64_t d = 1; d < p; ++d)
          if (auto r = attempt(module.add(module.scale(c, basis[i]), module.scale(d, basis[j])))) return *r;
  std::mt19937_64 rng(static_cast<std::uint64_t>(a) * 1000003u + static_cast<std::uint64_t>(m));
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  for (int trial = 0; trial < 200000; ++trial) {
    Residue v = module.zero();
    for (const auto& b : basis) v = module.add(v, module.scale(dist(rng), b));
    if (auto r = attempt(v)) return *r;
  }
  throw DomainError("no vector of norm " + std::to_string(a) + " found in the submodule");
}

Residue apply(const ResidueModule& module, const ReflectionProduct& p, const Residue& x) {
  Residue r = module.reduce(x);
  for (const auto& h : p.vectors) r = module.reflect(h, r);
  return r;
}

ReflectionProduct concat(const ReflectionProduct& a, const ReflectionProduct& b) {
  ReflectionProduct r = a;
  r.vectors.insert(r.vectors.end(), b.vectors.begin(), b.vectors.end());
  return r;
}

namespace {

// Solves G c = rhs mod a prime power with unit pivots; nullopt if G is not
// invertible.
std::optional<std::vector<std::int64_t>> solve_mod(std::vector<std::vector<std::int64_t>> g,
                                                   std::vector<std::int64_t> rhs, std::int64_t m) {
  const std::size_t n = g.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && std::gcd(g[r][c], m) != 1) ++r;
    if (r == n) return std::nullopt;
    std::swap(g[r], g[c]);
    std::swap(rhs[r], rhs[c]);
    const std::int64_t inv = mod_inverse(g[c][c], m);
    for (std::size_t j = 0; j < n; ++j) g[c][j] = mod_mul(g[c][j], inv, m);
    rhs[c] = mod_mul(rhs[c], inv, m);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || g[i][c] == 0) continue;
      const std::int64_t t = g[i][c];
      for (std::size_t j = 0; j < n; ++j) g[i][j] = mod_reduce(g[i][j] - mod_mul(t, g[c][j], m), m);
      rhs[i] = mod_reduce(rhs[i] - mod_mul(t, rhs[c], m), m);
    }
  }
  return rhs;
}

}  // namespace

ReflectionProduct witt_extend(const ResidueModule& module, const std::vector<Residue>& from,
                              const std::vector<Residue>& to, std::uint64_t seed) {
  if (from.size() != to.size()) throw ArgumentError("bases have different lengths");
  const std::int64_t m = module.modulus();
  for (std::size_t i = 0; i < from.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (module.b(from[i], from[j]) != module.b(to[i], to[j]) ||
          (i == j && module.q(from[i]) != module.q(to[i])))
        throw ArgumentError("the bases are not isometric");
  ReflectionProduct out;
  std::vector<Residue> matched;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(0, m - 1);
  for (std::size_t i = 0; i < from.size(); ++i) {
    const Residue g = module.reduce(to[i]);
    Residue f = apply(module, out, from[i]);
    if (f == g) {
      matched.push_back(g);
      continue;
    }
    const Residue diff = module.sub(f, g);
    if (module.is_unit(module.q(diff))) {
      out.vectors.push_back(diff);
      matched.push_back(g);
      continue;
    }
    // split off the matched part
    std::vector<std::vector<std::int64_t>> gram(matched.size(), std::vector<std::int64_t>(matched.size()));
    for (std::size_t a = 0; a < matched.size(); ++a)
      for (std::size_t b = 0; b < matched.size(); ++b) gram[a][b] = module.b(matched[a], matched[b]);
    auto project = [&](const Residue& x) -> std::optional<Residue> {
      if (matched.empty()) return x;
      std::vector<std::int64_t> rhs;
      for (const auto& u : matched) rhs.push_back(module.b(x, u));
      auto c = solve_mod(gram, rhs, m);
      if (!c) return std::nullopt;
      Residue r = x;
      for (std::size_t a = 0; a < matched.size(); ++a) r = module.sub(r, module.scale((*c)[a], matched[a]));
      return r;
    };
    // x -> x - sum b(x, u_j) d_j with b(d_j, u_i) = delta_ij maps onto the
    // orthogonal complement of the matched vectors even when their Gram
    // matrix is singular (even forms at p = 2)
    std::vector<Residue> dual;
    if (!matched.empty()) {
      const std::size_t k = matched.size(), n = static_cast<std::size_t>(module.rank());
      std::vector<std::vector<std::int64_t>> rows;
      for (const auto& u : matched) {
        std::vector<std::int64_t> r(n);
        for (std::size_t c = 0; c < n; ++c) r[c] = module.b(u, module.simple_root(static_cast<int>(c)));
        rows.push_back(r);
      }
      std::vector<std::size_t> cols(k);
      std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t at, std::size_t from) {
        if (at == k) {
          std::vector<std::vector<std::int64_t>> minor(k, std::vector<std::int64_t>(k));
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = rows[i][cols[j]];
          for (std::size_t j = 0; j < k; ++j) {
            std::vector<std::int64_t> e(k, 0);
            e[j] = 1;
            const auto c = solve_mod(minor, e, m);
            if (!c) {
              dual.clear();
              return false;
            }
            Residue d(n, 0);
            for (std::size_t a = 0; a < k; ++a) d[cols[a]] = (*c)[a];
            dual.push_back(d);
          }
          return true;
        }
        for (std::size_t c = from; c < n; ++c) {
          cols[at] = c;
          if (pick(at + 1, c + 1)) return true;
        }
        return false;
      };
      pick(0, 0);
    }
    const bool complement_ok = matched.empty() || !dual.empty();
    auto to_complement = [&](Residue x) {
      for (std::size_t j = 0; j < dual.size(); ++j) x = module.sub(x, module.scale(module.b(x, matched[j]), dual[j]));
      return x;
    };
    const auto gperp = project(g);
    bool done = false;
    if (gperp) {
      const Residue fperp = module.sub(f, module.sub(g, *gperp));
      const Residue sum = module.add(fperp, *gperp);
      if (module.is_unit(module.q(sum)) && module.is_unit(module.q(*gperp))) {
        out.vectors.push_back(sum);
        out.vectors.push_back(*gperp);
        done = true;
      }
    }
    if (complement_ok) {
      // connector: a reflection in the complement first
      for (int trial = 0; !done && trial < 20000; ++trial) {
        Residue x(module.rank());
        for (auto& c : x) c = dist(rng);
        const Residue w = to_complement(x);
        if (!module.is_unit(module.q(w))) continue;
        const Residue f2 = module.reflect(w, f);
        const Residue d2 = module.sub(f2, g);
        if (f2 == g) {
          out.vectors.push_back(w);
          done = true;
        } else if (module.is_unit(module.q(d2))) {
          out.vectors.push_back(w);
          out.vectors.push_back(d2);
          done = true;
        }
      }
    }
    if (!done)
      throw DomainError("Witt step " + std::to_string(i + 1) + ": no unit-norm reflection or connector found");
    matched.push_back(g);
  }
  for (std::size_t i = 0; i < from.size(); ++i)
    if (apply(module, out, from[i]) != module.reduce(to[i])) throw std::logic_error("Witt extension failed to verify");
  return out;
}

SquareClass square_class(std::int64_t unit, std::int64_t modulus) {
  const auto [p, k] = as_prime_power(modulus);
  unit = mod_reduce(unit, modulus);
  if (std::gcd(unit, modulus) != 1) throw ArgumentError("square class of a non-unit");
  if (p != 2) {
    if (mod_pow(unit, (p - 1) / 2, p) == 1) return {1};
    for (std::int64_t r = 2;; ++r)
      if (mod_pow(r, (p - 1) / 2, p) != 1) return {r};
  }
  if (k == 1) return {1};
  if (k == 2) return {unit % 4};
  return {unit % 8};
}

SquareClass spinor_norm(const ResidueModule& module, const ReflectionProduct& p) {
  std::int64_t prod = 1;
  for (const auto& h : p.vectors) prod = mod_mul(prod, module.q(h), module.modulus());
  return square_class(prod, module.modulus());
}

ReflectionProduct adjust_to_spin(const ResidueModule& module, const ReflectionProduct& p,
                                 const std::vector<Residue>& basis) {
  const std::int64_t m = module.modulus();
  std::int64_t prod = 1;
  for (const auto& h : p.vectors) prod = mod_mul(prod, module.q(h), m);
  const bool even = p.size() % 2 == 0;
  if (even && square_class(prod, m) == SquareClass{1}) return p;
  ReflectionProduct out = p;
  if (!even) {
    out.vectors.push_back(represent_unit(module, basis, mod_inverse(prod, m)));
  } else {
    out.vectors.push_back(represent_unit(module, basis, 1));
    out.vectors.push_back(represent_unit(module, basis, mod_inverse(prod, m)));
  }
  return out;
}

std::string to_string(RootSearchMethod m) { return m == RootSearchMethod::Theory ? "theory" : "bfs"; }

namespace {

struct Packer {
  std::int64_t m;
  int n;
  std::uint64_t pack(const Residue& r) const {
    std::uint64_t key = 0;
    for (int i = n - 1; i >= 0; --i) key = key * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(r[i]);
    return key;
  }
  Residue unpack(std::uint64_t key) const {
    Residue r(n);
    for (int i = 0; i < n; ++i) {
      r[i] = static_cast<std::int64_t>(key % static_cast<std::uint64_t>(m));
      key /= static_cast<std::uint64_t>(m);
    }
    return r;
  }
};

Packer make_packer(const ResidueModule& module) {
  long double cap = 1;
  for (int i = 0; i < module.rank(); ++i) cap *= static_cast<long double>(module.modulus());
  if (cap >= 1.8e19L) throw ArgumentError("modulus too large for the residue orbit search");
  return {module.modulus(), module.rank()};
}

struct Visit {
  std::uint64_t parent;
  int letter;  // -1 at a source
  int source;
};

// Letters from the source to key, in the order they are applied.
std::vector<int> path_to(const std::unordered_map<std::uint64_t, Visit>& seen, std::uint64_t key) {
  std::vector<int> path;
  for (;;) {
    const auto& v = seen.at(key);
    if (v.letter < 0) break;
    path.push_back(v.letter);
    key = v.parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

WeylWord word_from_path(const std::vector<int>& applied) {
  WeylWord w;
  w.letters.assign(applied.rbegin(), applied.rend());
  return w;
}

void poll(const RootSearchOptions& o, std::size_t& counter) {
  if (o.cancel && ++counter % kCancelPollInterval == 0 && o.cancel()) throw Cancelled();
}

RootCertificate orbit_bfs(const ResidueSubmodule& v, const RootSearchOptions& o) {
  const ResidueModule& module = v.parent();
  const Packer pk = make_packer(module);
  const int n = module.rank();
  std::unordered_map<std::uint64_t, Visit> seen;
  std::vector<std::uint64_t> frontier;
  auto finish = [&](std::uint64_t key, int depth) {
    const auto path = path_to(seen, key);
    const int src = seen.at(key).source;
    RootCertificate c{RootSearchMethod::OrbitBFS, word_from_path(path), {}, pk.unpack(key), module.modulus(), depth};
    c.start = src;
    c.root = apply_word(c.word, simple_root(n, src));
    return std::make_pair(c, src);
  };
  for (int i = 0; i < n; ++i) {
    const Residue s = module.simple_root(i);
    const auto key = pk.pack(s);
    if (seen.emplace(key, Visit{0, -1, i}).second) frontier.push_back(key);
    if (v.contains(s)) return finish(key, 0).first;
  }
  std::size_t counter = 0;
  for (int depth = 1;; ++depth) {
    std::sort(frontier.begin(), frontier.end());
    std::vector<std::uint64_t> next;
    for (auto key : frontier) {
      const Residue x = pk.unpack(key);
      for (int l = 0; l < n; ++l) {
        poll(o, counter);
        const Residue y = module.simple_reflect(l, x);
        const auto ky = pk.pack(y);
        if (!seen.emplace(ky, Visit{key, l, seen.at(key).source}).second) continue;
        if (v.contains(y)) return finish(ky, depth).first;
        next.push_back(ky);
        if (seen.size() >= o.max_visited)
          throw InconclusiveError("orbit search visited " + std::to_string(seen.size()) + " residues without success");
      }
    }
    if (next.empty()) throw InconclusiveError("residue orbit exhausted without reaching the submodule");
    frontier = std::move(next);
  }
}

Residue crt(const std::vector<std::pair<std::int64_t, Residue>>& parts, std::int64_t m) {
  Residue out(parts.front().second.size(), 0);
  for (const auto& [pk, r] : parts) {
    const std::int64_t rest = m / pk;
    const std::int64_t coef = mod_mul(rest, mod_inverse(rest % pk, pk), m);
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = mod_reduce(out[i] + mod_mul(coef, r[i], m), m);
  }
  return out;
}

RootCertificate theory(const ResidueSubmodule& v, const RootSearchOptions& o) {
  const ResidueModule& module = v.parent();
  const std::int64_t m = module.modulus();
  const int n = module.rank();
  std::vector<std::pair<std::int64_t, Residue>> targets;
  for (const auto& [p, k] : prime_power_factors(m)) {
    const std::int64_t pk = ipow(p, k);
    const ResidueModule local(pk, n);
    const auto m0 = v.free_basis(p, k);
    const Residue start = local.simple_root(1);
    const Residue target = represent_unit(local, m0, -1);
    auto sigma = witt_extend(local, {start}, {target}, o.seed);
    sigma = adjust_to_spin(local, sigma, m0);
    targets.emplace_back(pk, apply(local, sigma, start));
  }
  const Residue t = crt(targets, m);
  // bidirectional search in the residue orbit from alpha_1 to +-t
  const Packer pk = make_packer(module);
  std::unordered_map<std::uint64_t, Visit> fwd, bwd;
  const auto s = pk.pack(module.simple_root(1));
  fwd.emplace(s, Visit{0, -1, 1});
  const auto t1 = pk.pack(t), t2 = pk.pack(module.scale(-1, t));
  bwd.emplace(t1, Visit{0, -1, 0});
  bwd.emplace(t2, Visit{0, -1, 1});
  std::vector<std::uint64_t> ff{s}, bf{t1, t2};
  std::sort(bf.begin(), bf.end());
  bf.erase(std::unique(bf.begin(), bf.end()), bf.end());
  std::size_t counter = 0;
  auto meet = [&](std::uint64_t key) {
    auto head = path_to(fwd, key);
    auto tail = path_to(bwd, key);
    std::reverse(tail.begin(), tail.end());
    head.insert(head.end(), tail.begin(), tail.end());
    RootCertificate c{RootSearchMethod::Theory, word_from_path(head), {}, {}, m, static_cast<int>(head.size())};
    c.root = apply_word(c.word, simple_root(n, 1));
    c.residue = module.of_root(c.root);
    if (!v.contains(c.residue)) throw std::logic_error("lifted root misses the submodule");
    return c;
  };
  if (bwd.count(s)) return meet(s);
  while (!ff.empty() && !bf.empty()) {
    const bool forward = ff.size() <= bf.size();
    auto& frontier = forward ? ff : bf;
    auto& mine = forward ? fwd : bwd;
    auto& other = forward ? bwd : fwd;
    std::sort(frontier.begin(), frontier.end());
    std::vector<std::uint64_t> next;
    for (auto key : frontier) {
      const Residue x = pk.unpack(key);
      for (int l = 0; l < n; ++l) {
        poll(o, counter);
        const auto ky = pk.pack(module.simple_reflect(l, x));
        if (!mine.emplace(ky, Visit{key, l, 0}).second) continue;
        if (other.count(ky)) return meet(ky);
        next.push_back(ky);
        if (fwd.size() + bwd.size() >= o.max_visited)
          throw InconclusiveError("lift search budget exhausted after " + std::to_string(fwd.size() + bwd.size()) +
                                  " residues");
      }
    }
    frontier = std::move(next);
  }
  throw InconclusiveError("target residue is not in the orbit of alpha_1");
}

}  // namespace

RootCertificate find_root_in_submodule(const ResidueSubmodule& v, RootSearchMethod method,
                                       const RootSearchOptions& options) {
  if (v.free_rank() < 8)
    throw ArgumentError("submodule has free rank " + std::to_string(v.free_rank()) + ", need at least 8");
  RootCertificate c = method == RootSearchMethod::Theory ? theory(v, options) : orbit_bfs(v, options);
  if (square(c.root) != -2 || inner(c.root, canonical_vector(c.root.n())) != 0 ||
      !v.contains(v.parent().of_root(c.root)))
    throw std::logic_error("root search returned an invalid certificate");
  return c;
}

std::size_t count_root_residues(std::int64_t m, int rank, std::size_t max_visited) {
  const ResidueModule module(m, rank);
  const Packer pk = make_packer(module);
  std::unordered_set<std::uint64_t> seen{pk.pack(module.simple_root(1))};
  std::vector<std::uint64_t> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto key : frontier) {
      const Residue x = pk.unpack(key);
      for (int l = 0; l < rank; ++l) {
        const auto ky = pk.pack(module.simple_reflect(l, x));
        if (seen.insert(ky).second) next.push_back(ky);
      }
    }
    if (seen.size() > max_visited) throw InconclusiveError("residue orbit larger than the budget");
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace cremona
