// Copyright 2026 The cliffatlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cliffatlas/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "cliffatlas/number_theory.hpp"

namespace cliffatlas {

namespace {

using Coeffs = std::map<long, Rational>;

// Per-prime data for reading the Zumbroich digit of an exponent. For
// p^e || n the p-component of zeta_n^k is zeta_{p^e}^j with
// j = k * u mod p^e, u = (n / p^e)^{-1} mod p^e. The "digit" is j div p^(e-1);
// adding n/p to k increments the digit by one and leaves every other prime
// component untouched.
struct PrimeDigit {
  long p;
  int e;
  long pe;
  long u;
  long step;  // n / p
  long low;   // p^(e-1)
};

struct Level {
  long n;
  std::vector<PrimeDigit> primes;

  long digit(const PrimeDigit& d, long k) const {
    return nt::mod(k % d.pe * d.u, d.pe) / d.low;
  }
  bool in_basis(const PrimeDigit& d, long k) const {
    long b = digit(d, k);
    return d.p == 2 ? b == 0 : b != 0;
  }
};

const Level& level(long n) {
  static std::mutex mu;
  static std::unordered_map<long, std::unique_ptr<Level>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto lv = std::make_unique<Level>();
  lv->n = n;
  for (const auto& pp : nt::factorize(n)) {
    PrimeDigit d;
    d.p = pp.prime;
    d.e = pp.exponent;
    d.pe = pp.value;
    d.u = nt::inverse_mod(n / pp.value, pp.value);
    d.step = n / pp.prime;
    d.low = pp.value / pp.prime;
    lv->primes.push_back(d);
  }
  auto* raw = lv.get();
  cache.emplace(n, std::move(lv));
  return *raw;
}

void accumulate(Coeffs& c, long k, const Rational& v) {
  auto [it, inserted] = c.try_emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

// Rewrites every non-basis exponent with the relations
//   zeta_p^0 = -(zeta_p + ... + zeta_p^(p-1))   (p odd)
//   zeta_2   = -1
// one prime at a time. The result is the unique Zumbroich expansion.
void reduce_to_basis(const Level& lv, Coeffs& c) {
  for (const auto& d : lv.primes) {
    std::vector<long> bad;
    for (const auto& [k, v] : c) {
      if (!lv.in_basis(d, k)) bad.push_back(k);
    }
    for (long k : bad) {
      auto it = c.find(k);
      if (it == c.end()) continue;
      Rational v = -it->second;
      c.erase(it);
      if (d.p == 2) {
        accumulate(c, nt::mod(k + lv.n / 2, lv.n), v);
      } else {
        for (long t = 1; t < d.p; ++t) {
          accumulate(c, nt::mod(k + t * d.step, lv.n), v);
        }
      }
    }
  }
}

// Tries to rewrite a basis expansion at level n as one at level n/p.
bool descend(const Level& lv, const PrimeDigit& d, Coeffs& c) {
  if (d.e >= 2 || d.p == 2) {
    for (const auto& [k, v] : c) {
      if (k % d.p != 0) return false;
    }
    Coeffs out;
    for (auto& [k, v] : c) out.emplace(k / d.p, v);
    c = std::move(out);
    return true;
  }
  // Odd p exactly dividing n: the subfield elements appear as full orbits
  // {k0 + t n/p : t = 1..p-1} with equal coefficients.
  std::map<long, std::pair<long, const Rational*>> orbits;
  for (const auto& [k, v] : c) {
    long b = lv.digit(d, k);
    long k0 = nt::mod(k - b * d.step, lv.n);
    auto [it, inserted] = orbits.try_emplace(k0, 1, &v);
    if (!inserted) {
      if (!(*it->second.second == v)) return false;
      ++it->second.first;
    }
  }
  Coeffs out;
  for (const auto& [k0, entry] : orbits) {
    if (entry.first != d.p - 1) return false;
    out.emplace(k0 / d.p, -*entry.second);
  }
  c = std::move(out);
  return true;
}

void canonicalize(long& n, Coeffs& c) {
  reduce_to_basis(level(n), c);
  bool changed = true;
  while (changed && n > 1) {
    changed = false;
    const Level& lv = level(n);
    for (const auto& d : lv.primes) {
      Coeffs trial = c;
      if (descend(lv, d, trial)) {
        n /= d.p;
        c = std::move(trial);
        reduce_to_basis(level(n), c);
        changed = true;
        break;
      }
    }
  }
  if (c.empty()) n = 1;
}

Coeffs lift(const Cyclotomic& a, long n) {
  Coeffs c;
  long scale = n / a.conductor();
  for (const auto& [k, v] : a.terms()) c.emplace(k * scale, v);
  return c;
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& q) {
  if (!q.is_zero()) terms_.emplace_back(0, q);
}

Cyclotomic Cyclotomic::from_terms(long n, std::span<const Term> terms) {
  if (n < 1) throw std::domain_error("Cyclotomic: conductor must be positive");
  Coeffs c;
  for (const auto& [k, v] : terms) {
    if (!v.is_zero()) accumulate(c, nt::mod(k, n), v);
  }
  canonicalize(n, c);
  Cyclotomic out;
  out.conductor_ = n;
  out.terms_.assign(c.begin(), c.end());
  return out;
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n < 1) throw std::domain_error("root_of_unity: n must be positive");
  Term t{k, Rational(1)};
  return from_terms(n, std::span<const Term>(&t, 1));
}

Cyclotomic Cyclotomic::sqrt_named(long d) {
  auto z = [](long n, long k) { return root_of_unity(n, k); };
  switch (d) {
    case 2:
      return z(8, 1) + z(8, -1);
    case 3:
      return z(12, 1) + z(12, -1);
    case -3:
      return z(3, 1) - z(3, 2);
    case 5: {
      Cyclotomic r = Cyclotomic(1) + Cyclotomic(2) * (z(5, 1) + z(5, 4));
      return r.to_complex().real() > 0 ? r : -r;
    }
    case -7: {
      // Quadratic Gauss sum over the residues {1, 2, 4} mod 7.
      Cyclotomic g;
      for (long k = 1; k < 7; ++k) {
        bool residue = (k == 1 || k == 2 || k == 4);
        g += residue ? z(7, k) : -z(7, k);
      }
      return g.to_complex().imag() > 0 ? g : -g;
    }
    default:
      throw std::domain_error("sqrt_named: unsupported radicand " +
                              std::to_string(d));
  }
}

bool Cyclotomic::is_one() const {
  return conductor_ == 1 && terms_.size() == 1 && terms_[0].second == Rational(1);
}

std::optional<Rational> Cyclotomic::to_rational() const {
  if (conductor_ != 1) return std::nullopt;
  if (terms_.empty()) return Rational(0);
  return terms_[0].second;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long n = nt::lcm(a.conductor_, b.conductor_);
  Coeffs c = lift(a, n);
  long scale = n / b.conductor_;
  for (const auto& [k, v] : b.terms_) accumulate(c, k * scale, v);
  canonicalize(n, c);
  Cyclotomic out;
  out.conductor_ = n;
  out.terms_.assign(c.begin(), c.end());
  return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero()) return Cyclotomic();
  if (a.is_rational() || b.is_rational()) {
    const Cyclotomic& q = a.is_rational() ? a : b;
    const Cyclotomic& x = a.is_rational() ? b : a;
    const Rational& s = q.terms_[0].second;
    Cyclotomic out = x;
    for (auto& t : out.terms_) t.second *= s;
    return out;
  }
  long n = nt::lcm(a.conductor_, b.conductor_);
  long sa = n / a.conductor_, sb = n / b.conductor_;
  Coeffs c;
  for (const auto& [ka, va] : a.terms_) {
    for (const auto& [kb, vb] : b.terms_) {
      accumulate(c, nt::mod(ka * sa + kb * sb, n), va * vb);
    }
  }
  canonicalize(n, c);
  Cyclotomic out;
  out.conductor_ = n;
  out.terms_.assign(c.begin(), c.end());
  return out;
}

Cyclotomic Cyclotomic::galois(long g) const {
  if (conductor_ <= 2) return *this;
  if (nt::gcd(g, conductor_) != 1) {
    throw std::domain_error("galois: exponent not coprime to conductor");
  }
  std::vector<Term> moved;
  moved.reserve(terms_.size());
  for (const auto& [k, v] : terms_) moved.emplace_back(k * nt::mod(g, conductor_), v);
  return from_terms(conductor_, moved);
}

namespace {

// Walks the unit group as a product of cyclic factors. Returns the full
// Galois norm and the product of all non-identity conjugates.
std::pair<Cyclotomic, Cyclotomic> norm_tower(const Cyclotomic& a) {
  Cyclotomic all = a;
  Cyclotomic others(1);
  for (const auto& [gen, order] : nt::unit_group_generators(a.conductor())) {
    Cyclotomic step(1);
    long g = 1;
    for (long i = 1; i < order; ++i) {
      g = nt::mod(g * gen, a.conductor());
      step *= all.galois(g);
    }
    others *= step;
    all *= step;
  }
  return {all, others};
}

}  // namespace

Rational Cyclotomic::norm() const {
  auto [all, others] = norm_tower(*this);
  auto q = all.to_rational();
  if (!q) throw std::logic_error("Cyclotomic::norm: non-rational norm");
  return *q;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
  if (is_rational()) return Cyclotomic(Rational(1) / terms_[0].second);
  auto [all, others] = norm_tower(*this);
  auto q = all.to_rational();
  if (!q) throw std::logic_error("Cyclotomic::inverse: non-rational norm");
  return others * Cyclotomic(Rational(1) / *q);
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::vector<Cyclotomic::Term> Cyclotomic::coefficients_at(long n) const {
  if (n % conductor_ != 0) {
    throw std::domain_error("coefficients_at: conductor does not divide level");
  }
  Coeffs c = lift(*this, n);
  reduce_to_basis(level(n), c);
  return {c.begin(), c.end()};
}

std::vector<long> zumbroich_basis(long n) {
  const Level& lv = level(n);
  std::vector<long> out;
  for (long k = 0; k < n; ++k) {
    bool ok = true;
    for (const auto& d : lv.primes) ok = ok && lv.in_basis(d, k);
    if (ok) out.push_back(k);
  }
  return out;
}

std::string Cyclotomic::to_string() const {
  std::string out = "c" + std::to_string(conductor_) + ":";
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(k);
    out += '=';
    out += v.to_string();
  }
  return out;
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  auto fail = [&]() {
    return std::invalid_argument("Cyclotomic: cannot parse '" + std::string(text) + "'");
  };
  if (text.size() < 3 || text[0] != 'c') throw fail();
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw fail();
  long n = 0;
  try {
    n = std::stol(std::string(text.substr(1, colon - 1)));
  } catch (const std::exception&) {
    throw fail();
  }
  if (n < 1) throw fail();
  std::vector<Term> terms;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw fail();
    long k = 0;
    try {
      k = std::stol(std::string(item.substr(0, eq)));
    } catch (const std::exception&) {
      throw fail();
    }
    terms.emplace_back(k, Rational::parse(item.substr(eq + 1)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return from_terms(n, terms);
}

std::string Cyclotomic::pretty() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    Rational mag = v.sign() < 0 ? -v : v;
    if (first) {
      if (v.sign() < 0) os << "-";
    } else {
      os << (v.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    std::string q = mag.is_integer() ? mag.numerator().get_str() : mag.to_string();
    if (k == 0) {
      os << q;
      continue;
    }
    if (!unit) os << q << "*";
    os << "z" << conductor_;
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc = 0;
  for (const auto& [k, v] : terms_) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                   static_cast<double>(conductor_);
    acc += v.to_double() * std::polar(1.0, angle);
  }
  return acc;
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = std::hash<long>{}(conductor_);
  for (const auto& [k, v] : terms_) {
    h ^= std::hash<long>{}(k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= v.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace cliffatlas
