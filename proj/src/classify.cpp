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


#include "cliffatlas/classify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <gmpxx.h>

#include "cliffatlas/gates.hpp"
#include "cliffatlas/number_theory.hpp"

namespace cliffatlas {

namespace {

Cyclotomic abs_squared(const Cyclotomic& z) { return z * z.conj(); }

}  // namespace

bool is_irreducible(const MatrixGroup& g) {
  Cyclotomic sum;
  for (const auto& [tr, count] : g.trace_multiset()) {
    sum += Cyclotomic(static_cast<long>(count)) * abs_squared(tr);
  }
  return sum == Cyclotomic(static_cast<long>(g.order()));
}

std::string to_string(Entanglement e) {
  switch (e) {
    case Entanglement::Local:
      return "local";
    case Entanglement::NonEntangling:
      return "non-entangling";
    case Entanglement::Entangling:
      break;
  }
  return "entangling";
}

Entanglement entanglement_class(const MatrixGroup& g) {
  if (g.dim() != 4) throw std::invalid_argument("entanglement_class: two-qubit groups only");
  const DenseDomain& d = g.domain();
  // Column order after right-multiplying by the qubit swap.
  constexpr std::array<int, 4> kIdentity{0, 1, 2, 3};
  constexpr std::array<int, 4> kSwapped{0, 2, 1, 3};
  auto factorizable = [&](const std::int64_t* m, const std::array<int, 4>& cols) {
    // Realigned matrix R[(i1, j1)][(i2, j2)] = M[2 i1 + i2][2 j1 + j2] has rank <= 1.
    auto r = [&](int a, int b) {
      int i1 = a >> 1, j1 = a & 1, i2 = b >> 1, j2 = b & 1;
      return d.entry(m, 2 * i1 + i2, cols[static_cast<std::size_t>(2 * j1 + j2)]);
    };
    for (int a = 0; a < 4; ++a) {
      for (int c = a + 1; c < 4; ++c) {
        for (int b = 0; b < 4; ++b) {
          for (int e = b + 1; e < 4; ++e) {
            if (!d.products_equal(r(a, b), r(c, e), r(a, e), r(c, b))) return false;
          }
        }
      }
    }
    return true;
  };
  bool local = true;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (factorizable(g.raw(x), kIdentity)) continue;
    local = false;
    if (!factorizable(g.raw(x), kSwapped)) return Entanglement::Entangling;
  }
  return local ? Entanglement::Local : Entanglement::NonEntangling;
}

std::string to_string(ShapeTag t) {
  switch (t) {
    case ShapeTag::S4:
      return "S4";
    case ShapeTag::A4:
      return "A4";
    case ShapeTag::D4:
      return "D4";
    case ShapeTag::V4:
      return "V4";
    case ShapeTag::Other:
      break;
  }
  return "other";
}

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[static_cast<std::size_t>(b[j])];
  return out;
}

long perm_order(const Perm& p) {
  Perm x = p;
  long k = 1;
  Perm id(p.size());
  for (std::size_t j = 0; j < id.size(); ++j) id[j] = static_cast<int>(j);
  while (x != id) {
    x = compose(p, x);
    ++k;
  }
  return k;
}

Shape classify_image(std::vector<Perm> image) {
  std::sort(image.begin(), image.end());
  Shape s;
  std::multiset<long> orders;
  for (const auto& p : image) orders.insert(perm_order(p));
  const std::size_t n = image.size();
  auto count = [&](long o) { return static_cast<long>(orders.count(o)); };
  if (n == 24 && image.front().size() == 4) {
    s.tag = ShapeTag::S4;
  } else if (n == 12 && count(3) == 8 && count(2) == 3) {
    s.tag = ShapeTag::A4;
  } else if (n == 8 && count(2) == 5 && count(4) == 2) {
    s.tag = ShapeTag::D4;
  } else if (n == 4 && count(2) == 3) {
    s.tag = ShapeTag::V4;
  }
  s.description =
      s.tag == ShapeTag::Other ? "order " + std::to_string(n) : to_string(s.tag);
  s.image = std::move(image);
  return s;
}

}  // namespace

std::optional<MonomialStructure> monomial_shape(const MatrixGroup& g) {
  const DenseDomain& d = g.domain();
  const int n = g.dim();
  std::set<Perm> image;
  std::vector<std::uint32_t> diagonal;
  Perm id(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) id[static_cast<std::size_t>(j)] = j;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    Perm p(static_cast<std::size_t>(n), -1);
    for (int col = 0; col < n; ++col) {
      for (int row = 0; row < n; ++row) {
        if (d.entry_is_zero(g.raw(x), row, col)) continue;
        if (p[static_cast<std::size_t>(col)] != -1) return std::nullopt;
        p[static_cast<std::size_t>(col)] = row;
      }
    }
    if (p == id) diagonal.push_back(x);
    image.insert(std::move(p));
  }
  return MonomialStructure{classify_image({image.begin(), image.end()}),
                           g.subgroup_from_elements(diagonal)};
}

namespace {

using IntRow = std::vector<mpz_class>;

// Rows in Hermite normal form: echelon, positive pivots, entries above each
// pivot reduced into [0, pivot).
std::vector<IntRow> hermite(std::vector<IntRow> rows) {
  if (rows.empty()) return rows;
  const std::size_t width = rows.front().size();
  std::size_t top = 0;
  for (std::size_t col = 0; col < width && top < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool cleared = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
        for (std::size_t k = col; k < width; ++k) rows[r][k] -= q * rows[top][k];
        if (rows[r][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (top < rows.size() && rows[top][col] != 0) {
      if (rows[top][col] < 0) {
        for (auto& v : rows[top]) v = -v;
      }
      for (std::size_t r = 0; r < top; ++r) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
        if (q != 0) {
          for (std::size_t k = col; k < width; ++k) rows[r][k] -= q * rows[top][k];
        }
      }
      ++top;
    }
  }
  rows.resize(top);
  return rows;
}

long common_conductor(const std::vector<Cyclotomic>& values) {
  long n = 1;
  for (const auto& v : values) n = nt::lcm(n, v.conductor());
  return n;
}

IntRow coordinates(const Cyclotomic& v, long n, const std::vector<long>& basis) {
  IntRow row(basis.size(), 0);
  for (const auto& [e, c] : v.coefficients_at(n)) {
    if (c.denominator() != 1) {
      throw std::logic_error("character ring: value is not an algebraic integer");
    }
    auto it = std::lower_bound(basis.begin(), basis.end(), e);
    row[static_cast<std::size_t>(it - basis.begin())] = c.numerator();
  }
  return row;
}

std::vector<IntRow> module_rows(const std::vector<Cyclotomic>& values, long n) {
  auto basis = zumbroich_basis(n);
  std::vector<IntRow> rows;
  for (const auto& v : values) rows.push_back(coordinates(v, n, basis));
  return hermite(std::move(rows));
}

std::vector<Cyclotomic> decode_rows(const std::vector<IntRow>& rows, long n) {
  auto basis = zumbroich_basis(n);
  std::vector<Cyclotomic> out;
  for (const auto& row : rows) {
    std::vector<Cyclotomic::Term> terms;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] != 0) terms.emplace_back(basis[k], Rational(row[k], mpz_class(1)));
    }
    out.push_back(Cyclotomic::from_terms(n, terms));
  }
  return out;
}

}  // namespace

bool same_module(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  long n = nt::lcm(common_conductor(a), common_conductor(b));
  return module_rows(a, n) == module_rows(b, n);
}

const std::vector<std::pair<std::string, std::vector<Cyclotomic>>>& reference_rings() {
  static const auto rings = [] {
    const Cyclotomic one(1);
    const Cyclotomic i = i_unit();
    const Cyclotomic z8 = Cyclotomic::root_of_unity(8);
    const Cyclotomic z3 = Cyclotomic::root_of_unity(3);
    const Cyclotomic r2 = Cyclotomic::sqrt_named(2);
    const Cyclotomic r3 = Cyclotomic::sqrt_named(3);
    const Cyclotomic rm3 = Cyclotomic::sqrt_named(-3);
    const Cyclotomic kleinian = (one + Cyclotomic::sqrt_named(-7)) * Cyclotomic(Rational(1, 2));
    return std::vector<std::pair<std::string, std::vector<Cyclotomic>>>{
        {"Z", {one}},
        {"Z[i]", {one, i}},
        {"Z[zeta8]", {one, z8, z8 * z8, z8 * z8 * z8}},
        {"Z[i,sqrt2]", {one, i, r2, i * r2}},
        {"Z[i,2zeta8]", {one, i, Cyclotomic(2) * z8, Cyclotomic(2) * z8 * z8 * z8}},
        {"Z[zeta3]", {one, z3}},
        {"Z[sqrt3]", {one, r3}},
        {"Z[sqrt-3]", {one, rm3}},
        {"Z[(1+sqrt-7)/2]", {one, kleinian}},
        {"Z[i,sqrt3]", {one, i, r3, i * r3}},
    };
  }();
  return rings;
}

CharacterRing ring_from_values(const std::vector<Cyclotomic>& values) {
  std::vector<Cyclotomic> gens{Cyclotomic(1)};
  gens.insert(gens.end(), values.begin(), values.end());
  const long n = common_conductor(gens);
  auto rows = module_rows(gens, n);
  for (int round = 0;; ++round) {
    if (round > 64) throw std::logic_error("character ring: module does not stabilize");
    auto basis = decode_rows(rows, n);
    std::vector<Cyclotomic> next = basis;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = a; b < basis.size(); ++b) next.push_back(basis[a] * basis[b]);
    }
    auto closed = module_rows(next, n);
    if (closed == rows) break;
    rows = std::move(closed);
  }
  CharacterRing ring;
  ring.conductor = n;
  ring.basis = decode_rows(rows, n);
  for (const auto& [name, basis] : reference_rings()) {
    if (same_module(ring.basis, basis)) {
      ring.label = name;
      break;
    }
  }
  return ring;
}

CharacterRing character_ring(const MatrixGroup& g) {
  std::vector<Cyclotomic> traces;
  for (const auto& [tr, count] : g.trace_multiset()) traces.push_back(tr);
  return ring_from_values(traces);
}

std::string HierarchyLevel::to_string() const {
  return level ? std::to_string(*level) : "NotWithin(" + std::to_string(bound) + ")";
}

namespace {

std::vector<GateMatrix> pauli_generators(int dim) {
  if (dim == 4) return gates::pauli2();
  if (dim == 2) return {gates::constant("X"), gates::constant("Z")};
  throw std::invalid_argument("hierarchy: dimension must be 2 or 4");
}

}  // namespace

HierarchyProbe::HierarchyProbe(int dim)
    : dim_(dim),
      paulis_(MatrixGroup::generate(pauli_generators(dim)).elements()),
      level_one_([&] {
        auto gens = pauli_generators(dim);
        gens.push_back(Cyclotomic(i_unit()) * GateMatrix::identity(dim));
        return MatrixGroup::generate(gens);
      }()) {}

bool HierarchyProbe::in_level(const GateMatrix& m, int r) {
  if (m.dim() != dim_) throw std::invalid_argument("hierarchy: dimension mismatch");
  if (r < 1 || r > 15) throw std::invalid_argument("hierarchy: level must be in 1..15");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return in_level_locked(m, r);
}

bool HierarchyProbe::in_level_locked(const GateMatrix& m, int r) {
  if (r == 1) return level_one_.contains(m);
  auto key = m.key();
  auto [it, fresh] = memo_.try_emplace(key);
  if (fresh) it->second.fill(-1);
  auto cached = it->second[static_cast<std::size_t>(r)];
  if (cached >= 0) return cached != 0;
  // Membership at a lower level implies membership here.
  bool member = r > 2 && in_level_locked(m, r - 1);
  if (!member) {
    GateMatrix mdag = m.adjoint();
    member = std::all_of(paulis_.begin(), paulis_.end(), [&](const GateMatrix& p) {
      return in_level_locked(m * p * mdag, r - 1);
    });
  }
  memo_[key][static_cast<std::size_t>(r)] = member ? 1 : 0;
  return member;
}

HierarchyLevel HierarchyProbe::level(const GateMatrix& m, int max_level) {
  if (max_level < 1) throw std::invalid_argument("hierarchy: bound must be positive");
  for (int r = 1; r <= max_level; ++r) {
    if (in_level(m, r)) return {r, max_level};
  }
  return {std::nullopt, max_level};
}

HierarchyLevel HierarchyProbe::group_level(const std::vector<GateMatrix>& gens,
                                           int max_level) {
  HierarchyLevel out{1, max_level};
  for (const auto& g : gens) {
    auto l = level(g, max_level);
    if (!l.level) return l;
    out.level = std::max(*out.level, *l.level);
  }
  return out;
}

Rational frame_potential(const MatrixGroup& g, int t) {
  if (t < 1) throw std::invalid_argument("frame_potential: t must be positive");
  Cyclotomic sum;
  for (const auto& [tr, count] : g.trace_multiset()) {
    sum += Cyclotomic(static_cast<long>(count)) * abs_squared(tr).pow(t);
  }
  auto q = sum.to_rational();
  if (!q) throw std::logic_error("frame_potential: sum is not rational");
  return *q / Rational(static_cast<long>(g.order()));
}

long haar_moment(int t) {
  long f = 1;
  for (int k = 2; k <= t; ++k) f *= k;
  return f;
}

}  // namespace cliffatlas
