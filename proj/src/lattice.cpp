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


#include "cliffatlas/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace cliffatlas {

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::uint32_t> ElementSet::members() const {
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    for (auto w = words_[k]; w != 0; w &= w - 1) {
      out.push_back(static_cast<std::uint32_t>(k * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

std::size_t ElementSet::hash() const {
  std::size_t h = size_;
  for (auto w : words_) h = h * 0x9e3779b97f4a7c15ULL ^ (w + (h >> 17));
  return h;
}

namespace {

struct SetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Smallest prime p with order(x) a power of p, or 0.
long prime_power_base(long order) {
  if (order < 2) return 0;
  long p = 2;
  while (order % p != 0) ++p;
  while (order % p == 0) order /= p;
  return order == 1 ? p : 0;
}

}  // namespace

TableGroup::TableGroup(std::vector<std::uint32_t> table, std::size_t n,
                       std::uint32_t identity, std::vector<std::uint32_t> generators)
    : table_(std::move(table)),
      n_(n),
      identity_(identity),
      inverse_(n),
      orders_(n, 0),
      generators_(std::move(generators)) {
  if (table_.size() != n * n) throw std::invalid_argument("TableGroup: table size");
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t x = a;
    long k = 1;
    std::uint32_t prev = identity_;
    while (x != identity_) {
      prev = x;
      x = mul(x, a);
      ++k;
      if (k > static_cast<long>(n)) throw std::invalid_argument("TableGroup: not a group");
    }
    orders_[a] = k;
    inverse_[a] = (a == identity_) ? identity_ : prev;
  }
}

ElementSet TableGroup::closure(const std::vector<std::uint32_t>& gens) const {
  ElementSet set(n_);
  std::vector<std::uint32_t> list{identity_};
  set.insert(identity_);
  for (std::size_t k = 0; k < list.size(); ++k) {
    for (auto g : gens) {
      auto y = mul(list[k], g);
      if (!set.contains(y)) {
        set.insert(y);
        list.push_back(y);
      }
    }
  }
  return set;
}

ElementSet TableGroup::conjugate(const ElementSet& members, std::uint32_t g) const {
  ElementSet out(n_);
  auto gi = inverse(g);
  for (auto x : members.members()) out.insert(mul(mul(g, x), gi));
  return out;
}

bool TableGroup::is_perfect(const std::vector<std::uint32_t>& gens,
                            const ElementSet& members) const {
  std::vector<std::uint32_t> comm;
  for (auto a : gens) {
    for (auto b : gens) {
      comm.push_back(mul(mul(a, b), mul(inverse(a), inverse(b))));
    }
  }
  ElementSet derived = closure(comm);
  const std::size_t target = members.count();
  while (derived.count() < target) {
    bool grew = false;
    for (auto g : gens) {
      ElementSet c = conjugate(derived, g);
      if (c != derived) {
        for (auto x : c.members()) {
          if (!derived.contains(x)) comm.push_back(x);
        }
        derived = closure(comm);
        grew = true;
        break;
      }
    }
    if (!grew) return false;
  }
  return true;
}

SubgroupLattice all_subgroups(const TableGroup& g) {
  const auto n = static_cast<std::uint32_t>(g.order());
  std::vector<TableSubgroup> found;
  std::unordered_map<ElementSet, std::size_t, SetHash> index;
  auto add = [&](ElementSet members, std::vector<std::uint32_t> gens) {
    auto [it, fresh] = index.emplace(members, found.size());
    if (fresh) found.push_back({std::move(members), std::move(gens)});
    return fresh;
  };
  auto add_with_conjugates = [&](const TableSubgroup& s) {
    std::vector<TableSubgroup> orbit{s};
    if (!add(s.members, s.generators)) return;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (auto x : g.generators()) {
        TableSubgroup c{g.conjugate(orbit[k].members, x), {}};
        auto xi = g.inverse(x);
        for (auto y : orbit[k].generators) c.generators.push_back(g.mul(g.mul(x, y), xi));
        if (add(c.members, c.generators)) orbit.push_back(std::move(c));
      }
    }
  };

  add(g.closure({}), {});

  // Perfect subgroups cannot be reached by cyclic extension, so they are
  // seeded from two-generated subgroups and their joins.
  std::vector<std::uint32_t> class_reps;
  {
    ElementSet seen(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      if (seen.contains(x)) continue;
      class_reps.push_back(x);
      std::vector<std::uint32_t> cls{x};
      seen.insert(x);
      for (std::size_t k = 0; k < cls.size(); ++k) {
        for (auto y : g.generators()) {
          auto c = g.mul(g.mul(y, cls[k]), g.inverse(y));
          if (!seen.contains(c)) {
            seen.insert(c);
            cls.push_back(c);
          }
        }
      }
    }
  }
  std::vector<TableSubgroup> perfect;
  {
    std::unordered_map<ElementSet, bool, SetHash> tested;
    for (auto x : class_reps) {
      if (x == g.identity()) continue;
      for (std::uint32_t y = 0; y < n; ++y) {
        std::vector<std::uint32_t> gens{x, y};
        ElementSet h = g.closure(gens);
        if (tested.count(h)) continue;
        bool p = g.is_perfect(gens, h);
        tested.emplace(h, p);
        if (p) perfect.push_back({h, gens});
      }
    }
    for (std::size_t a = 0; a < perfect.size(); ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        auto gens = perfect[a].generators;
        gens.insert(gens.end(), perfect[b].generators.begin(), perfect[b].generators.end());
        ElementSet h = g.closure(gens);
        if (tested.emplace(h, true).second) perfect.push_back({h, gens});
      }
    }
  }
  for (const auto& p : perfect) add_with_conjugates(p);

  std::vector<long> base(n);
  for (std::uint32_t x = 0; x < n; ++x) base[x] = prime_power_base(g.element_order(x));

  for (std::size_t k = 0; k < found.size(); ++k) {
    const ElementSet u = found[k].members;
    const std::vector<std::uint32_t> ugens = found[k].generators;
    const auto umembers = u.members();
    ElementSet done = u;
    for (std::uint32_t z = 0; z < n; ++z) {
      if (done.contains(z) || base[z] == 0) continue;
      const long p = base[z];
      std::uint32_t zp = g.identity();
      for (long i = 0; i < p; ++i) zp = g.mul(zp, z);
      if (!u.contains(zp)) continue;
      const auto zi = g.inverse(z);
      bool normalizes = std::all_of(ugens.begin(), ugens.end(), [&](std::uint32_t y) {
        return u.contains(g.mul(g.mul(z, y), zi));
      });
      if (!normalizes) continue;
      ElementSet v(n);
      std::uint32_t zk = g.identity();
      for (long i = 0; i < p; ++i) {
        for (auto y : umembers) {
          auto w = g.mul(zk, y);
          v.insert(w);
          done.insert(w);
        }
        zk = g.mul(zk, z);
      }
      auto vgens = ugens;
      vgens.push_back(z);
      add(std::move(v), std::move(vgens));
    }
  }

  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::vector<std::uint32_t>> keys(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) keys[i] = found[i].members.members();
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (keys[a].size() != keys[b].size()) return keys[a].size() < keys[b].size();
    return keys[a] < keys[b];
  });
  SubgroupLattice out;
  std::unordered_map<ElementSet, std::size_t, SetHash> position;
  for (auto i : perm) {
    position.emplace(found[i].members, out.subgroups.size());
    out.subgroups.push_back(std::move(found[i]));
  }

  UnionFind uf(out.subgroups.size());
  for (std::size_t i = 0; i < out.subgroups.size(); ++i) {
    for (auto x : g.generators()) {
      uf.unite(i, position.at(g.conjugate(out.subgroups[i].members, x)));
    }
  }
  std::unordered_map<std::size_t, std::size_t> class_of_root;
  for (std::size_t i = 0; i < out.subgroups.size(); ++i) {
    auto [it, fresh] = class_of_root.emplace(uf.find(i), out.classes.size());
    if (fresh) out.classes.emplace_back();
    out.classes[it->second].push_back(i);
  }
  return out;
}

std::shared_ptr<const CosetQuotient> CosetQuotient::build(const MatrixGroup& g,
                                                          const MatrixGroup& n,
                                                          std::size_t max_index) {
  if (g.order() % n.order() != 0) {
    throw std::invalid_argument("quotient: order does not divide the parent order");
  }
  const std::size_t k = g.order() / n.order();
  if (k > max_index) {
    throw ResourceError("quotient of index " + std::to_string(k) +
                        " exceeds the limit " + std::to_string(max_index));
  }
  MatrixGroup normal = (&n.domain() == &g.domain()) ? n : g.subgroup(n.generators());
  if (normal.order() != n.order() || !normal.is_normal_in(g)) {
    throw std::invalid_argument("quotient: subgroup is not normal in the parent");
  }
  auto first_seen = g.coset_labels(normal);
  std::vector<std::uint32_t> best(k, std::numeric_limits<std::uint32_t>::max());
  const DenseDomain& d = g.domain();
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    auto& b = best[first_seen[x]];
    if (b == std::numeric_limits<std::uint32_t>::max() || d.less(g.raw(x), g.raw(b))) b = x;
  }
  std::vector<std::uint32_t> order(k);
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return d.less(g.raw(best[a]), g.raw(best[b]));
  });
  std::vector<std::uint32_t> relabel(k);
  std::vector<std::uint32_t> reps(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    relabel[order[i]] = i;
    reps[i] = best[order[i]];
  }
  std::vector<std::uint32_t> label(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) label[x] = relabel[first_seen[x]];

  std::vector<std::uint32_t> table(k * k);
  std::vector<std::int64_t> tmp(d.stride());
  for (std::uint32_t a = 0; a < k; ++a) {
    for (std::uint32_t b = 0; b < k; ++b) {
      d.mul(g.raw(reps[a]), g.raw(reps[b]), tmp.data());
      table[a * k + b] = label[*g.index_of_raw(tmp.data())];
    }
  }
  std::vector<std::uint32_t> gens;
  const std::uint32_t identity = label[MatrixGroup::identity_index()];
  for (auto gi : g.generator_indices()) {
    auto q = label[gi];
    if (q != identity && std::find(gens.begin(), gens.end(), q) == gens.end()) {
      gens.push_back(q);
    }
  }
  return std::make_shared<const CosetQuotient>(CosetQuotient{
      g, normal, std::move(label), std::move(reps),
      TableGroup(std::move(table), k, identity, std::move(gens))});
}

std::vector<std::uint32_t> IntermediateSubgroup::generator_indices() const {
  std::vector<std::uint32_t> out;
  const auto& q = *quotient_;
  for (auto gi : q.normal.generator_indices()) {
    out.push_back(*q.parent.index_of_raw(q.normal.raw(gi)));
  }
  for (auto c : image_.generators) out.push_back(q.representative[c]);
  return out;
}

MatrixGroup IntermediateSubgroup::materialize() const {
  return quotient_->parent.subgroup_by_indices(generator_indices());
}

IntermediateLattice intermediate_lattice(const MatrixGroup& g, const MatrixGroup& n,
                                         std::size_t max_index) {
  IntermediateLattice out;
  out.quotient = CosetQuotient::build(g, n, max_index);
  SubgroupLattice lattice = all_subgroups(out.quotient->group);
  for (auto& s : lattice.subgroups) out.subgroups.emplace_back(out.quotient, std::move(s));
  out.classes = std::move(lattice.classes);
  return out;
}

std::size_t IntermediateLattice::strictly_between() const {
  return subgroups.size() < 2 ? 0 : subgroups.size() - 2;
}

std::vector<IntermediateSubgroup> intermediate_subgroups(const MatrixGroup& g,
                                                         const MatrixGroup& n,
                                                         std::size_t max_index) {
  auto lattice = intermediate_lattice(g, n, max_index);
  if (lattice.subgroups.size() < 2) return {};
  return {lattice.subgroups.begin() + 1, lattice.subgroups.end() - 1};
}

}  // namespace cliffatlas
