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


#include "cliffatlas/group.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>

#include "cliffatlas/number_theory.hpp"

namespace cliffatlas {

namespace {

constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

// Append-only set of fixed-width int64 blocks with open addressing.
class ElementStore {
 public:
  explicit ElementStore(std::size_t stride) : stride_(stride), slots_(1024, kEmpty) {}

  std::size_t size() const { return count_; }
  const std::int64_t* at(std::uint32_t i) const { return data_.data() + i * stride_; }

  std::optional<std::uint32_t> find(const std::int64_t* key) const {
    std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash(key) & mask;; s = (s + 1) & mask) {
      std::uint32_t idx = slots_[s];
      if (idx == kEmpty) return std::nullopt;
      if (std::equal(key, key + stride_, at(idx))) return idx;
    }
  }

  std::pair<std::uint32_t, bool> insert(const std::int64_t* key) {
    if (auto found = find(key)) return {*found, false};
    if (2 * (count_ + 1) > slots_.size()) grow();
    auto idx = static_cast<std::uint32_t>(count_++);
    data_.insert(data_.end(), key, key + stride_);
    place(idx);
    return {idx, true};
  }

 private:
  std::size_t hash(const std::int64_t* key) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < stride_; ++i) {
      h ^= static_cast<std::uint64_t>(key[i]);
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
  void place(std::uint32_t idx) {
    std::size_t mask = slots_.size() - 1;
    std::size_t s = hash(at(idx)) & mask;
    while (slots_[s] != kEmpty) s = (s + 1) & mask;
    slots_[s] = idx;
  }
  void grow() {
    slots_.assign(slots_.size() * 2, kEmpty);
    for (std::uint32_t i = 0; i < count_; ++i) place(i);
  }

  std::size_t stride_;
  std::size_t count_ = 0;
  std::vector<std::int64_t> data_;
  std::vector<std::uint32_t> slots_;
};

// False when m has no exact encoding in d.
bool try_encode(const DenseDomain& d, const GateMatrix& m, std::int64_t* out) {
  if (m.dim() != d.dim() || d.field().conductor() % m.conductor() != 0) return false;
  try {
    d.encode(m, out);
  } catch (const ScaleError&) {
    return false;
  } catch (const std::overflow_error&) {
    return false;
  }
  return true;
}

}  // namespace

namespace {

// Subgroup of a closed group grown one generator at a time, on element indices.
class IndexClosure {
 public:
  explicit IndexClosure(const MatrixGroup& g) : g_(g), in_(g.order(), 0) {
    in_[MatrixGroup::identity_index()] = 1;
    elements_.push_back(MatrixGroup::identity_index());
  }

  /// Adds c as a generator unless it is already a member.
  void add(std::uint32_t c) {
    if (in_[c]) return;
    gens_.push_back(c);
    // Old elements are closed under the old generators.
    const std::size_t old = elements_.size();
    for (std::size_t i = 0; i < old; ++i) push(g_.mul(elements_[i], c));
    for (std::size_t k = old; k < elements_.size(); ++k) {
      for (auto s : gens_) push(g_.mul(elements_[k], s));
    }
  }

  const std::vector<std::uint32_t>& elements() const { return elements_; }
  const std::vector<std::uint32_t>& generators() const { return gens_; }

 private:
  void push(std::uint32_t y) {
    if (!in_[y]) {
      in_[y] = 1;
      elements_.push_back(y);
    }
  }

  const MatrixGroup& g_;
  std::vector<char> in_;
  std::vector<std::uint32_t> elements_;
  std::vector<std::uint32_t> gens_;
};

}  // namespace

struct MatrixGroup::Impl {
  std::shared_ptr<const DenseDomain> domain;
  ElementStore store;
  std::vector<GateMatrix> generators;
  std::vector<std::uint32_t> generator_index;

  mutable std::recursive_mutex mu;
  mutable std::optional<std::vector<std::uint32_t>> inverses;
  mutable std::optional<std::vector<long>> orders;
  mutable std::optional<std::vector<std::vector<std::uint32_t>>> classes;
  mutable std::optional<MatrixGroup> derived;
  mutable std::optional<MatrixGroup> center;
  mutable std::optional<std::vector<std::pair<Cyclotomic, std::size_t>>> traces;

  explicit Impl(std::shared_ptr<const DenseDomain> d)
      : domain(std::move(d)), store(domain->stride()) {}
};

std::string lift_symbol_string(LiftSymbol s) {
  switch (s) {
    case LiftSymbol::Tau:
      return "τ";
    case LiftSymbol::Sigma:
      return "σ";
    case LiftSymbol::None:
      break;
  }
  return "";
}

bool GroupFingerprint::base_equal(const GroupFingerprint& o) const {
  return order == o.order && element_orders == o.element_orders &&
         class_sizes == o.class_sizes && center_order == o.center_order &&
         derived_order == o.derived_order && abelian_invariants == o.abelian_invariants &&
         scalar_order == o.scalar_order;
}

bool GroupFingerprint::structural_equal(const GroupFingerprint& o) const {
  return base_equal(o) && derived_series == o.derived_series &&
         order_class_histogram == o.order_class_histogram &&
         centralizer_profile == o.centralizer_profile;
}

nlohmann::json GroupFingerprint::to_json() const {
  nlohmann::json eo = nlohmann::json::object();
  for (auto [k, v] : element_orders) eo[std::to_string(k)] = v;
  nlohmann::json cs = nlohmann::json::object();
  for (auto [k, v] : class_sizes) cs[std::to_string(k)] = v;
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [k, v] : order_class_histogram) hist.push_back({k.first, k.second, v});
  nlohmann::json cent = nlohmann::json::array();
  for (const auto& [k, v] : centralizer_profile) {
    cent.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), v});
  }
  return {{"order", order},
          {"element_orders", eo},
          {"class_sizes", cs},
          {"center_order", center_order},
          {"derived_order", derived_order},
          {"abelian_invariants", abelian_invariants},
          {"scalar_order", scalar_order},
          {"derived_series", derived_series},
          {"order_class_histogram", hist},
          {"centralizer_profile", cent},
          {"ring_label", ring_label}};
}

std::shared_ptr<MatrixGroup::Impl> MatrixGroup::build(
    std::shared_ptr<const DenseDomain> domain,
    const std::vector<std::vector<std::int64_t>>& gens, std::size_t cap) {
  auto impl = std::make_shared<Impl>(std::move(domain));
  const DenseDomain& d = *impl->domain;
  std::vector<std::int64_t> tmp(d.stride());
  d.identity(tmp.data());
  impl->store.insert(tmp.data());
  for (const auto& g : gens) {
    impl->generator_index.push_back(impl->store.insert(g.data()).first);
  }
  for (std::uint32_t i = 0; i < impl->store.size(); ++i) {
    for (const auto& g : gens) {
      d.mul(impl->store.at(i), g.data(), tmp.data());
      if (impl->store.insert(tmp.data()).second && impl->store.size() > cap) {
        throw ResourceError("group too large or infinite: more than " +
                            std::to_string(cap) + " elements");
      }
    }
  }
  for (const auto& g : gens) impl->generators.push_back(d.decode(g.data()));
  return impl;
}

MatrixGroup MatrixGroup::generate(const std::vector<GateMatrix>& gens, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("generate: empty generator list");
  auto domain = DenseDomain::for_generators(gens);
  for (int attempt = 0; attempt < 24; ++attempt) {
    try {
      std::vector<std::vector<std::int64_t>> raw;
      for (const auto& g : gens) {
        raw.emplace_back(domain->stride());
        domain->encode(g, raw.back().data());
      }
      auto impl = build(domain, raw, cap);
      impl->generators = gens;
      return MatrixGroup(impl);
    } catch (const ScaleError& e) {
      domain = domain->rescaled(e.factor());
    }
  }
  throw ResourceError("generate: entry denominators do not stabilize");
}

MatrixGroup MatrixGroup::subgroup(const std::vector<GateMatrix>& gens,
                                  std::size_t cap) const {
  std::vector<std::vector<std::int64_t>> raw;
  for (const auto& g : gens) {
    raw.emplace_back(impl_->domain->stride());
    if (!try_encode(*impl_->domain, g, raw.back().data())) {
      throw std::invalid_argument("subgroup: generator outside the parent encoding");
    }
  }
  try {
    auto impl = build(impl_->domain, raw, cap);
    impl->generators = gens;
    return MatrixGroup(impl);
  } catch (const ScaleError&) {
    throw std::invalid_argument("subgroup: products leave the parent encoding");
  } catch (const std::overflow_error&) {
    throw std::invalid_argument("subgroup: products leave the parent encoding");
  }
}

MatrixGroup MatrixGroup::subgroup_by_indices(const std::vector<std::uint32_t>& gens) const {
  IndexClosure c(*this);
  for (auto g : gens) c.add(g);
  return wrap(c.elements(), c.generators());
}

MatrixGroup MatrixGroup::subgroup_from_elements(
    const std::vector<std::uint32_t>& elements) const {
  std::vector<char> member(order(), 0);
  for (auto e : elements) member[e] = 1;
  IndexClosure c(*this);
  std::vector<std::uint32_t> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  for (auto x : sorted) c.add(x);
  bool closed = c.elements().size() == sorted.size() &&
                std::all_of(c.elements().begin(), c.elements().end(),
                            [&](std::uint32_t x) { return member[x] != 0; });
  if (!closed) throw std::invalid_argument("subgroup_from_elements: not a subgroup");
  return wrap(c.elements(), c.generators());
}

MatrixGroup MatrixGroup::wrap(const std::vector<std::uint32_t>& elements,
                              const std::vector<std::uint32_t>& gens) const {
  auto impl = std::make_shared<Impl>(impl_->domain);
  for (auto e : elements) impl->store.insert(raw(e));
  for (auto g : gens) {
    impl->generator_index.push_back(*impl->store.find(raw(g)));
    impl->generators.push_back(element(g));
  }
  return MatrixGroup(impl);
}

std::size_t MatrixGroup::order() const { return impl_->store.size(); }
int MatrixGroup::dim() const { return impl_->domain->dim(); }
const std::vector<GateMatrix>& MatrixGroup::generators() const { return impl_->generators; }
const std::vector<std::uint32_t>& MatrixGroup::generator_indices() const {
  return impl_->generator_index;
}
const DenseDomain& MatrixGroup::domain() const { return *impl_->domain; }
const std::int64_t* MatrixGroup::raw(std::uint32_t i) const { return impl_->store.at(i); }

GateMatrix MatrixGroup::element(std::uint32_t i) const {
  return impl_->domain->decode(impl_->store.at(i));
}

std::vector<GateMatrix> MatrixGroup::elements() const {
  std::vector<GateMatrix> out;
  out.reserve(order());
  for (std::uint32_t i = 0; i < order(); ++i) out.push_back(element(i));
  return out;
}

std::optional<std::uint32_t> MatrixGroup::index_of_raw(const std::int64_t* block) const {
  return impl_->store.find(block);
}

std::optional<std::uint32_t> MatrixGroup::index_of(const GateMatrix& m) const {
  std::vector<std::int64_t> tmp(impl_->domain->stride());
  if (!try_encode(*impl_->domain, m, tmp.data())) return std::nullopt;
  return impl_->store.find(tmp.data());
}

bool MatrixGroup::contains(const GateMatrix& m) const { return index_of(m).has_value(); }

bool MatrixGroup::contains_group(const MatrixGroup& h) const {
  if (h.impl_->domain == impl_->domain) {
    for (auto g : h.generator_indices()) {
      if (!index_of_raw(h.raw(g))) return false;
    }
    return true;
  }
  for (const auto& g : h.generators()) {
    if (!contains(g)) return false;
  }
  return true;
}

bool MatrixGroup::same_group(const MatrixGroup& h) const {
  return order() == h.order() && contains_group(h);
}

bool MatrixGroup::is_normal_in(const MatrixGroup& g) const {
  if (!g.contains_group(*this)) return false;
  if (impl_->domain != g.impl_->domain) {
    MatrixGroup embedded = g.subgroup(generators());
    return embedded.order() == order() && embedded.is_normal_in(g);
  }
  const DenseDomain& d = *impl_->domain;
  std::vector<std::int64_t> a(d.stride()), b(d.stride()), ginv(d.stride());
  for (const auto& x : g.generators()) {
    std::vector<std::int64_t> xr(d.stride());
    if (!try_encode(d, x, xr.data())) return false;
    d.adjoint(xr.data(), ginv.data());
    for (auto h : generator_indices()) {
      d.mul(xr.data(), raw(h), a.data());
      d.mul(a.data(), ginv.data(), b.data());
      if (!index_of_raw(b.data())) return false;
    }
  }
  return true;
}

std::uint32_t MatrixGroup::mul(std::uint32_t a, std::uint32_t b) const {
  thread_local std::vector<std::int64_t> tmp;
  tmp.resize(impl_->domain->stride());
  impl_->domain->mul(raw(a), raw(b), tmp.data());
  auto idx = impl_->store.find(tmp.data());
  if (!idx) throw std::logic_error("MatrixGroup::mul: product escaped the group");
  return *idx;
}

std::uint32_t MatrixGroup::inverse(std::uint32_t a) const {
  std::lock_guard<std::recursive_mutex> lock(impl_->mu);
  if (!impl_->inverses) {
    std::vector<std::uint32_t> inv(order());
    std::vector<std::int64_t> tmp(impl_->domain->stride());
    for (std::uint32_t i = 0; i < order(); ++i) {
      impl_->domain->adjoint(raw(i), tmp.data());
      auto idx = impl_->store.find(tmp.data());
      if (!idx) throw std::logic_error("MatrixGroup: group is not closed under adjoint");
      inv[i] = *idx;
    }
    impl_->inverses = std::move(inv);
  }
  return (*impl_->inverses)[a];
}

std::uint32_t MatrixGroup::power(std::uint32_t a, long e) const {
  if (e < 0) return power(inverse(a), -e);
  std::uint32_t result = identity_index(), base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

const std::vector<long>& MatrixGroup::element_orders() const {
  std::lock_guard<std::recursive_mutex> lock(impl_->mu);
  if (!impl_->orders) {
    std::vector<long> ord(order(), 0);
    for (std::uint32_t i = 0; i < order(); ++i) {
      if (ord[i] != 0) continue;
      std::vector<std::uint32_t> powers{i};
      std::uint32_t x = i;
      while (x != identity_index()) {
        x = mul(x, i);
        powers.push_back(x);
      }
      long n = static_cast<long>(powers.size());
      for (long k = 1; k <= n; ++k) {
        auto p = powers[static_cast<std::size_t>(k - 1)];
        if (ord[p] == 0) ord[p] = n / nt::gcd(n, k);
      }
    }
    impl_->orders = std::move(ord);
  }
  return *impl_->orders;
}

long MatrixGroup::element_order(std::uint32_t a) const { return element_orders()[a]; }

const std::vector<std::vector<std::uint32_t>>& MatrixGroup::conjugacy_classes() const {
  std::lock_guard<std::recursive_mutex> lock(impl_->mu);
  if (!impl_->classes) {
    const DenseDomain& d = *impl_->domain;
    std::vector<std::pair<const std::int64_t*, std::vector<std::int64_t>>> conj;
    for (auto g : generator_indices()) {
      std::vector<std::int64_t> gi(d.stride());
      d.adjoint(raw(g), gi.data());
      conj.emplace_back(raw(g), std::move(gi));
    }
    std::vector<char> seen(order(), 0);
    std::vector<std::vector<std::uint32_t>> classes;
    std::vector<std::int64_t> a(d.stride()), b(d.stride());
    for (std::uint32_t x = 0; x < order(); ++x) {
      if (seen[x]) continue;
      std::vector<std::uint32_t> cls{x};
      seen[x] = 1;
      for (std::size_t k = 0; k < cls.size(); ++k) {
        for (const auto& [g, gi] : conj) {
          d.mul(g, raw(cls[k]), a.data());
          d.mul(a.data(), gi.data(), b.data());
          auto y = *index_of_raw(b.data());
          if (!seen[y]) {
            seen[y] = 1;
            cls.push_back(y);
          }
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    impl_->classes = std::move(classes);
  }
  return *impl_->classes;
}

std::vector<std::uint32_t> MatrixGroup::scalar_elements() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < order(); ++i) {
    if (impl_->domain->is_scalar(raw(i))) out.push_back(i);
  }
  return out;
}

LiftClass MatrixGroup::lift() const {
  LiftClass lc;
  lc.scalar_order = static_cast<int>(scalar_elements().size());
  lc.symbol = lc.scalar_order == 4   ? LiftSymbol::Sigma
              : lc.scalar_order == 2 ? LiftSymbol::Tau
                                     : LiftSymbol::None;
  return lc;
}

std::size_t MatrixGroup::projective_order() const {
  return order() / scalar_elements().size();
}

MatrixGroup MatrixGroup::center() const {
  std::lock_guard<std::recursive_mutex> lock(impl_->mu);
  if (!impl_->center) {
    const DenseDomain& d = *impl_->domain;
    std::vector<std::int64_t> a(d.stride()), b(d.stride());
    std::vector<std::uint32_t> members;
    for (std::uint32_t x = 0; x < order(); ++x) {
      bool central = true;
      for (auto g : generator_indices()) {
        d.mul(raw(x), raw(g), a.data());
        d.mul(raw(g), raw(x), b.data());
        if (!d.equal(a.data(), b.data())) {
          central = false;
          break;
        }
      }
      if (central) members.push_back(x);
    }
    impl_->center = subgroup_from_elements(members);
  }
  return *impl_->center;
}

MatrixGroup MatrixGroup::centralizer(std::uint32_t x) const {
  std::vector<std::uint32_t> members;
  for (std::uint32_t y = 0; y < order(); ++y) {
    if (mul(x, y) == mul(y, x)) members.push_back(y);
  }
  return subgroup_from_elements(members);
}

MatrixGroup MatrixGroup::derived_subgroup() const {
  std::lock_guard<std::recursive_mutex> lock(impl_->mu);
  if (!impl_->derived) {
    const auto& gens = generator_indices();
    IndexClosure c(*this);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        auto a = gens[i], b = gens[j];
        c.add(mul(mul(a, b), mul(inverse(a), inverse(b))));
      }
    }
    // Normal closure: conjugates of every generator must lie in the subgroup.
    for (std::size_t k = 0; k < c.generators().size(); ++k) {
      for (auto g : gens) c.add(mul(mul(g, c.generators()[k]), inverse(g)));
    }
    MatrixGroup h = wrap(c.elements(), c.generators());
    impl_->derived = h;
  }
  return *impl_->derived;
}

bool MatrixGroup::is_perfect() const { return derived_subgroup().order() == order(); }

bool MatrixGroup::is_abelian() const { return derived_subgroup().order() == 1; }

std::vector<std::uint32_t> MatrixGroup::coset_labels(const MatrixGroup& n) const {
  const DenseDomain& d = *impl_->domain;
  std::vector<std::uint32_t> label(order(), kEmpty);
  std::vector<std::int64_t> tmp(d.stride());
  std::vector<const std::int64_t*> members;
  for (std::uint32_t k = 0; k < n.order(); ++k) members.push_back(n.raw(k));
  std::uint32_t next = 0;
  for (std::uint32_t x = 0; x < order(); ++x) {
    if (label[x] != kEmpty) continue;
    for (const auto* h : members) {
      d.mul(raw(x), h, tmp.data());
      auto y = index_of_raw(tmp.data());
      if (!y) throw std::invalid_argument("coset_labels: subgroup not contained");
      label[*y] = next;
    }
    ++next;
  }
  return label;
}

std::vector<long> MatrixGroup::abelian_invariants() const {
  MatrixGroup dg = derived_subgroup();
  auto label = coset_labels(dg);
  std::uint32_t k = *std::max_element(label.begin(), label.end()) + 1;
  // Order of each coset in the abelian quotient.
  std::vector<long> qorder(k, 0);
  std::vector<char> in_derived(order(), 0);
  for (std::uint32_t x = 0; x < order(); ++x) {
    if (label[x] == label[identity_index()]) in_derived[x] = 1;
  }
  for (std::uint32_t x = 0; x < order(); ++x) {
    if (qorder[label[x]] != 0) continue;
    long m = 1;
    std::uint32_t y = x;
    while (!in_derived[y]) {
      y = mul(y, x);
      ++m;
    }
    qorder[label[x]] = m;
  }
  std::vector<long> factors;
  std::map<long, std::vector<int>> exps;  // prime -> exponents of cyclic factors
  for (const auto& pp : nt::factorize(static_cast<long>(k))) {
    // s_j = log_p #{q : q^(p^j) = 1}; factors with exponent >= j number s_j - s_{j-1}.
    std::vector<int> s{0};
    for (int j = 1; j <= pp.exponent; ++j) {
      long pj = 1;
      for (int t = 0; t < j; ++t) pj *= pp.prime;
      long count = 0;
      for (long o : qorder) count += (pj % o == 0);
      int lg = 0;
      while (count > 1) {
        count /= pp.prime;
        ++lg;
      }
      s.push_back(lg);
    }
    std::vector<int> e;
    for (int j = 1; j <= pp.exponent; ++j) {
      int at_least_j = s[j] - s[j - 1];
      for (int t = 0; t < at_least_j; ++t) {
        if (static_cast<int>(e.size()) <= t) e.push_back(0);
        e[t] = j;
      }
    }
    exps[pp.prime] = e;
  }
  std::size_t width = 0;
  for (const auto& [p, e] : exps) width = std::max(width, e.size());
  for (std::size_t t = 0; t < width; ++t) {
    long f = 1;
    for (const auto& [p, e] : exps) {
      if (t < e.size()) {
        for (int j = 0; j < e[t]; ++j) f *= p;
      }
    }
    factors.push_back(f);
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

std::vector<std::uint64_t> MatrixGroup::derived_series() const {
  std::vector<std::uint64_t> out{order()};
  MatrixGroup g = *this;
  while (true) {
    MatrixGroup next = g.derived_subgroup();
    if (next.order() == g.order()) break;
    out.push_back(next.order());
    g = next;
  }
  return out;
}

GroupFingerprint MatrixGroup::fingerprint() const {
  GroupFingerprint fp;
  fp.order = order();
  const auto& ord = element_orders();
  for (long o : ord) ++fp.element_orders[o];
  for (const auto& cls : conjugacy_classes()) {
    long size = static_cast<long>(cls.size());
    ++fp.class_sizes[size];
    ++fp.order_class_histogram[{ord[cls.front()], size}];
    auto inv = size == 1 ? std::vector<long>{} : centralizer(cls.front()).abelian_invariants();
    ++fp.centralizer_profile[{ord[cls.front()], size, std::move(inv)}];
  }
  fp.center_order = center().order();
  fp.derived_order = derived_subgroup().order();
  fp.abelian_invariants = abelian_invariants();
  fp.scalar_order = static_cast<long>(scalar_elements().size());
  fp.derived_series = derived_series();
  return fp;
}

const std::vector<std::pair<Cyclotomic, std::size_t>>& MatrixGroup::trace_multiset() const {
  std::lock_guard<std::recursive_mutex> lock(impl_->mu);
  if (!impl_->traces) {
    const DenseDomain& d = *impl_->domain;
    std::map<std::vector<std::int64_t>, std::size_t> counts;
    std::vector<std::int64_t> t(static_cast<std::size_t>(d.degree()));
    for (std::uint32_t x = 0; x < order(); ++x) {
      d.trace(raw(x), t.data());
      ++counts[t];
    }
    std::vector<std::pair<Cyclotomic, std::size_t>> out;
    for (const auto& [num, c] : counts) out.emplace_back(d.field().decode(num.data()), c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.first.to_string() < b.first.to_string();
    });
    impl_->traces = std::move(out);
  }
  return *impl_->traces;
}

}  // namespace cliffatlas
