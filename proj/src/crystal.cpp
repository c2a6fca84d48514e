#include "moncrystal/crystal.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <mutex>
#include <tuple>
#include <unordered_set>

#include "moncrystal/error.hpp"

namespace moncrystal {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

}  // namespace

Crystal::Crystal(const DynkinDiagram& d, std::vector<Monomial> elements)
    : diagram_(d), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());

  const auto n = static_cast<std::size_t>(d.rank());
  index_.reserve(elements_.size());
  for (std::size_t v = 0; v < elements_.size(); ++v) index_.emplace(elements_[v], v);

  f_adj_.assign(elements_.size(), std::vector<std::size_t>(n, npos));
  e_adj_.assign(elements_.size(), std::vector<std::size_t>(n, npos));
  element_weights_.reserve(elements_.size());

  for (std::size_t v = 0; v < elements_.size(); ++v) {
    const Monomial& p = elements_[v];
    bool is_highest = true;
    for (Node i = 1; i <= d.rank(); ++i) {
      if (auto q = f_tilde(d, p, i)) {
        if (auto it = index_.find(*q); it != index_.end()) {
          f_adj_[v][static_cast<std::size_t>(i - 1)] = it->second;
          edges_.push_back({v, i, it->second});
        } else {
          closed_ = false;
        }
      }
      if (auto q = e_tilde(d, p, i)) {
        is_highest = false;
        if (auto it = index_.find(*q); it != index_.end())
          e_adj_[v][static_cast<std::size_t>(i - 1)] = it->second;
        else
          closed_ = false;
      }
    }
    if (is_highest) highest_.push_back(v);
    element_weights_.push_back(weight(d, p));
    weights_[element_weights_.back()].push_back(v);
  }
}

std::optional<std::size_t> Crystal::index_of(const Monomial& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Crystal::f_target(std::size_t v, Node i) const {
  std::size_t t = f_adj_.at(v).at(static_cast<std::size_t>(i - 1));
  if (t == npos) return std::nullopt;
  return t;
}

std::optional<std::size_t> Crystal::e_target(std::size_t v, Node i) const {
  std::size_t t = e_adj_.at(v).at(static_cast<std::size_t>(i - 1));
  if (t == npos) return std::nullopt;
  return t;
}

Crystal Crystal::translated(int delta) const {
  // A uniform shift of k preserves the element order, so the index
  // structure carries over unchanged.
  Crystal out = *this;
  out.index_.clear();
  for (std::size_t v = 0; v < out.elements_.size(); ++v) {
    out.elements_[v] = elements_[v].translated(delta);
    out.index_.emplace(out.elements_[v], v);
  }
  return out;
}

Crystal generate_closure(const DynkinDiagram& d, const std::vector<Monomial>& seeds,
                         std::size_t cap) {
  std::unordered_set<Monomial, MonomialHash> seen;
  std::deque<Monomial> queue;
  for (const Monomial& s : seeds) {
    if (!s.parity_valid(d))
      throw ParityViolation("seed " + to_string(s) + " is not parity-valid for " + d.name());
    if (seen.insert(s).second) queue.push_back(s);
  }
  if (seen.size() > cap) throw CapExceeded("closure exceeds cap of " + std::to_string(cap));

  while (!queue.empty()) {
    Monomial p = std::move(queue.front());
    queue.pop_front();
    for (Node i = 1; i <= d.rank(); ++i) {
      for (auto q : {f_tilde(d, p, i), e_tilde(d, p, i)}) {
        if (!q || !seen.insert(*q).second) continue;
        if (seen.size() > cap) throw CapExceeded("closure exceeds cap of " + std::to_string(cap));
        queue.push_back(std::move(*q));
      }
    }
  }
  return Crystal(d, std::vector<Monomial>(seen.begin(), seen.end()));
}

const Crystal& fundamental_base(const DynkinDiagram& d, Node i) {
  static std::mutex mutex;
  static std::map<std::tuple<std::string, bool, Node>, std::unique_ptr<Crystal>> cache;

  if (i < 1 || i > d.rank())
    throw InvalidDiagram("node " + std::to_string(i) + " not in " + d.name());
  auto key = std::make_tuple(d.name(), d.flipped_parity(), i);
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto c = std::make_unique<Crystal>(generate_closure(d, {Monomial::y(i, d.parity(i))}));
    it = cache.emplace(key, std::move(c)).first;
  }
  return *it->second;
}

Crystal fundamental(const DynkinDiagram& d, Node i, int c) {
  if (!d.same_parity(i, c))
    throw ParityViolation("B(varpi_" + std::to_string(i) + ", " + std::to_string(c) +
                          "): parameter has the wrong parity");
  return fundamental_base(d, i).translated(c - d.parity(i));
}

std::size_t tensor_product_size(const DynkinDiagram& d, const ParamSet& R) {
  std::size_t n = 1;
  for (const auto& [i, m] : R.R().entries()) {
    const std::size_t f = fundamental_base(d, i).size();
    for (std::size_t r = 0; r < m.size(); ++r) n *= f;
  }
  return n;
}

Crystal product_crystal(const DynkinDiagram& d, const ParamSet& R, std::size_t cap) {
  std::vector<Monomial> current{Monomial{}};
  std::size_t insertions = 0;
  for (const auto& [i, m] : R.R().entries()) {
    for (int c : m.values()) {
      const Crystal factor = fundamental(d, i, c);
      insertions += current.size() * factor.size();
      if (insertions > cap)
        throw CapExceeded("product crystal exceeds cap of " + std::to_string(cap) + " insertions");
      std::unordered_set<Monomial, MonomialHash> next;
      next.reserve(current.size() * factor.size());
      for (const Monomial& a : current)
        for (const Monomial& b : factor.elements()) next.insert(a * b);
      current.assign(next.begin(), next.end());
    }
  }
  return Crystal(d, std::move(current));
}

std::vector<Monomial> weight_space(const Crystal& c, const WeightVec& mu) {
  std::vector<Monomial> out;
  auto it = c.weight_index().find(mu);
  if (it == c.weight_index().end()) return out;
  for (std::size_t v : it->second) out.push_back(c.elements()[v]);
  return out;
}

Crystal connected_component(const Crystal& c, const Monomial& p) {
  auto start = c.index_of(p);
  if (!start) throw NotAnElement(to_string(p) + " is not an element of the crystal");
  std::vector<bool> seen(c.size(), false);
  std::vector<std::size_t> stack{*start};
  seen[*start] = true;
  std::vector<Monomial> members;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    members.push_back(c.elements()[v]);
    for (Node i = 1; i <= c.diagram().rank(); ++i) {
      for (auto t : {c.f_target(v, i), c.e_target(v, i)}) {
        if (t && !seen[*t]) {
          seen[*t] = true;
          stack.push_back(*t);
        }
      }
    }
  }
  return Crystal(c.diagram(), std::move(members));
}

int fundamental_span(const DynkinDiagram& d, const std::vector<Node>& nodes) {
  int span = 0;
  for (Node i : nodes) {
    const Crystal& b = fundamental_base(d, i);
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (const Monomial& p : b.elements()) {
      for (const Term& t : p.terms()) {
        lo = std::min(lo, t.k);
        hi = std::max(hi, t.k);
      }
    }
    if (lo <= hi) span = std::max(span, hi - lo);
  }
  return span;
}

ParamClassification classify_params(const DynkinDiagram& d, const ParamSet& R, std::size_t cap) {
  ParamClassification out;
  const Crystal b = product_crystal(d, R, cap);
  out.crystal_size = b.size();
  out.tensor_size = tensor_product_size(d, R);
  out.component_size = connected_component(b, y_product(R.R())).size();
  out.generic = out.crystal_size == out.tensor_size;
  out.maximally_singular = out.component_size == out.crystal_size;

  std::vector<Node> used;
  std::vector<int> params;
  for (const auto& [i, m] : R.R().entries()) {
    used.push_back(i);
    for (int c : m.values()) params.push_back(c);
  }
  for (Node i = 1; i <= d.rank(); ++i)
    out.gap_bound_height = std::max(out.gap_bound_height, twice_height_of_fundamental(d, i));
  out.gap_bound_span = fundamental_span(d, used);
  out.gap_bound = std::max(out.gap_bound_height, out.gap_bound_span);

  std::sort(params.begin(), params.end());
  out.well_spaced = true;
  for (std::size_t p = 1; p < params.size(); ++p)
    if (params[p] - params[p - 1] <= out.gap_bound) out.well_spaced = false;
  return out;
}

Monomial minuscule_monomial(const DynkinDiagram& d, const OrbitElement& g, int c) {
  std::vector<Term> terms;
  for (Node j = 1; j <= d.rank(); ++j) {
    const int pairing = g.gamma.at(j);
    if (pairing == 0) continue;
    // w^{-1} alpha_j with w = s_{word[last]} ... s_{word[0]}.
    RootVec beta = simple_root(d, j);
    for (auto it = g.word.rbegin(); it != g.word.rend(); ++it) beta = reflect(d, *it, beta);
    const int h = std::abs(height(d, beta));
    terms.push_back({j, c - h + pairing, pairing});
  }
  return Monomial::from_terms(std::move(terms));
}

TauCheck tau_check(const DynkinDiagram& d, const OrbitElement& g, int c) {
  MultisetTuple R;
  R.add(g.base, c);
  const MultisetTuple S = decompose_S(d, R, minuscule_monomial(d, g, c));

  TauCheck out;
  out.twice_tau = RootVec(static_cast<std::size_t>(d.rank()));
  for (const auto& [j, m] : S.entries())
    for (auto [k, mult] : m.entries()) out.twice_tau.at(j) += k * mult;

  const RootVec drop = weight_to_root(d, fundamental_weight(d, g.base) - g.gamma);
  out.rhs = (c - 1) * drop + chi(d, g);
  out.holds = out.twice_tau == out.rhs;
  return out;
}

}  // namespace moncrystal
