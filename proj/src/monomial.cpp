#include "moncrystal/monomial.hpp"

#include <algorithm>
#include <sstream>

#include "moncrystal/error.hpp"

namespace moncrystal {

// ---- Multiset ---------------------------------------------------------------

Multiset::Multiset(std::initializer_list<int> values) {
  for (int v : values) add(v);
}

Multiset::Multiset(const std::vector<int>& values) {
  for (int v : values) add(v);
}

int Multiset::count(int k) const {
  auto it = counts_.find(k);
  return it == counts_.end() ? 0 : it->second;
}

void Multiset::add(int k, int mult) {
  if (mult == 0) return;
  if (mult < 0) {
    remove(k, -mult);
    return;
  }
  counts_[k] += mult;
  size_ += static_cast<std::size_t>(mult);
}

void Multiset::remove(int k, int mult) {
  if (mult == 0) return;
  auto it = counts_.find(k);
  if (it == counts_.end() || it->second < mult)
    throw ContainmentViolation("multiset does not contain " + std::to_string(mult) + " copies of " +
                               std::to_string(k));
  it->second -= mult;
  size_ -= static_cast<std::size_t>(mult);
  if (it->second == 0) counts_.erase(it);
}

std::vector<int> Multiset::values() const {
  std::vector<int> out;
  out.reserve(size_);
  for (auto [k, c] : counts_)
    for (int r = 0; r < c; ++r) out.push_back(k);
  return out;
}

std::optional<int> Multiset::min() const {
  if (counts_.empty()) return std::nullopt;
  return counts_.begin()->first;
}

std::optional<int> Multiset::max() const {
  if (counts_.empty()) return std::nullopt;
  return counts_.rbegin()->first;
}

Multiset Multiset::shifted(int delta) const {
  Multiset out;
  for (auto [k, c] : counts_) out.add(k + delta, c);
  return out;
}

Multiset& Multiset::operator+=(const Multiset& o) {
  for (auto [k, c] : o.counts_) add(k, c);
  return *this;
}

Multiset Multiset::minus(const Multiset& o) const {
  Multiset out = *this;
  for (auto [k, c] : o.counts_) out.remove(k, c);
  return out;
}

bool Multiset::contains(const Multiset& o) const {
  for (auto [k, c] : o.counts_)
    if (count(k) < c) return false;
  return true;
}

// ---- MultisetTuple ----------------------------------------------------------

MultisetTuple::MultisetTuple(std::initializer_list<std::pair<const Node, Multiset>> init) {
  for (const auto& [i, m] : init) set(i, m);
}

const Multiset& MultisetTuple::at(Node i) const {
  static const Multiset empty;
  auto it = sets_.find(i);
  return it == sets_.end() ? empty : it->second;
}

void MultisetTuple::set(Node i, Multiset m) {
  if (m.empty())
    sets_.erase(i);
  else
    sets_[i] = std::move(m);
}

void MultisetTuple::add(Node i, int k, int mult) {
  Multiset m = at(i);
  m.add(k, mult);
  set(i, std::move(m));
}

std::size_t MultisetTuple::total_size() const {
  std::size_t n = 0;
  for (const auto& [i, m] : sets_) n += m.size();
  return n;
}

// ---- ParamSet ---------------------------------------------------------------

ParamSet::ParamSet(const DynkinDiagram& d, MultisetTuple r)
    : r_(std::move(r)), lambda_(static_cast<std::size_t>(d.rank())) {
  for (const auto& [i, m] : r_.entries()) {
    if (i < 1 || i > d.rank())
      throw InvalidDiagram("parameter node " + std::to_string(i) + " not in " + d.name());
    for (auto [k, c] : m.entries()) {
      if (!d.same_parity(i, k))
        throw ParityViolation("parameter " + std::to_string(k) + " at node " + std::to_string(i) +
                              " has the wrong parity");
    }
    lambda_.at(i) = static_cast<int>(m.size());
  }
}

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::y(Node i, int k, int exp) {
  Monomial m;
  if (exp != 0) m.terms_.push_back({i, k, exp});
  return m;
}

Monomial Monomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return std::tie(a.node, a.k) < std::tie(b.node, b.k);
  });
  Monomial m;
  for (const Term& t : terms) {
    if (!m.terms_.empty() && m.terms_.back().node == t.node && m.terms_.back().k == t.k)
      m.terms_.back().exp += t.exp;
    else
      m.terms_.push_back(t);
    if (m.terms_.back().exp == 0) m.terms_.pop_back();
  }
  return m;
}

int Monomial::exponent(Node i, int k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{i, k, 0},
                             [](const Term& a, const Term& b) {
                               return std::tie(a.node, a.k) < std::tie(b.node, b.k);
                             });
  if (it != terms_.end() && it->node == i && it->k == k) return it->exp;
  return 0;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int e) const {
  Monomial m;
  if (e == 0) return m;
  m.terms_ = terms_;
  for (auto& t : m.terms_) t.exp *= e;
  return m;
}

Monomial Monomial::translated(int delta) const {
  Monomial m = *this;
  for (auto& t : m.terms_) t.k += delta;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto& t = out.terms_;
  t.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() ||
        (ia != a.terms_.end() && std::tie(ia->node, ia->k) < std::tie(ib->node, ib->k))) {
      t.push_back(*ia++);
    } else if (ia == a.terms_.end() || std::tie(ib->node, ib->k) < std::tie(ia->node, ia->k)) {
      t.push_back(*ib++);
    } else {
      int e = ia->exp + ib->exp;
      if (e != 0) t.push_back({ia->node, ia->k, e});
      ++ia;
      ++ib;
    }
  }
  return out;
}

bool Monomial::parity_valid(const DynkinDiagram& d) const {
  for (const Term& t : terms_)
    if (t.node < 1 || t.node > d.rank() || !d.same_parity(t.node, t.k)) return false;
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const Term& t : m.terms()) {
    std::size_t v = (static_cast<std::size_t>(static_cast<unsigned>(t.node)) << 48) ^
                    (static_cast<std::size_t>(static_cast<unsigned>(t.k)) << 16) ^
                    static_cast<std::size_t>(static_cast<unsigned>(t.exp));
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

Monomial z_unchecked(const DynkinDiagram& d, Node i, int k) {
  std::vector<Term> terms{{i, k, 1}, {i, k + 2, 1}};
  for (Node j : d.neighbors(i)) terms.push_back({j, k + 1, -1});
  return Monomial::from_terms(std::move(terms));
}

}  // namespace

Monomial z_factor(const DynkinDiagram& d, Node i, int k) {
  if (!d.same_parity(i, k))
    throw ParityViolation("z_{" + std::to_string(i) + "," + std::to_string(k) +
                          "}: index has the wrong parity");
  return z_unchecked(d, i, k);
}

Monomial z_product(const DynkinDiagram& d, const MultisetTuple& S) {
  std::vector<Term> terms;
  for (const auto& [i, m] : S.entries()) {
    for (auto [k, c] : m.entries()) {
      terms.push_back({i, k, c});
      terms.push_back({i, k + 2, c});
      for (Node j : d.neighbors(i)) terms.push_back({j, k + 1, -c});
    }
  }
  return Monomial::from_terms(std::move(terms));
}

Monomial y_product(const MultisetTuple& S) {
  std::vector<Term> terms;
  for (const auto& [i, m] : S.entries())
    for (auto [k, c] : m.entries()) terms.push_back({i, k, c});
  return Monomial::from_terms(std::move(terms));
}

WeightVec weight(const DynkinDiagram& d, const Monomial& p) {
  WeightVec w(static_cast<std::size_t>(d.rank()));
  for (const Term& t : p.terms()) w.at(t.node) += t.exp;
  return w;
}

EpsPhi eps_phi(const Monomial& p, Node i) {
  auto first = std::find_if(p.terms().begin(), p.terms().end(),
                            [&](const Term& t) { return t.node == i; });
  auto last = std::find_if(first, p.terms().end(), [&](const Term& t) { return t.node != i; });

  EpsPhi r;
  int prefix = 0;
  for (auto it = first; it != last; ++it) {
    prefix += it->exp;
    if (-prefix > r.eps) {
      r.eps = -prefix;
      r.k_eps = it->k;
    }
  }
  int suffix = 0;
  for (auto it = last; it != first;) {
    --it;
    suffix += it->exp;
    if (suffix > r.phi) {
      r.phi = suffix;
      r.k_phi = it->k;
    }
  }
  return r;
}

std::optional<Monomial> e_tilde(const DynkinDiagram& d, const Monomial& p, Node i) {
  EpsPhi ep = eps_phi(p, i);
  if (ep.eps == 0) return std::nullopt;
  return z_unchecked(d, i, ep.k_eps) * p;
}

std::optional<Monomial> f_tilde(const DynkinDiagram& d, const Monomial& p, Node i) {
  EpsPhi ep = eps_phi(p, i);
  if (ep.phi == 0) return std::nullopt;
  return z_unchecked(d, i, ep.k_phi - 2).inverse() * p;
}

MultisetTuple decompose_S(const DynkinDiagram& d, const MultisetTuple& R, const Monomial& p) {
  const Monomial target = y_product(R) * p.inverse();  // = z_S
  MultisetTuple S;
  if (target.is_one()) return S;

  int lo = target.terms().front().k;
  int hi = lo;
  for (const Term& t : target.terms()) {
    lo = std::min(lo, t.k);
    hi = std::max(hi, t.k);
  }
  // e_{i,k} = S_i(k) + S_i(k-2) - sum_{j~i} S_j(k-1), solved bottom-up.
  // Every element s of S_i forces a nonzero exponent at k = s + 2, so the
  // support of S lies in [lo, hi - 2].
  for (int k = lo; k <= hi - 2; ++k) {
    for (Node i = 1; i <= d.rank(); ++i) {
      int v = target.exponent(i, k) - S.count(i, k - 2);
      for (Node j : d.neighbors(i)) v += S.count(j, k - 1);
      if (v < 0)
        throw NotDecomposable("monomial " + to_string(p) + " is not of the form y_R z_S^-1");
      if (v > 0) S.add(i, k, v);
    }
  }
  if (z_product(d, S) != target)
    throw NotDecomposable("monomial " + to_string(p) + " is not of the form y_R z_S^-1");
  return S;
}

MultisetTuple t_multisets(const DynkinDiagram& d, const MultisetTuple& R, const MultisetTuple& S) {
  MultisetTuple T;
  for (Node i = 1; i <= d.rank(); ++i) {
    Multiset pool = R.at(i);
    for (Node j : d.neighbors(i)) pool += S.at(j).shifted(1);
    Multiset removed = S.at(i).shifted(2);
    if (!pool.contains(removed))
      throw ContainmentViolation("S_" + std::to_string(i) + " + 2 is not contained in R_" +
                                 std::to_string(i) + " + neighbours(S + 1)");
    T.set(i, pool.minus(removed));
  }
  return T;
}

bool is_highest_weight(const MultisetTuple& S, const MultisetTuple& T) {
  for (const auto& [i, s] : S.entries()) {
    const Multiset& t = T.at(i);
    // Merge the two sorted supports and compare running counts.
    std::map<int, int> delta;
    for (auto [k, c] : s.entries()) delta[k] += c;
    for (auto [k, c] : t.entries()) delta[k] -= c;
    int excess = 0;
    for (auto [k, c] : delta) {
      excess += c;
      if (excess > 0) return false;
    }
  }
  return true;
}

std::string to_string(const Monomial& p) {
  if (p.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : p.terms()) {
    if (!first) os << '*';
    first = false;
    os << "y(" << t.node << ',' << t.k << ')';
    if (t.exp != 1) os << '^' << t.exp;
  }
  return os.str();
}

std::string to_string(const Multiset& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : m.values()) {
    if (!first) os << ',';
    first = false;
    os << v;
  }
  os << '}';
  return os.str();
}

std::string to_string(const MultisetTuple& t) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& [i, m] : t.entries()) {
    if (!first) os << "; ";
    first = false;
    os << i << ':' << to_string(m);
  }
  os << ')';
  return os.str();
}

}  // namespace moncrystal
