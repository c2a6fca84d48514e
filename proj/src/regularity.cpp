#include "moncrystal/regularity.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "moncrystal/crystal.hpp"
#include "moncrystal/error.hpp"

namespace moncrystal {

ConditionBank::ConditionBank(const DynkinDiagram& d) {
  const auto n = static_cast<std::size_t>(d.rank());
  entries_.resize(n);
  lo_.assign(n, 0);
  hi_.assign(n, 0);
  for (Node i = 1; i <= d.rank(); ++i) {
    // B(varpi_i, 0) lives in the bipartition that makes (i, 0) valid.
    const DynkinDiagram host = d.parity(i) == 0 ? d : d.flipped();
    const Crystal& base = fundamental_base(host, i);
    MultisetTuple top;
    top.add(i, 0);
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    auto& out = entries_[static_cast<std::size_t>(i - 1)];
    for (const Monomial& q : base.elements()) {
      Entry e{q, decompose_S(host, top, q)};
      for (const Term& t : q.terms()) {
        lo = std::min(lo, t.k);
        hi = std::max(hi, t.k);
      }
      for (const auto& [j, m] : e.U.entries()) {
        lo = std::min(lo, *m.min());
        hi = std::max(hi, *m.max());
      }
      out.push_back(std::move(e));
    }
    lo_[static_cast<std::size_t>(i - 1)] = lo;
    hi_[static_cast<std::size_t>(i - 1)] = hi;
  }
}

const ConditionBank& ConditionBank::get(const DynkinDiagram& d) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<ConditionBank>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d.name());
  if (it == cache.end())
    it = cache.emplace(d.name(), std::unique_ptr<ConditionBank>(new ConditionBank(d))).first;
  return *it->second;
}

ConditionElement ConditionBank::shifted(Node i, const Entry& e, int n) {
  ConditionElement c{i, n, e.q.translated(n), {}};
  for (const auto& [j, m] : e.U.entries()) c.U.set(j, m.shifted(n));
  return c;
}

int e_pairing(const ConditionElement& qe, const MultisetTuple& R, const MultisetTuple& S) {
  int value = 0;
  for (const auto& [j, u] : qe.U.entries())
    for (auto [k, c] : u.entries()) value += c * R.count(j, k + 1);
  for (const Term& t : qe.q.terms()) value += t.exp * S.count(t.node, t.k - 1);
  return value;
}

namespace {

// Same value as e_pairing on the element shifted by n, without building it.
int shifted_pairing(const ConditionBank::Entry& e, int n, const MultisetTuple& R,
                    const MultisetTuple& S) {
  int value = 0;
  for (const auto& [j, u] : e.U.entries()) {
    const Multiset& r = R.at(j);
    if (r.empty()) continue;
    for (auto [k, c] : u.entries()) value += c * r.count(k + n + 1);
  }
  for (const Term& t : e.q.terms()) value += t.exp * S.count(t.node, t.k + n - 1);
  return value;
}

template <class Visitor>
void scan_conditions(const DynkinDiagram& d, const MultisetTuple& R, const MultisetTuple& S,
                     Visitor&& visit) {
  // Both sums vanish unless the shifted support meets (R - 1) or (S + 1).
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (const auto& [j, m] : R.entries()) {
    lo = std::min(lo, *m.min() - 1);
    hi = std::max(hi, *m.max() - 1);
  }
  for (const auto& [j, m] : S.entries()) {
    lo = std::min(lo, *m.min() + 1);
    hi = std::max(hi, *m.max() + 1);
  }
  if (lo > hi) return;

  const ConditionBank& bank = ConditionBank::get(d);
  for (Node i = 1; i <= d.rank(); ++i) {
    for (int n = lo - bank.hi(i); n <= hi - bank.lo(i); ++n) {
      if (d.same_parity(i, n)) continue;
      for (const auto& e : bank.at(i)) {
        int value = shifted_pairing(e, n, R, S);
        if (value < 0 && !visit(i, n, e, value)) return;
      }
    }
  }
}

}  // namespace

RegularityResult is_regular(const DynkinDiagram& d, const MultisetTuple& R,
                            const MultisetTuple& S) {
  RegularityResult out;
  scan_conditions(d, R, S, [&](Node i, int n, const ConditionBank::Entry& e, int value) {
    out.regular = false;
    out.witness = RegularityWitness{ConditionBank::shifted(i, e, n), value};
    return false;
  });
  return out;
}

std::vector<RegularityWitness> failing_conditions(const DynkinDiagram& d, const MultisetTuple& R,
                                                  const MultisetTuple& S) {
  std::vector<RegularityWitness> out;
  scan_conditions(d, R, S, [&](Node i, int n, const ConditionBank::Entry& e, int value) {
    out.push_back({ConditionBank::shifted(i, e, n), value});
    return true;
  });
  return out;
}

std::optional<RootVec> weight_gap(const DynkinDiagram& d, const WeightVec& lambda,
                                  const WeightVec& mu) {
  RootVec m = weight_to_root(d, lambda - mu);
  for (int c : m.coeffs)
    if (c < 0) return std::nullopt;
  return m;
}

namespace {

class CandidateSearch {
 public:
  CandidateSearch(const DynkinDiagram& d, const MultisetTuple& R, const RootVec& m)
      : d_(d), R_(R), remaining_(m.coeffs) {
    int total = 0;
    for (int c : m.coeffs) total += c;
    total_remaining_ = total;
    int rmin = std::numeric_limits<int>::max();
    int rmax = std::numeric_limits<int>::min();
    for (const auto& [i, r] : R.entries()) {
      rmin = std::min(rmin, *r.min());
      rmax = std::max(rmax, *r.max());
    }
    if (rmin <= rmax) {
      top_ = rmax - 2;
      bottom_ = rmin - 1 - total;
    }
  }

  // Cuts every branch on which some condition E_q >= 0 that only involves
  // already fixed levels fails. Leaves still need the full check.
  void prune_by_regularity() {
    prune_ = true;
    if (top_ < bottom_) return;
    checks_.assign(static_cast<std::size_t>(top_ - bottom_ + 1), {});
    const ConditionBank& bank = ConditionBank::get(d_);
    for (Node i = 1; i <= d_.rank(); ++i) {
      for (int n = bottom_ - bank.hi(i) + 1; n <= top_ - bank.lo(i) + 1; ++n) {
        if (d_.same_parity(i, n)) continue;
        for (const auto& e : bank.at(i)) {
          Check c;
          for (const auto& [j, u] : e.U.entries())
            for (auto [k, mult] : u.entries()) c.constant += mult * R_.count(j, k + n + 1);
          int low = std::numeric_limits<int>::max();
          for (const Term& t : e.q.terms()) {
            const int level = t.k + n - 1;
            if (level < bottom_ || level > top_ || !d_.same_parity(t.node, level)) continue;
            c.terms.push_back({level, t.node, t.exp});
            low = std::min(low, level);
          }
          if (c.terms.empty()) continue;
          checks_[static_cast<std::size_t>(low - bottom_)].push_back(std::move(c));
        }
      }
    }
  }

  std::vector<MultisetTuple> run() {
    if (total_remaining_ == 0) {
      out_.emplace_back();
      return out_;
    }
    if (top_ < bottom_) return out_;
    level_.assign(static_cast<std::size_t>(top_ - bottom_ + 3),
                  std::vector<int>(static_cast<std::size_t>(d_.rank()), 0));
    descend(top_, 1);
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  int& at(int k, Node i) {
    return level_[static_cast<std::size_t>(k - bottom_)][static_cast<std::size_t>(i - 1)];
  }
  int above(int k, Node i) { return k + 1 > top_ ? 0 : at(k + 1, i); }

  void descend(int k, Node i) {
    if (total_remaining_ == 0) {
      emit();
      return;
    }
    if (k < bottom_) return;
    if (i > d_.rank()) {
      if (prune_ && !level_holds(k)) return;
      descend(k - 1, 1);
      return;
    }
    if (!d_.same_parity(i, k) || remaining_[static_cast<std::size_t>(i - 1)] == 0) {
      descend(k, i + 1);
      return;
    }
    int bound = R_.count(i, k + 2);
    for (Node j : d_.neighbors(i)) bound += above(k, j);
    bound = std::min(bound, remaining_[static_cast<std::size_t>(i - 1)]);
    for (int c = bound; c >= 0; --c) {
      at(k, i) = c;
      remaining_[static_cast<std::size_t>(i - 1)] -= c;
      total_remaining_ -= c;
      descend(k, i + 1);
      remaining_[static_cast<std::size_t>(i - 1)] += c;
      total_remaining_ += c;
    }
    at(k, i) = 0;
  }

  bool level_holds(int k) {
    for (const Check& c : checks_[static_cast<std::size_t>(k - bottom_)]) {
      int value = c.constant;
      for (const auto& t : c.terms) value += t.exp * at(t.level, t.node);
      if (value < 0) return false;
    }
    return true;
  }

  void emit() {
    MultisetTuple S;
    for (int k = bottom_; k <= top_; ++k)
      for (Node i = 1; i <= d_.rank(); ++i)
        if (int c = at(k, i); c > 0) S.add(i, k, c);
    out_.push_back(std::move(S));
  }

  struct Check {
    struct Ref {
      int level;
      Node node;
      int exp;
    };
    int constant = 0;
    std::vector<Ref> terms;
  };

  const DynkinDiagram& d_;
  const MultisetTuple& R_;
  std::vector<int> remaining_;
  int total_remaining_ = 0;
  int top_ = 0;
  int bottom_ = 1;
  std::vector<std::vector<int>> level_;
  std::vector<MultisetTuple> out_;
  bool prune_ = false;
  std::vector<std::vector<Check>> checks_;
};

}  // namespace

std::vector<MultisetTuple> containment_candidates(const DynkinDiagram& d, const MultisetTuple& R,
                                                  const RootVec& m) {
  return CandidateSearch(d, R, m).run();
}

std::vector<MultisetTuple> pruned_candidates(const DynkinDiagram& d, const MultisetTuple& R,
                                             const RootVec& m) {
  CandidateSearch search(d, R, m);
  search.prune_by_regularity();
  return search.run();
}

std::vector<MultisetTuple> filter_candidates(std::vector<MultisetTuple> candidates,
                                             const std::function<bool(const MultisetTuple&)>& pred,
                                             std::size_t jobs) {
  std::vector<char> keep(candidates.size(), 0);
  jobs = std::max<std::size_t>(1, std::min(jobs, candidates.size()));
  if (jobs <= 1) {
    for (std::size_t k = 0; k < candidates.size(); ++k) keep[k] = pred(candidates[k]);
  } else {
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t k = w; k < candidates.size(); k += jobs) keep[k] = pred(candidates[k]);
      });
    }
    for (auto& t : workers) t.join();
  }
  std::vector<MultisetTuple> out;
  for (std::size_t k = 0; k < candidates.size(); ++k)
    if (keep[k]) out.push_back(std::move(candidates[k]));
  return out;
}

std::vector<MultisetTuple> enumerate_by_regularity(const DynkinDiagram& d, const MultisetTuple& R,
                                                   const WeightVec& mu, std::size_t jobs) {
  const ParamSet params(d, R);
  auto m = weight_gap(d, params.lambda(), mu);
  if (!m) return {};
  return filter_candidates(
      pruned_candidates(d, R, *m),
      [&](const MultisetTuple& S) { return is_regular(d, R, S).regular; }, jobs);
}

}  // namespace moncrystal
