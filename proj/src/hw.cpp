#include "moncrystal/hw.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "moncrystal/crystal.hpp"
#include "moncrystal/error.hpp"

namespace moncrystal {

namespace {

using boost::multiprecision::cpp_int;
using IntPoly = std::vector<cpp_int>;  // coefficients, lowest degree first

IntPoly times_linear(const IntPoly& p, long root) {
  IntPoly out(p.size() + 1, 0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k + 1] += p[k];
    out[k] -= p[k] * root;
  }
  return out;
}

IntPoly expand(const Multiset& roots, long shift) {
  IntPoly p{1};
  for (auto [r, c] : roots.entries())
    for (int n = 0; n < c; ++n) p = times_linear(p, static_cast<long>(r) - shift);
  return p;
}

IntPoly times(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) out[x + y] += a[x] * b[y];
  return out;
}

std::string half(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

}  // namespace

std::string to_string(const HalfIntPoly& p) {
  if (p.is_one()) return "1";
  std::string out;
  for (auto [r, c] : p.doubled_roots().entries()) {
    if (!out.empty()) out += "*";
    std::string factor;
    if (r == 0)
      factor = "u";
    else if (r > 0)
      factor = "(u - " + half(r) + ")";
    else
      factor = "(u + " + half(-r) + ")";
    out += factor;
    if (c > 1) out += "^" + std::to_string(c);
  }
  return out;
}

HwProblem make_hw_problem(const DynkinDiagram& d, const ParamSet& R, const WeightVec& mu) {
  if (mu.size() != static_cast<std::size_t>(d.rank()))
    throw SizeMismatch("mu has " + std::to_string(mu.size()) + " coordinates, expected " +
                       std::to_string(d.rank()));
  auto m = weight_gap(d, R.lambda(), mu);
  if (!m) throw InvalidArgument("lambda - mu has a negative simple-root coefficient");
  HwProblem prob{d, R, mu, *m, true};
  for (int c : mu.coeffs)
    if (c < 0) prob.dominant = false;
  return prob;
}

bool hw_condition(const ConditionElement& qe, const MultisetTuple& R, const MultisetTuple& S) {
  if (qe.n != 0) throw InvalidArgument("hw_condition expects q in B(varpi_i, 0)");
  Multiset lhs;
  Multiset rhs;
  for (const auto& [j, u] : qe.U.entries()) {
    const Multiset& r = R.at(j);
    for (auto [k2, uc] : u.entries()) {
      const int k = k2 + 2;
      for (auto [c, rc] : r.entries()) rhs.add(c - k, rc * uc);
    }
  }
  for (const Term& t : qe.q.terms()) {
    const Multiset& s = S.at(t.node);
    Multiset& side = t.exp < 0 ? lhs : rhs;
    const int power = std::abs(t.exp);
    for (auto [v, sc] : s.entries()) side.add(v - t.k, sc * power);
  }
  return rhs.contains(lhs);
}

std::vector<MultisetTuple> enumerate_highest_weights(const HwProblem& prob, std::size_t jobs) {
  const DynkinDiagram& d = prob.d;
  const ConditionBank& bank = ConditionBank::get(d);
  auto accepted = filter_candidates(
      pruned_candidates(d, prob.R.R(), prob.m),
      [&](const MultisetTuple& S) {
        for (Node i = 1; i <= d.rank(); ++i)
          for (const auto& e : bank.at(i))
            if (!hw_condition(ConditionBank::shifted(i, e, 0), prob.R.R(), S)) return false;
        return true;
      },
      jobs);
  for (const MultisetTuple& S : accepted) {
    for (const auto& [i, s] : S.entries()) {
      if (static_cast<int>(s.size()) != prob.m.at(i))
        throw std::logic_error("highest weight search produced the wrong size at node " +
                               std::to_string(i));
      for (auto [k, c] : s.entries())
        if (!d.same_parity(i, k))
          throw std::logic_error("highest weight search produced a parity-invalid S");
    }
  }
  return accepted;
}

std::optional<HalfIntPoly> chain_decompose(const Multiset& A, const Multiset& B) {
  if (A.size() != B.size())
    throw SizeMismatch("chain_decompose needs |A| = |B|, got " + std::to_string(A.size()) +
                       " and " + std::to_string(B.size()));
  std::vector<int> a = A.values();
  std::vector<int> b = B.values();
  if (!a.empty()) {
    const int coset = ((a.front() % 2) + 2) % 2;
    for (const auto* side : {&a, &b})
      for (int v : *side)
        if (((v % 2) + 2) % 2 != coset)
          throw CosetMismatch("chain_decompose values lie in different cosets of Z");
  }
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  Multiset roots;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return std::nullopt;
    for (int r = b[k] + 2; r <= a[k]; r += 2) roots.add(r);
  }
  return HalfIntPoly(std::move(roots));
}

bool chain_identity_holds(const Multiset& A, const Multiset& B, const HalfIntPoly& P) {
  // In v = 2u: (u - x/2) = (v - x)/2 and P(u+1) has roots shifted down by 2.
  // The powers of 2 agree on both sides, so compare the integer parts.
  const IntPoly lhs = times(expand(B, 0), expand(P.doubled_roots(), 0));
  const IntPoly rhs = times(expand(P.doubled_roots(), 2), expand(A, 0));
  return lhs == rhs;
}

FiniteDimData finite_dim_test(const DynkinDiagram& d, const MultisetTuple& R,
                              const MultisetTuple& S) {
  const MultisetTuple T = t_multisets(d, R, S);
  FiniteDimData out;
  out.finite = true;
  for (Node i = 1; i <= d.rank(); ++i) {
    std::map<int, int> free = T.at(i).entries();
    std::vector<int> s = S.at(i).values();
    std::sort(s.rbegin(), s.rend());
    Multiset image;
    std::vector<std::pair<int, int>> pairs;
    for (int v : s) {
      auto it = free.upper_bound(v);
      if (it == free.begin()) {
        out.finite = false;
        break;
      }
      --it;
      pairs.emplace_back(v, it->first);
      image.add(it->first);
      if (--it->second == 0) free.erase(it);
    }
    if (!out.finite) break;
    out.injection[i] = std::move(pairs);
    out.Q[i] = HalfIntPoly(T.at(i).minus(image));
    out.P[i] = *chain_decompose(S.at(i), image);
  }
  if (!out.finite) {
    out.injection.clear();
    out.P.clear();
    out.Q.clear();
  }
  return out;
}

std::optional<HalfIntPoly> g_poly_path(const HwProblem& prob, Node i,
                                       const std::vector<Node>& path, const std::vector<int>& s) {
  if (path.size() != s.size())
    throw SizeMismatch("path and exponent sequences differ in length");
  const DynkinDiagram host = prob.d.parity(i) == 0 ? prob.d : prob.d.flipped();
  Multiset roots;
  roots.add(0, prob.m.at(i));
  Monomial p = Monomial::y(i, 0);
  for (std::size_t a = 0; a < path.size(); ++a) {
    if (s[a] < 1) throw InvalidArgument("G-polynomial exponents must be at least 1");
    const int k = eps_phi(p, path[a]).k_phi;
    auto next = f_tilde(host, p, path[a]);
    if (!next) return std::nullopt;
    p = std::move(*next);
    roots.add(-k, s[a] - 1);
  }
  return HalfIntPoly(std::move(roots));
}

HalfIntPoly g_gamma(const HwProblem& prob, const OrbitElement& g) {
  std::vector<int> s;
  for (Node j : g.word) s.push_back(prob.mu.at(j) + 1);
  auto poly = g_poly_path(prob, g.base, g.word, s);
  if (!poly) throw std::logic_error("minimal word does not give a crystal path");
  return *poly;
}

int g_gamma_expected_degree(const HwProblem& prob, const OrbitElement& g) {
  const RootVec drop = weight_to_root(prob.d, fundamental_weight(prob.d, g.base) - g.gamma);
  int deg = prob.m.at(g.base);
  for (Node j = 1; j <= prob.d.rank(); ++j) deg += prob.mu.at(j) * drop.at(j);
  return deg;
}

std::vector<std::vector<Node>> minimal_words(const DynkinDiagram& d, const OrbitElement& g) {
  const RootVec target = weight_to_root(d, fundamental_weight(d, g.base) - g.gamma);
  std::vector<std::vector<Node>> out;
  std::vector<Node> word;
  std::function<void(const WeightVec&, RootVec&)> walk = [&](const WeightVec& v, RootVec& drop) {
    if (drop == target) {
      out.push_back(word);
      return;
    }
    for (Node p = 1; p <= d.rank(); ++p) {
      if (v.at(p) <= 0 || drop.at(p) + v.at(p) > target.at(p)) continue;
      drop.at(p) += v.at(p);
      word.push_back(p);
      walk(reflect(d, p, v), drop);
      word.pop_back();
      drop.at(p) -= v.at(p);
    }
  };
  RootVec drop(static_cast<std::size_t>(d.rank()));
  walk(fundamental_weight(d, g.base), drop);
  return out;
}

}  // namespace moncrystal
