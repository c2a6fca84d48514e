#pragma once

// Nakajima monomials prod y_{i,k}^{a_{i,k}}, integer multisets, and the
// Kashiwara operators of the monomial crystal.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moncrystal/cartan.hpp"

namespace moncrystal {

/// Finite multiset of integers; zero multiplicities are never stored.
class Multiset {
 public:
  Multiset() = default;
  Multiset(std::initializer_list<int> values);
  explicit Multiset(const std::vector<int>& values);

  int count(int k) const;
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  void add(int k, int mult = 1);
  /// Removes mult copies of k; throws ContainmentViolation if not present.
  void remove(int k, int mult = 1);

  /// Sorted ascending, with repetition.
  std::vector<int> values() const;
  const std::map<int, int>& entries() const { return counts_; }
  std::optional<int> min() const;
  std::optional<int> max() const;

  Multiset shifted(int delta) const;
  /// Multiset union (multiplicities add).
  Multiset& operator+=(const Multiset& o);
  friend Multiset operator+(Multiset a, const Multiset& b) { return a += b; }
  /// Strict multiset difference; throws ContainmentViolation.
  Multiset minus(const Multiset& o) const;
  bool contains(const Multiset& o) const;

  bool operator==(const Multiset&) const = default;
  auto operator<=>(const Multiset& o) const { return counts_ <=> o.counts_; }

 private:
  std::map<int, int> counts_;
  std::size_t size_ = 0;
};

/// Per-node multisets; absent nodes are empty.
class MultisetTuple {
 public:
  MultisetTuple() = default;
  MultisetTuple(std::initializer_list<std::pair<const Node, Multiset>> init);

  const Multiset& at(Node i) const;
  void set(Node i, Multiset m);
  void add(Node i, int k, int mult = 1);
  int count(Node i, int k) const { return at(i).count(k); }
  /// Non-empty entries only.
  const std::map<Node, Multiset>& entries() const { return sets_; }
  std::size_t total_size() const;
  bool empty() const { return sets_.empty(); }

  bool operator==(const MultisetTuple&) const = default;
  auto operator<=>(const MultisetTuple& o) const { return sets_ <=> o.sets_; }

 private:
  std::map<Node, Multiset> sets_;
};

/// Integral parameter data R of weight lambda, lambda_i = |R_i|.
class ParamSet {
 public:
  /// Throws ParityViolation when some k in R_i has the wrong parity.
  ParamSet(const DynkinDiagram& d, MultisetTuple r);

  const MultisetTuple& R() const { return r_; }
  const WeightVec& lambda() const { return lambda_; }

 private:
  MultisetTuple r_;
  WeightVec lambda_;
};

struct Term {
  Node node;
  int k;
  int exp;
  auto operator<=>(const Term&) const = default;
};

/// Laurent monomial in the y_{i,k}, kept sorted by (i,k) with no zero
/// exponents, so structural equality is equality of monomials.
class Monomial {
 public:
  Monomial() = default;
  static Monomial y(Node i, int k, int exp = 1);
  /// Builds from arbitrary (unsorted, possibly repeated or zero) terms.
  static Monomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_one() const { return terms_.empty(); }
  int exponent(Node i, int k) const;

  Monomial inverse() const;
  Monomial translated(int delta) const;
  Monomial pow(int e) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial& operator*=(const Monomial& o) { return *this = *this * o; }

  /// Every stored (i,k) has parity(i) == k mod 2.
  bool parity_valid(const DynkinDiagram& d) const;

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Term> terms_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// z_{i,k} = y_{i,k} y_{i,k+2} / prod_{j~i} y_{j,k+1}. Throws ParityViolation.
Monomial z_factor(const DynkinDiagram& d, Node i, int k);
/// z_S = prod_{i, k in S_i} z_{i,k}, without parity checks.
Monomial z_product(const DynkinDiagram& d, const MultisetTuple& S);
/// y_S = prod_{i, k in S_i} y_{i,k}.
Monomial y_product(const MultisetTuple& S);

WeightVec weight(const DynkinDiagram& d, const Monomial& p);

struct EpsPhi {
  int eps = 0;
  int phi = 0;
  int k_eps = 0;  ///< smallest k with eps_i^k = eps_i; meaningful when eps > 0
  int k_phi = 0;  ///< largest k with phi_i^k = phi_i; meaningful when phi > 0
};

/// eps_i and phi_i. The partial sums are constant between support points
/// of node i, so the extrema are located on the support itself.
EpsPhi eps_phi(const Monomial& p, Node i);

std::optional<Monomial> e_tilde(const DynkinDiagram& d, const Monomial& p, Node i);
std::optional<Monomial> f_tilde(const DynkinDiagram& d, const Monomial& p, Node i);

/// The unique S with p = y_R z_S^{-1}; throws NotDecomposable.
MultisetTuple decompose_S(const DynkinDiagram& d, const MultisetTuple& R, const Monomial& p);
inline MultisetTuple decompose_S(const DynkinDiagram& d, const ParamSet& R, const Monomial& p) {
  return decompose_S(d, R.R(), p);
}

/// T_i = (R_i + sum_{j~i}(S_j+1)) \ (S_i+2); throws ContainmentViolation.
MultisetTuple t_multisets(const DynkinDiagram& d, const MultisetTuple& R, const MultisetTuple& S);
inline MultisetTuple t_multisets(const DynkinDiagram& d, const ParamSet& R,
                                 const MultisetTuple& S) {
  return t_multisets(d, R.R(), S);
}

/// For every i and k, #{l in S_i : l <= k} <= #{l in T_i : l <= k}.
bool is_highest_weight(const MultisetTuple& S, const MultisetTuple& T);

/// "y(i,k)^e" factors joined by "*"; "1" for the empty monomial.
std::string to_string(const Monomial& p);
std::string to_string(const Multiset& m);
std::string to_string(const MultisetTuple& t);

}  // namespace moncrystal
