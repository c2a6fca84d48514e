#pragma once

// The sl_n flag crystal F_n(R) and its comparison with B(N varpi_1, R).

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "moncrystal/cartan.hpp"
#include "moncrystal/monomial.hpp"

namespace moncrystal {

/// An n-step flag 0 = V_0 <= V_1 <= ... <= V_n = R of multisets, stored as a
/// multiplicity table over the distinct values of R.
struct Flag {
  std::vector<int> values;             ///< distinct values c_1 < ... < c_q
  std::vector<std::vector<int>> mult;  ///< mult[j][l] = V_l(c_j), l = 0..n

  int steps() const { return mult.empty() ? 0 : static_cast<int>(mult.front().size()) - 1; }
  Multiset step(int l) const;
  auto operator<=>(const Flag&) const = default;
};

/// All flags in F_n(R), sorted.
std::vector<Flag> enumerate_flags(int n, const Multiset& R);

/// The i-signature as a string of '+' and '-' after cancelling "+-" pairs,
/// together with the block index of every surviving sign.
struct Signature {
  std::string signs;
  std::vector<std::size_t> blocks;
};
Signature flag_signature(const Flag& f, int i);

/// Signature-rule operators, 1 <= i <= n-1.
std::optional<Flag> flag_e(const Flag& f, int i);
std::optional<Flag> flag_f(const Flag& f, int i);

/// Weight in fundamental-weight coordinates of sl_n.
WeightVec flag_weight(const Flag& f);

/// The sl_n diagram A_{n-1} hosting R at node 1.
DynkinDiagram flag_diagram(int n);

/// y_R z_S^{-1} with S_i = (R \ V_i) - (i + 1) and R at node 1.
Monomial flag_to_monomial(const Flag& f, const Multiset& R);

/// f(c, i) = y_{i, c-i+1} / y_{i-1, c-i}, with y_0 = y_n = 1.
Monomial flag_letter(int n, int c, int i);

struct VerifyReport {
  bool ok = true;
  std::size_t checked = 0;
  std::string failure;  ///< first failure, empty when ok
};

/// flag_to_monomial is a bijection F_n(R) -> B(N varpi_1, R) commuting with
/// every e_i, f_i and preserving weights.
VerifyReport verify_flag_isomorphism(int n, const Multiset& R);

/// B(varpi_i, 0) lies in B(varpi_1, -i+1) ... B(varpi_1, i-1), and the
/// element for v_{a_1} ^ ... ^ v_{a_i} is
///   prod_r y_{a_r, -i-a_r+2r} / y_{a_r-1, -i-a_r+2r-1}.
VerifyReport verify_column_embedding(int n, int i);

/// Text grid of (R, S) for type A: one column per node, one row per index
/// k from the top down. "o" marks R points (with multiplicity when > 1),
/// digits give S_i(k), "." marks other parity-valid points.
std::string render_partition_diagram(const DynkinDiagram& d, const MultisetTuple& R,
                                     const MultisetTuple& S);

}  // namespace moncrystal
