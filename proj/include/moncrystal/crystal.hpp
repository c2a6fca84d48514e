#pragma once

// Finite subcrystals of the monomial crystal: closures under the Kashiwara
// operators, fundamental crystals B(varpi_i, c), and product monomial
// crystals B(lambda, R).

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "moncrystal/cartan.hpp"
#include "moncrystal/monomial.hpp"

namespace moncrystal {

inline constexpr std::size_t kDefaultCap = 2'000'000;

struct Edge {
  std::size_t src;
  Node label;
  std::size_t dst;
  auto operator<=>(const Edge&) const = default;
};

/// Immutable finite crystal of monomials. Elements are sorted; edges are the
/// f-arrows (src, i, dst) with dst = f_i(src), ordered by (src, i).
class Crystal {
 public:
  Crystal() = default;
  /// Sorts and deduplicates the elements, then recomputes edges, highest
  /// weight elements and the weight index. Arrows whose target falls
  /// outside the set are dropped and recorded by closed() == false.
  Crystal(const DynkinDiagram& d, std::vector<Monomial> elements);

  const DynkinDiagram& diagram() const { return diagram_; }
  const std::vector<Monomial>& elements() const { return elements_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& highest() const { return highest_; }
  const std::map<WeightVec, std::vector<std::size_t>>& weight_index() const { return weights_; }
  const std::vector<WeightVec>& weights() const { return element_weights_; }

  std::size_t size() const { return elements_.size(); }
  /// True when every e_i / f_i image of an element is again an element.
  bool closed() const { return closed_; }
  std::optional<std::size_t> index_of(const Monomial& p) const;
  bool contains(const Monomial& p) const { return index_of(p).has_value(); }

  /// Target of the i-edge out of element v, if any.
  std::optional<std::size_t> f_target(std::size_t v, Node i) const;
  std::optional<std::size_t> e_target(std::size_t v, Node i) const;

  /// Same crystal with every variable index shifted by delta.
  Crystal translated(int delta) const;

  bool operator==(const Crystal& o) const {
    return diagram_ == o.diagram_ && elements_ == o.elements_ && edges_ == o.edges_ &&
           highest_ == o.highest_;
  }

 private:
  DynkinDiagram diagram_;
  std::vector<Monomial> elements_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<Edge> edges_;
  // Adjacency per element, indexed by node - 1; npos means no arrow.
  std::vector<std::vector<std::size_t>> f_adj_;
  std::vector<std::vector<std::size_t>> e_adj_;
  std::vector<std::size_t> highest_;
  std::vector<WeightVec> element_weights_;
  std::map<WeightVec, std::vector<std::size_t>> weights_;
  bool closed_ = true;
};

/// Breadth-first closure of the seeds under all e_i and f_i.
/// Seeds must be parity-valid for d. Throws CapExceeded.
Crystal generate_closure(const DynkinDiagram& d, const std::vector<Monomial>& seeds,
                         std::size_t cap = kDefaultCap);

/// B(varpi_i, c), generated once per (diagram, node) and translated.
/// Throws ParityViolation when c and i have different parity.
const Crystal& fundamental_base(const DynkinDiagram& d, Node i);
Crystal fundamental(const DynkinDiagram& d, Node i, int c);

/// B(lambda, R): all products of one element from each B(varpi_i, c),
/// c in R_i with multiplicity. Throws CapExceeded when the number of
/// product insertions would exceed cap.
Crystal product_crystal(const DynkinDiagram& d, const ParamSet& R, std::size_t cap = kDefaultCap);

/// Number of elements of prod_{i, c in R_i} |B(varpi_i, c)|.
std::size_t tensor_product_size(const DynkinDiagram& d, const ParamSet& R);

std::vector<Monomial> weight_space(const Crystal& c, const WeightVec& mu);

/// The e/f-connected component containing p. Throws NotAnElement.
Crystal connected_component(const Crystal& c, const Monomial& p);

struct ParamClassification {
  bool well_spaced = false;
  bool generic = false;
  bool maximally_singular = false;
  std::size_t crystal_size = 0;
  std::size_t tensor_size = 0;
  std::size_t component_size = 0;
  int gap_bound_height = 0;  ///< ceil(max_i 2 * height(varpi_i))
  int gap_bound_span = 0;    ///< widest variable span of a fundamental crystal
  int gap_bound = 0;         ///< the larger of the two; gaps must exceed it
};

ParamClassification classify_params(const DynkinDiagram& d, const ParamSet& R,
                                    std::size_t cap = kDefaultCap);

/// Widest spread of variable indices k over the fundamental crystals
/// B(varpi_i, c) for the given nodes.
int fundamental_span(const DynkinDiagram& d, const std::vector<Node>& nodes);

/// Explicit formula for y_{gamma,c} in a minuscule fundamental crystal.
Monomial minuscule_monomial(const DynkinDiagram& d, const OrbitElement& g, int c);

struct TauCheck {
  bool holds = false;
  RootVec twice_tau;  ///< sum_{j, k in S_j(gamma)} k alpha_j
  RootVec rhs;        ///< (c-1)(varpi_i - gamma) + chi(gamma)
};

/// Compares 2 tau(gamma) with (c-1)(varpi_i - gamma) + chi(gamma).
TauCheck tau_check(const DynkinDiagram& d, const OrbitElement& g, int c);

}  // namespace moncrystal
