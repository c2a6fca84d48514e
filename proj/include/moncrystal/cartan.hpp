#pragma once

// Simply-laced root data.
//
// Nodes use Bourbaki labels 1..n:
//
//   A_n   1 - 2 - ... - n
//   D_n   1 - 2 - ... - (n-2) - (n-1)
//                          |
//                          n
//   E_n   1 - 3 - 4 - 5 - ... - n
//               |
//               2
//
// Weights are stored in the fundamental-weight basis, roots in the
// simple-root basis. Vectors are 0-based: coeffs[i-1] belongs to node i.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace moncrystal {

using Node = int;

template <class Tag>
struct IntVec {
  std::vector<int> coeffs;

  IntVec() = default;
  explicit IntVec(std::size_t n) : coeffs(n, 0) {}
  explicit IntVec(std::vector<int> c) : coeffs(std::move(c)) {}
  IntVec(std::initializer_list<int> c) : coeffs(c) {}

  std::size_t size() const { return coeffs.size(); }
  int& at(Node i) { return coeffs.at(static_cast<std::size_t>(i - 1)); }
  int at(Node i) const { return coeffs.at(static_cast<std::size_t>(i - 1)); }

  IntVec& operator+=(const IntVec& o) {
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += o.coeffs[k];
    return *this;
  }
  IntVec& operator-=(const IntVec& o) {
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] -= o.coeffs[k];
    return *this;
  }
  friend IntVec operator+(IntVec a, const IntVec& b) { return a += b; }
  friend IntVec operator-(IntVec a, const IntVec& b) { return a -= b; }
  friend IntVec operator*(int s, IntVec a) {
    for (auto& c : a.coeffs) c *= s;
    return a;
  }
  friend IntVec operator-(IntVec a) { return -1 * std::move(a); }

  bool is_zero() const {
    for (int c : coeffs)
      if (c != 0) return false;
    return true;
  }

  auto operator<=>(const IntVec&) const = default;
};

struct WeightTag {};
struct RootTag {};

/// Coordinates in the fundamental-weight basis.
using WeightVec = IntVec<WeightTag>;
/// Coordinates in the simple-root basis.
using RootVec = IntVec<RootTag>;

enum class DiagramKind { A, D, E };

class DynkinDiagram {
 public:
  DiagramKind kind() const { return kind_; }
  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  bool flipped_parity() const { return flip_; }

  bool adjacent(Node i, Node j) const;
  const std::vector<Node>& neighbors(Node i) const {
    return adj_.at(static_cast<std::size_t>(i - 1));
  }
  /// 0 for even nodes, 1 for odd nodes.
  int parity(Node i) const { return parity_.at(static_cast<std::size_t>(i - 1)); }
  /// True when k has the same parity as node i.
  bool same_parity(Node i, long k) const;
  int cartan(Node i, Node j) const;

  /// The same diagram with the bipartition swapped.
  DynkinDiagram flipped() const;

  std::vector<Node> nodes() const;

  bool operator==(const DynkinDiagram& o) const {
    return name_ == o.name_ && flip_ == o.flip_;
  }

 private:
  friend DynkinDiagram build_diagram(const std::string&, bool);

  DiagramKind kind_ = DiagramKind::A;
  int rank_ = 0;
  std::string name_;
  bool flip_ = false;
  std::vector<std::vector<Node>> adj_;
  std::vector<int> parity_;
};

/// Parses "A1".."A12", "D4".."D8", "E6", "E7", "E8". The canonical
/// bipartition gives node i the parity of its graph distance from node 1;
/// flip_parity swaps it.
DynkinDiagram build_diagram(const std::string& name, bool flip_parity = false);

/// Cartan matrix times a root vector, i.e. the pairings <beta, alpha_j>.
WeightVec root_to_weight(const DynkinDiagram& d, const RootVec& m);

/// Solves C m = v over the integers; throws NotInRootLattice otherwise.
RootVec weight_to_root(const DynkinDiagram& d, const WeightVec& v);

/// Sum of simple-root coefficients.
int height(const DynkinDiagram& d, const RootVec& beta);

/// Twice the height of the fundamental weight varpi_i, rounded up.
int twice_height_of_fundamental(const DynkinDiagram& d, Node i);

WeightVec fundamental_weight(const DynkinDiagram& d, Node i);
RootVec simple_root(const DynkinDiagram& d, Node i);
/// alpha_i written in weight coordinates (column i of the Cartan matrix).
WeightVec simple_root_weight(const DynkinDiagram& d, Node i);

/// Simple reflection s_p in weight coordinates.
WeightVec reflect(const DynkinDiagram& d, Node p, WeightVec v);
/// Simple reflection s_p in root coordinates.
RootVec reflect(const DynkinDiagram& d, Node p, RootVec beta);

/// Positive roots in root coordinates, sorted by height then lexicographically.
std::vector<RootVec> positive_roots(const DynkinDiagram& d);

bool is_minuscule(const DynkinDiagram& d, Node i);

struct OrbitElement {
  Node base = 0;
  WeightVec gamma;
  /// Reflection indices in application order: gamma = s_{w[d-1]} ... s_{w[0]} varpi_base.
  std::vector<Node> word;
};

/// W-orbit of a minuscule fundamental weight by breadth-first search, with
/// the first-found (minimal, smallest index at ties) word for each element.
std::vector<OrbitElement> minuscule_orbit(const DynkinDiagram& d, Node i);

/// w rho - rho in root coordinates, w the recorded minimal word.
RootVec chi(const DynkinDiagram& d, const OrbitElement& g);

}  // namespace moncrystal
