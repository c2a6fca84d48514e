#include "moncrystal/cartan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <boost/rational.hpp>

#include "moncrystal/error.hpp"

namespace moncrystal {

namespace {

using Rational = boost::rational<long long>;

void connect(std::vector<std::vector<Node>>& adj, Node a, Node b) {
  adj[static_cast<std::size_t>(a - 1)].push_back(b);
  adj[static_cast<std::size_t>(b - 1)].push_back(a);
}

// Solves C x = rhs exactly. C is symmetric positive definite, so plain
// elimination without pivoting never hits a zero pivot.
std::vector<Rational> solve_cartan(const DynkinDiagram& d, std::vector<Rational> rhs) {
  const int n = d.rank();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a[i - 1][j - 1] = d.cartan(i, j);

  for (int col = 0; col < n; ++col) {
    for (int row = col + 1; row < n; ++row) {
      if (a[row][col].numerator() == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (int k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(static_cast<std::size_t>(n));
  for (int row = n - 1; row >= 0; --row) {
    Rational s = rhs[row];
    for (int k = row + 1; k < n; ++k) s -= a[row][k] * x[k];
    x[row] = s / a[row][row];
  }
  return x;
}

}  // namespace

bool DynkinDiagram::adjacent(Node i, Node j) const {
  const auto& nb = neighbors(i);
  return std::find(nb.begin(), nb.end(), j) != nb.end();
}

bool DynkinDiagram::same_parity(Node i, long k) const {
  long r = k % 2;
  if (r < 0) r += 2;
  return r == parity(i);
}

int DynkinDiagram::cartan(Node i, Node j) const {
  if (i == j) return 2;
  return adjacent(i, j) ? -1 : 0;
}

DynkinDiagram DynkinDiagram::flipped() const {
  DynkinDiagram d = *this;
  d.flip_ = !flip_;
  for (auto& p : d.parity_) p = 1 - p;
  return d;
}

std::vector<Node> DynkinDiagram::nodes() const {
  std::vector<Node> out;
  for (Node i = 1; i <= rank_; ++i) out.push_back(i);
  return out;
}

DynkinDiagram build_diagram(const std::string& name, bool flip_parity) {
  if (name.size() < 2) throw InvalidDiagram("unknown diagram '" + name + "'");
  const char letter = name[0];
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw InvalidDiagram("unknown diagram '" + name + "'");
  } catch (const std::logic_error&) {
    throw InvalidDiagram("unknown diagram '" + name + "'");
  }

  DynkinDiagram d;
  d.name_ = name;
  d.rank_ = rank;
  d.flip_ = flip_parity;
  switch (letter) {
    case 'A':
      if (rank < 1 || rank > 12) throw InvalidDiagram("rank out of range for type A: " + name);
      d.kind_ = DiagramKind::A;
      break;
    case 'D':
      if (rank < 4 || rank > 8) throw InvalidDiagram("rank out of range for type D: " + name);
      d.kind_ = DiagramKind::D;
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw InvalidDiagram("rank out of range for type E: " + name);
      d.kind_ = DiagramKind::E;
      break;
    default:
      throw InvalidDiagram("unknown diagram '" + name + "'");
  }

  d.adj_.assign(static_cast<std::size_t>(rank), {});
  switch (d.kind_) {
    case DiagramKind::A:
      for (Node i = 1; i < rank; ++i) connect(d.adj_, i, i + 1);
      break;
    case DiagramKind::D:
      for (Node i = 1; i < rank - 1; ++i) connect(d.adj_, i, i + 1);
      connect(d.adj_, rank - 2, rank);
      break;
    case DiagramKind::E:
      connect(d.adj_, 1, 3);
      connect(d.adj_, 2, 4);
      for (Node i = 3; i < rank; ++i) connect(d.adj_, i, i + 1);
      break;
  }
  for (auto& nb : d.adj_) std::sort(nb.begin(), nb.end());

  // Breadth-first distances from node 1; the diagrams are trees.
  d.parity_.assign(static_cast<std::size_t>(rank), -1);
  std::deque<Node> queue{1};
  d.parity_[0] = 0;
  while (!queue.empty()) {
    Node v = queue.front();
    queue.pop_front();
    for (Node w : d.adj_[static_cast<std::size_t>(v - 1)]) {
      if (d.parity_[static_cast<std::size_t>(w - 1)] >= 0) continue;
      d.parity_[static_cast<std::size_t>(w - 1)] = 1 - d.parity_[static_cast<std::size_t>(v - 1)];
      queue.push_back(w);
    }
  }
  if (flip_parity)
    for (auto& p : d.parity_) p = 1 - p;
  return d;
}

WeightVec root_to_weight(const DynkinDiagram& d, const RootVec& m) {
  WeightVec v(static_cast<std::size_t>(d.rank()));
  for (Node i = 1; i <= d.rank(); ++i) {
    int s = 0;
    for (Node j = 1; j <= d.rank(); ++j) s += d.cartan(i, j) * m.at(j);
    v.at(i) = s;
  }
  return v;
}

RootVec weight_to_root(const DynkinDiagram& d, const WeightVec& v) {
  std::vector<Rational> rhs(v.coeffs.begin(), v.coeffs.end());
  auto x = solve_cartan(d, rhs);
  RootVec m(static_cast<std::size_t>(d.rank()));
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k].denominator() != 1) throw NotInRootLattice("weight is not in the root lattice");
    m.coeffs[k] = static_cast<int>(x[k].numerator());
  }
  return m;
}

int height(const DynkinDiagram&, const RootVec& beta) {
  int h = 0;
  for (int c : beta.coeffs) h += c;
  return h;
}

int twice_height_of_fundamental(const DynkinDiagram& d, Node i) {
  std::vector<Rational> rhs(static_cast<std::size_t>(d.rank()), Rational(0));
  rhs[static_cast<std::size_t>(i - 1)] = 1;
  Rational h = 0;
  for (const auto& x : solve_cartan(d, rhs)) h += x;
  h *= 2;
  long long q = h.numerator() / h.denominator();
  if (q * h.denominator() < h.numerator()) ++q;
  return static_cast<int>(q);
}

WeightVec fundamental_weight(const DynkinDiagram& d, Node i) {
  WeightVec v(static_cast<std::size_t>(d.rank()));
  v.at(i) = 1;
  return v;
}

RootVec simple_root(const DynkinDiagram& d, Node i) {
  RootVec m(static_cast<std::size_t>(d.rank()));
  m.at(i) = 1;
  return m;
}

WeightVec simple_root_weight(const DynkinDiagram& d, Node i) {
  WeightVec v(static_cast<std::size_t>(d.rank()));
  for (Node j = 1; j <= d.rank(); ++j) v.at(j) = d.cartan(j, i);
  return v;
}

WeightVec reflect(const DynkinDiagram& d, Node p, WeightVec v) {
  const int pairing = v.at(p);
  if (pairing != 0) v -= pairing * simple_root_weight(d, p);
  return v;
}

RootVec reflect(const DynkinDiagram& d, Node p, RootVec beta) {
  int pairing = 0;
  for (Node k = 1; k <= d.rank(); ++k) pairing += beta.at(k) * d.cartan(k, p);
  beta.at(p) -= pairing;
  return beta;
}

std::vector<RootVec> positive_roots(const DynkinDiagram& d) {
  std::set<RootVec> seen;
  std::deque<RootVec> queue;
  for (Node i = 1; i <= d.rank(); ++i) {
    seen.insert(simple_root(d, i));
    queue.push_back(simple_root(d, i));
  }
  // In simply-laced types beta + alpha_j is a root iff <beta, alpha_j> = -1.
  while (!queue.empty()) {
    RootVec beta = queue.front();
    queue.pop_front();
    WeightVec pair = root_to_weight(d, beta);
    for (Node j = 1; j <= d.rank(); ++j) {
      if (pair.at(j) != -1) continue;
      RootVec next = beta;
      next.at(j) += 1;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<RootVec> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [&](const RootVec& a, const RootVec& b) {
    return height(d, a) < height(d, b);
  });
  return out;
}

bool is_minuscule(const DynkinDiagram& d, Node i) {
  if (i < 1 || i > d.rank()) return false;
  switch (d.kind()) {
    case DiagramKind::A:
      return true;
    case DiagramKind::D:
      return i == 1 || i == d.rank() - 1 || i == d.rank();
    case DiagramKind::E:
      if (d.rank() == 6) return i == 1 || i == 6;
      if (d.rank() == 7) return i == 7;
      return false;
  }
  return false;
}

std::vector<OrbitElement> minuscule_orbit(const DynkinDiagram& d, Node i) {
  if (!is_minuscule(d, i))
    throw NotMinuscule("varpi_" + std::to_string(i) + " is not minuscule in " + d.name());
  std::vector<OrbitElement> out;
  std::map<WeightVec, std::size_t> index;
  out.push_back(OrbitElement{i, fundamental_weight(d, i), {}});
  index.emplace(out.back().gamma, 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Node p = 1; p <= d.rank(); ++p) {
      if (out[head].gamma.at(p) != 1) continue;
      WeightVec next = out[head].gamma - simple_root_weight(d, p);
      if (index.count(next)) continue;
      std::vector<Node> word = out[head].word;
      word.push_back(p);
      index.emplace(next, out.size());
      out.push_back(OrbitElement{i, std::move(next), std::move(word)});
    }
  }
  return out;
}

RootVec chi(const DynkinDiagram& d, const OrbitElement& g) {
  WeightVec rho(std::vector<int>(static_cast<std::size_t>(d.rank()), 1));
  WeightVec w_rho = rho;
  for (Node p : g.word) w_rho = reflect(d, p, std::move(w_rho));
  return weight_to_root(d, w_rho - rho);
}

}  // namespace moncrystal
