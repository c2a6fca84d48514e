#include "moncrystal/typea.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "moncrystal/crystal.hpp"
#include "moncrystal/error.hpp"

namespace moncrystal {

Multiset Flag::step(int l) const {
  Multiset out;
  for (std::size_t j = 0; j < values.size(); ++j)
    out.add(values[j], mult[j].at(static_cast<std::size_t>(l)));
  return out;
}

namespace {

// Nondecreasing sequences 0 = m_0 <= ... <= m_n = t.
void chains(int n, int t, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  const int l = static_cast<int>(cur.size());
  if (l == n) {
    cur.push_back(t);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = cur.back(); v <= t; ++v) {
    cur.push_back(v);
    chains(n, t, cur, out);
    cur.pop_back();
  }
}

void check_step(const Flag& f, int i) {
  if (i < 1 || i >= f.steps())
    throw InvalidArgument("flag step " + std::to_string(i) + " outside 1.." +
                          std::to_string(f.steps() - 1));
}

}  // namespace

std::vector<Flag> enumerate_flags(int n, const Multiset& R) {
  if (n < 2) throw InvalidArgument("flags need n >= 2");
  Flag proto;
  std::vector<std::vector<std::vector<int>>> options;
  for (auto [c, t] : R.entries()) {
    proto.values.push_back(c);
    std::vector<int> cur{0};
    options.emplace_back();
    chains(n, t, cur, options.back());
  }
  std::vector<Flag> out;
  proto.mult.resize(proto.values.size());
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    Flag f = proto;
    for (std::size_t j = 0; j < options.size(); ++j) f.mult[j] = options[j][pick[j]];
    out.push_back(std::move(f));
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == options[j].size()) pick[j++] = 0;
    if (j == pick.size()) break;
  }
  if (R.empty()) {
    out.clear();
    out.push_back(Flag{});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Signature flag_signature(const Flag& f, int i) {
  check_step(f, i);
  const auto u = static_cast<std::size_t>(i);
  std::vector<std::size_t> minus_blocks;
  std::vector<std::size_t> plus_stack;
  for (std::size_t j = 0; j < f.values.size(); ++j) {
    const auto& m = f.mult[j];
    for (int r = 0; r < m[u + 1] - m[u]; ++r) {
      if (!plus_stack.empty())
        plus_stack.pop_back();
      else
        minus_blocks.push_back(j);
    }
    for (int r = 0; r < m[u] - m[u - 1]; ++r) plus_stack.push_back(j);
  }
  Signature s;
  s.signs = std::string(minus_blocks.size(), '-') + std::string(plus_stack.size(), '+');
  s.blocks = minus_blocks;
  s.blocks.insert(s.blocks.end(), plus_stack.begin(), plus_stack.end());
  return s;
}

std::optional<Flag> flag_e(const Flag& f, int i) {
  const Signature s = flag_signature(f, i);
  const auto last_minus = s.signs.rfind('-');
  if (last_minus == std::string::npos) return std::nullopt;
  Flag out = f;
  ++out.mult[s.blocks[last_minus]][static_cast<std::size_t>(i)];
  return out;
}

std::optional<Flag> flag_f(const Flag& f, int i) {
  const Signature s = flag_signature(f, i);
  const auto first_plus = s.signs.find('+');
  if (first_plus == std::string::npos) return std::nullopt;
  Flag out = f;
  --out.mult[s.blocks[first_plus]][static_cast<std::size_t>(i)];
  return out;
}

WeightVec flag_weight(const Flag& f) {
  const int n = f.steps();
  std::vector<int> sizes(static_cast<std::size_t>(n + 1), 0);
  for (const auto& m : f.mult)
    for (int l = 0; l <= n; ++l) sizes[static_cast<std::size_t>(l)] += m[static_cast<std::size_t>(l)];
  WeightVec w(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int i = 1; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    w.at(i) = (sizes[u] - sizes[u - 1]) - (sizes[u + 1] - sizes[u]);
  }
  return w;
}

DynkinDiagram flag_diagram(int n) {
  if (n < 2) throw InvalidArgument("sl_n needs n >= 2");
  return build_diagram("A" + std::to_string(n - 1));
}

Monomial flag_to_monomial(const Flag& f, const Multiset& R) {
  const DynkinDiagram d = flag_diagram(f.steps());
  MultisetTuple S;
  for (int i = 1; i < f.steps(); ++i) S.set(i, R.minus(f.step(i)).shifted(-(i + 1)));
  MultisetTuple top;
  top.set(1, R);
  return y_product(top) * z_product(d, S).inverse();
}

Monomial flag_letter(int n, int c, int i) {
  std::vector<Term> t;
  if (i < n) t.push_back({i, c - i + 1, 1});
  if (i > 1) t.push_back({i - 1, c - i, -1});
  return Monomial::from_terms(std::move(t));
}

VerifyReport verify_flag_isomorphism(int n, const Multiset& R) {
  VerifyReport rep;
  auto fail = [&](std::string why) {
    if (rep.ok) rep.failure = std::move(why);
    rep.ok = false;
  };
  const DynkinDiagram d = flag_diagram(n);
  MultisetTuple top;
  top.set(1, R);
  const Crystal B = product_crystal(d, ParamSet(d, top));
  const std::vector<Flag> flags = enumerate_flags(n, R);

  std::set<Monomial> image;
  for (const Flag& f : flags) {
    const Monomial p = flag_to_monomial(f, R);
    ++rep.checked;
    if (!image.insert(p).second) fail("two flags map to " + to_string(p));
    if (!B.contains(p)) fail(to_string(p) + " is not in B(N varpi_1, R)");
    if (flag_weight(f) != weight(d, p)) fail("weight mismatch at " + to_string(p));
    for (Node i = 1; i < n; ++i) {
      auto fe = flag_e(f, i);
      auto me = e_tilde(d, p, i);
      if (fe.has_value() != me.has_value() || (fe && flag_to_monomial(*fe, R) != *me))
        fail("e_" + std::to_string(i) + " does not commute at " + to_string(p));
      auto ff = flag_f(f, i);
      auto mf = f_tilde(d, p, i);
      if (ff.has_value() != mf.has_value() || (ff && flag_to_monomial(*ff, R) != *mf))
        fail("f_" + std::to_string(i) + " does not commute at " + to_string(p));
    }
  }
  if (image.size() != B.size())
    fail(std::to_string(image.size()) + " flags against " + std::to_string(B.size()) +
         " crystal elements");
  return rep;
}

VerifyReport verify_column_embedding(int n, int i) {
  VerifyReport rep;
  auto fail = [&](std::string why) {
    if (rep.ok) rep.failure = std::move(why);
    rep.ok = false;
  };
  if (i < 1 || i >= n) throw InvalidArgument("column height outside 1..n-1");
  const DynkinDiagram canon = flag_diagram(n);
  const DynkinDiagram d = canon.parity(i) == 0 ? canon : canon.flipped();
  const Crystal& base = fundamental_base(d, i);

  MultisetTuple params;
  for (int r = 1; r <= i; ++r) params.add(1, -i + 2 * r - 1);
  const Crystal column = product_crystal(d, ParamSet(d, params));
  for (const Monomial& p : base.elements()) {
    ++rep.checked;
    if (!column.contains(p)) fail(to_string(p) + " is missing from the column product");
  }

  std::set<Monomial> formula;
  std::vector<int> a(static_cast<std::size_t>(i));
  for (int r = 0; r < i; ++r) a[static_cast<std::size_t>(r)] = r + 1;
  while (true) {
    Monomial product;
    Monomial closed_form;
    WeightVec w(static_cast<std::size_t>(n - 1));
    for (int r = 1; r <= i; ++r) {
      const int ar = a[static_cast<std::size_t>(r - 1)];
      const int c = -i + 2 * r - 1;
      Monomial factor = Monomial::y(1, c);
      for (Node j = 1; j < ar; ++j) {
        auto next = f_tilde(d, factor, j);
        if (!next) {
          fail("f-string dies inside B(varpi_1, " + std::to_string(c) + ")");
          break;
        }
        factor = *next;
      }
      MultisetTuple S;
      for (Node j = 1; j < ar; ++j) S.add(j, c - j - 1);
      if (factor != flag_letter(n, c, ar) || factor != Monomial::y(1, c) * z_product(d, S).inverse())
        fail("f(" + std::to_string(c) + ", " + std::to_string(ar) + ") mismatch");
      product *= factor;
      const int k = -i - ar + 2 * r;
      if (ar < n) closed_form *= Monomial::y(ar, k);
      if (ar > 1) closed_form *= Monomial::y(ar - 1, k - 1, -1);
      if (ar < n) ++w.at(ar);
      if (ar > 1) --w.at(ar - 1);
    }
    if (product != closed_form) fail("closed form differs from the f-string product");
    if (!base.contains(product)) fail(to_string(product) + " is not in B(varpi_i, 0)");
    if (weight(d, product) != w) fail("weight of " + to_string(product) + " is not e_a");
    formula.insert(product);

    int r = i - 1;
    while (r >= 0 && a[static_cast<std::size_t>(r)] == n - (i - 1 - r)) --r;
    if (r < 0) break;
    ++a[static_cast<std::size_t>(r)];
    for (int s = r + 1; s < i; ++s) a[static_cast<std::size_t>(s)] = a[static_cast<std::size_t>(s - 1)] + 1;
  }
  if (formula.size() != base.size())
    fail(std::to_string(formula.size()) + " wedge monomials against " +
         std::to_string(base.size()) + " crystal elements");
  if (!formula.count(Monomial::y(i, 0))) fail("y_{i,0} is not the image of v_1 ^ ... ^ v_i");
  return rep;
}

std::string render_partition_diagram(const DynkinDiagram& d, const MultisetTuple& R,
                                     const MultisetTuple& S) {
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (const auto* t : {&R, &S}) {
    for (const auto& [i, m] : t->entries()) {
      lo = std::min(lo, *m.min());
      hi = std::max(hi, *m.max());
    }
  }
  std::ostringstream out;
  if (lo > hi) return "(empty)\n";
  constexpr int width = 5;
  auto cell = [&](const std::string& s) {
    out << std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), ' ')
        << s;
  };
  cell("k\\i");
  for (Node i = 1; i <= d.rank(); ++i) cell(std::to_string(i));
  out << '\n';
  for (int k = hi; k >= lo; --k) {
    cell(std::to_string(k));
    for (Node i = 1; i <= d.rank(); ++i) {
      std::string s;
      if (int r = R.count(i, k); r > 0) s += r == 1 ? "o" : "o" + std::to_string(r);
      if (int c = S.count(i, k); c > 0) s += (s.empty() ? "" : "/") + std::to_string(c);
      if (s.empty()) s = d.same_parity(i, k) ? "." : "";
      cell(s);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace moncrystal
