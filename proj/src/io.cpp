#include "moncrystal/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "moncrystal/error.hpp"

namespace moncrystal {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(const std::string& s, const std::string& context) {
  int v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc{} || ptr != last)
    throw ParseError("expected an integer in " + context + ", got '" + s + "'");
  return v;
}

Node parse_node(const std::string& s, const std::string& context) {
  const int i = parse_int(s, context);
  if (i < 1) throw ParseError("node labels start at 1 in " + context);
  return i;
}

template <class Tag>
json vec_to_json(const IntVec<Tag>& v) {
  return json(v.coeffs);
}

}  // namespace

MultisetTuple parse_tuple(const std::string& text) {
  MultisetTuple out;
  if (trim(text).empty()) return out;
  for (const std::string& block : split(text, ';')) {
    if (block.empty()) continue;
    const auto colon = block.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected node:values in '" + block + "'");
    const Node i = parse_node(trim(block.substr(0, colon)), "'" + block + "'");
    const std::string values = trim(block.substr(colon + 1));
    if (values.empty()) continue;
    for (const std::string& v : split(values, ',')) out.add(i, parse_int(v, "'" + block + "'"));
  }
  return out;
}

WeightVec parse_weight(const std::string& text, int rank) {
  std::vector<int> c;
  for (const std::string& v : split(text, ',')) c.push_back(parse_int(v, "weight '" + text + "'"));
  if (static_cast<int>(c.size()) != rank)
    throw ParseError("weight '" + text + "' has " + std::to_string(c.size()) +
                     " coordinates, expected " + std::to_string(rank));
  return WeightVec(std::move(c));
}

json to_json(const Multiset& m) { return json(m.values()); }

json to_json(const MultisetTuple& t) {
  json out = json::object();
  for (const auto& [i, m] : t.entries()) out[std::to_string(i)] = to_json(m);
  return out;
}

json to_json(const WeightVec& w) { return vec_to_json(w); }
json to_json(const RootVec& v) { return vec_to_json(v); }

json to_json(const Monomial& p) {
  json out = json::array();
  for (const Term& t : p.terms()) out.push_back({t.node, t.k, t.exp});
  return out;
}

MultisetTuple tuple_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("a multiset tuple must be a JSON object");
  MultisetTuple out;
  for (const auto& [key, values] : j.items()) {
    const Node i = parse_node(key, "tuple key");
    if (!values.is_array()) throw ParseError("values for node " + key + " must be an array");
    for (const auto& v : values) {
      if (!v.is_number_integer()) throw ParseError("non-integer value at node " + key);
      out.add(i, v.get<int>());
    }
  }
  return out;
}

Monomial monomial_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("a monomial must be an array of [i, k, e]");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
        !t[1].is_number_integer() || !t[2].is_number_integer())
      throw ParseError("monomial factor must be [i, k, e]");
    terms.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  }
  return Monomial::from_terms(std::move(terms));
}

ProblemSpec parse_spec(const json& j) {
  if (!j.is_object()) throw ParseError("problem spec must be a JSON object");
  ProblemSpec spec;
  if (!j.contains("type") || !j["type"].is_string()) throw ParseError("spec needs a string 'type'");
  spec.type = j["type"].get<std::string>();
  if (j.contains("flip_parity")) {
    if (!j["flip_parity"].is_boolean()) throw ParseError("'flip_parity' must be a boolean");
    spec.flip_parity = j["flip_parity"].get<bool>();
  }
  if (j.contains("R")) spec.R = tuple_from_json(j["R"]);
  if (j.contains("S")) spec.S = tuple_from_json(j["S"]);
  if (j.contains("mu")) {
    if (!j["mu"].is_array()) throw ParseError("'mu' must be an array");
    std::vector<int> c;
    for (const auto& v : j["mu"]) {
      if (!v.is_number_integer()) throw ParseError("'mu' entries must be integers");
      c.push_back(v.get<int>());
    }
    spec.mu = WeightVec(std::move(c));
  }
  return spec;
}

ProblemSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return parse_spec(json::parse(in));
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json spec_to_json(const ProblemSpec& spec) {
  json out{{"schema_version", kSchemaVersion},
           {"type", spec.type},
           {"flip_parity", spec.flip_parity},
           {"R", to_json(spec.R)}};
  if (spec.S) out["S"] = to_json(*spec.S);
  if (spec.mu) out["mu"] = to_json(*spec.mu);
  return out;
}

std::string weight_key(const WeightVec& w) {
  std::string out;
  for (std::size_t k = 0; k < w.coeffs.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(w.coeffs[k]);
  }
  return out;
}

json crystal_to_json(const Crystal& c) {
  json elements = json::array();
  for (const Monomial& p : c.elements()) elements.push_back(to_json(p));
  json edges = json::array();
  for (const Edge& e : c.edges()) edges.push_back({e.src, e.label, e.dst});
  json weights = json::object();
  for (const auto& [w, idx] : c.weight_index()) weights[weight_key(w)] = idx;
  return json{{"schema_version", kSchemaVersion},
              {"type", c.diagram().name()},
              {"flip_parity", c.diagram().flipped_parity()},
              {"elements", std::move(elements)},
              {"edges", std::move(edges)},
              {"weights", std::move(weights)},
              {"highest", c.highest()}};
}

Crystal crystal_from_json(const json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
      throw ParseError("unsupported crystal schema_version");
    const DynkinDiagram d =
        build_diagram(j.at("type").get<std::string>(), j.value("flip_parity", false));
    std::vector<Monomial> elements;
    for (const auto& p : j.at("elements")) elements.push_back(monomial_from_json(p));
    const std::size_t listed = elements.size();
    Crystal c(d, std::move(elements));
    if (c.size() != listed) throw ParseError("crystal JSON lists duplicate elements");

    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0), e.at(1), e.at(2)});
    if (edges != c.edges()) throw ParseError("crystal JSON edges disagree with the elements");
    if (j.at("highest").get<std::vector<std::size_t>>() != c.highest())
      throw ParseError("crystal JSON highest elements disagree with the elements");
    for (const auto& [w, idx] : c.weight_index()) {
      const std::string key = weight_key(w);
      if (!j.at("weights").contains(key) ||
          j.at("weights").at(key).get<std::vector<std::size_t>>() != idx)
        throw ParseError("crystal JSON weights disagree at " + key);
    }
    if (j.at("weights").size() != c.weight_index().size())
      throw ParseError("crystal JSON lists extra weights");
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed crystal JSON: ") + e.what());
  }
}

std::string crystal_to_dot(const Crystal& c, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t v = 0; v < c.size(); ++v)
    out << "  n" << v << " [label=\"" << to_string(c.elements()[v]) << "\"];\n";
  for (const Edge& e : c.edges())
    out << "  n" << e.src << " -> n" << e.dst << " [label=\"f_" << e.label << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string crystal_to_text(const Crystal& c) {
  std::ostringstream out;
  out << c.diagram().name() << (c.diagram().flipped_parity() ? " (flipped parity)" : "") << ", "
      << c.size() << " elements\n";
  for (std::size_t v = 0; v < c.size(); ++v)
    out << "  [" << v << "] " << to_string(c.elements()[v]) << "  wt=(" << weight_key(c.weights()[v])
        << ")\n";
  for (const Edge& e : c.edges()) out << "  " << e.src << " -f_" << e.label << "-> " << e.dst << "\n";
  return out.str();
}

}  // namespace moncrystal
