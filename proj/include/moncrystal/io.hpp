#pragma once

// Text and JSON forms of parameters, monomials and crystals, and DOT export.
//
// R syntax:  "node:v1,v2,...;node:..."   e.g. "1:0,2;2:1"
// mu syntax: "a,b,c" in fundamental-weight coordinates
// JSON problem files:
//   {"schema_version": 1, "type": "A8", "flip_parity": true,
//    "R": {"2": [4, 4], ...}, "S": {...}, "mu": [...]}

#include <optional>
#include <string>

#include <json.hpp>

#include "moncrystal/cartan.hpp"
#include "moncrystal/crystal.hpp"
#include "moncrystal/monomial.hpp"

namespace moncrystal {

inline constexpr int kSchemaVersion = 1;

using json = nlohmann::json;

/// Throws ParseError.
MultisetTuple parse_tuple(const std::string& text);
WeightVec parse_weight(const std::string& text, int rank);

struct ProblemSpec {
  std::string type;
  bool flip_parity = false;
  MultisetTuple R;
  std::optional<MultisetTuple> S;
  std::optional<WeightVec> mu;
};

/// Reads the JSON problem form; unknown keys are ignored. Throws ParseError.
ProblemSpec parse_spec(const json& j);
ProblemSpec load_spec(const std::string& path);
json spec_to_json(const ProblemSpec& spec);

json to_json(const Multiset& m);
json to_json(const MultisetTuple& t);
json to_json(const WeightVec& w);
json to_json(const RootVec& v);
json to_json(const Monomial& p);  ///< [[i, k, e], ...]

MultisetTuple tuple_from_json(const json& j);
Monomial monomial_from_json(const json& j);

/// {"schema_version", "type", "flip_parity", "elements", "edges": [[src, i, dst]],
///  "weights": {"w1,w2": [indices]}, "highest": [indices]}
json crystal_to_json(const Crystal& c);
/// Rebuilds the crystal from its elements and checks the stored edges,
/// weights and highest elements against the recomputed ones. Throws ParseError.
Crystal crystal_from_json(const json& j);

/// Graphviz digraph; nodes labelled by monomials, edges by "f_i".
std::string crystal_to_dot(const Crystal& c, const std::string& name = "crystal");

/// Plain text listing: one element per line with its weight, then the edges.
std::string crystal_to_text(const Crystal& c);

std::string weight_key(const WeightVec& w);

}  // namespace moncrystal
