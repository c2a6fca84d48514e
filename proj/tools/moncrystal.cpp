#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "moncrystal/crystal.hpp"
#include "moncrystal/error.hpp"
#include "moncrystal/hw.hpp"
#include "moncrystal/io.hpp"
#include "moncrystal/regularity.hpp"
#include "moncrystal/typea.hpp"
#include "moncrystal/verify.hpp"

using namespace moncrystal;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;

struct Common {
  std::string type;
  bool flip = false;
  std::string R;
  std::string S;
  std::string mu;
  std::string spec;
  std::size_t cap = kDefaultCap;
  std::string format = "json";
  std::size_t jobs = 1;
};

// The problem after merging --spec with the individual flags.
struct Problem {
  DynkinDiagram d;
  MultisetTuple R;
  std::optional<MultisetTuple> S;
  std::optional<WeightVec> mu;
};

Problem resolve(const Common& c) {
  ProblemSpec spec;
  if (!c.spec.empty()) spec = load_spec(c.spec);
  if (!c.type.empty()) spec.type = c.type;
  if (c.flip) spec.flip_parity = true;
  if (spec.type.empty()) throw ParseError("--type is required (or a spec file with \"type\")");
  Problem p{build_diagram(spec.type, spec.flip_parity), spec.R, spec.S, std::nullopt};
  if (!c.R.empty()) p.R = parse_tuple(c.R);
  if (!c.S.empty()) p.S = parse_tuple(c.S);
  if (!c.mu.empty())
    p.mu = parse_weight(c.mu, p.d.rank());
  else if (spec.mu)
    p.mu = *spec.mu;
  if (p.mu && static_cast<int>(p.mu->size()) != p.d.rank())
    throw ParseError("mu needs " + std::to_string(p.d.rank()) + " coordinates");
  return p;
}

void add_common(CLI::App* sub, Common& c, bool with_params) {
  sub->add_option("--type", c.type, "Diagram name: A1..A12, D4..D8, E6, E7, E8");
  sub->add_flag("--flip-parity", c.flip, "Swap the bipartition of the diagram");
  sub->add_option("--spec", c.spec, "JSON problem file");
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  if (with_params) {
    sub->add_option("--R", c.R, "Parameters, e.g. \"1:0,2;2:1\"");
    sub->add_option("--cap", c.cap, "Element budget for crystal generation");
    sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1, 256));
  }
}

void emit_crystal(const Crystal& B, const std::string& format) {
  if (format == "dot")
    std::cout << crystal_to_dot(B);
  else if (format == "text")
    std::cout << crystal_to_text(B);
  else
    std::cout << crystal_to_json(B).dump(2) << '\n';
}

json witness_json(const RegularityWitness& w) {
  return json{{"node", w.condition.base}, {"n", w.condition.n},
              {"q", to_json(w.condition.q)},  {"q_text", to_string(w.condition.q)},
              {"U", to_json(w.condition.U)},  {"value", w.value}};
}

json tuple_list(const std::vector<MultisetTuple>& v) {
  json out = json::array();
  for (const auto& t : v) out.push_back(to_json(t));
  return out;
}

WeightVec require_mu(const Problem& p) {
  if (!p.mu) throw ParseError("--mu is required");
  return *p.mu;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial crystals, product monomial crystals and their highest weights"};
  app.require_subcommand(1);
  Common c;

  Node node = 1;
  int param = 0;
  auto* fundamental_cmd = app.add_subcommand("fundamental", "The crystal B(varpi_i, c)");
  add_common(fundamental_cmd, c, false);
  fundamental_cmd->add_option("--node", node, "Node i")->required();
  fundamental_cmd->add_option("--c", param, "Parameter c (defaults to the parity of i)");

  auto* product_cmd = app.add_subcommand("product", "The product monomial crystal B(lambda, R)");
  add_common(product_cmd, c, true);

  auto* weights_cmd = app.add_subcommand("weights", "Weight multiplicities of B(lambda, R)");
  add_common(weights_cmd, c, true);
  weights_cmd->add_option("--mu", c.mu, "Only list the elements of this weight");

  auto* hw_cmd = app.add_subcommand("highest-weights", "Solutions of the multiset conditions");
  add_common(hw_cmd, c, true);
  hw_cmd->add_option("--mu", c.mu, "Weight mu, e.g. \"0,1\"");

  auto* check_cmd = app.add_subcommand("check-regular", "Regularity of y_R z_S^{-1}");
  add_common(check_cmd, c, true);
  check_cmd->add_option("--S", c.S, "Multisets S, same syntax as --R");
  bool all_failures = false;
  bool render = false;
  check_cmd->add_flag("--all", all_failures, "Report every failing condition");
  check_cmd->add_flag("--render", render, "Append the partition diagram (type A)");

  auto* enum_cmd = app.add_subcommand("enumerate-regular", "Regular S at weight mu");
  add_common(enum_cmd, c, true);
  enum_cmd->add_option("--mu", c.mu, "Weight mu");

  auto* classify_cmd = app.add_subcommand("classify", "Generic / maximally singular / well-spaced");
  add_common(classify_cmd, c, true);

  int steps = 2;
  std::string flag_params;
  auto* flag_cmd = app.add_subcommand("flag-crystal", "The flag crystal F_n(R) and its monomials");
  flag_cmd->add_option("--n", steps, "sl_n")->required()->check(CLI::Range(2, 13));
  flag_cmd->add_option("--R", flag_params, "Multiset R, e.g. \"0,0,2\"")->required();
  flag_cmd->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));

  AcceptanceOptions vopt;
  std::vector<int> only;
  auto* verify_cmd = app.add_subcommand("verify", "Run the cross-check suites");
  verify_cmd->add_option("--seed", vopt.seed, "Seed for the randomized suites");
  verify_cmd->add_option("--only", only, "Criterion numbers to run")
      ->check(CLI::Range(1, kCriterionCount));
  verify_cmd->add_option("--jobs", vopt.jobs, "Worker threads")->check(CLI::Range(1, 256));

  std::string output;
  std::string import_path;
  auto* export_cmd = app.add_subcommand("export", "Write B(lambda, R) to a file, or re-import one");
  add_common(export_cmd, c, true);
  export_cmd->add_option("--output,-o", output, "Destination file (stdout when omitted)");
  export_cmd->add_option("--import", import_path, "Read a crystal JSON file and check it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*fundamental_cmd) {
      const Problem p = resolve(c);
      if (fundamental_cmd->count("--c") == 0) param = p.d.parity(node);
      emit_crystal(fundamental(p.d, node, param), c.format);
    } else if (*product_cmd) {
      const Problem p = resolve(c);
      emit_crystal(product_crystal(p.d, ParamSet(p.d, p.R), c.cap), c.format);
    } else if (*weights_cmd) {
      const Problem p = resolve(c);
      const Crystal B = product_crystal(p.d, ParamSet(p.d, p.R), c.cap);
      json out{{"schema_version", kSchemaVersion}, {"type", p.d.name()}, {"size", B.size()}};
      if (p.mu) {
        json elems = json::array();
        for (const Monomial& m : weight_space(B, *p.mu))
          elems.push_back({{"monomial", to_json(m)}, {"text", to_string(m)},
                           {"S", to_json(decompose_S(p.d, p.R, m))}});
        out["mu"] = to_json(*p.mu);
        out["elements"] = elems;
      } else {
        json w = json::object();
        for (const auto& [mu, idx] : B.weight_index()) w[weight_key(mu)] = idx.size();
        out["multiplicities"] = w;
      }
      std::cout << out.dump(2) << '\n';
    } else if (*hw_cmd) {
      const Problem p = resolve(c);
      const HwProblem prob = make_hw_problem(p.d, ParamSet(p.d, p.R), require_mu(p));
      json list = json::array();
      for (const MultisetTuple& S : enumerate_highest_weights(prob, c.jobs)) {
        const Monomial y = y_product(p.R) * z_product(p.d, S).inverse();
        const MultisetTuple T = t_multisets(p.d, p.R, S);
        const FiniteDimData fd = finite_dim_test(p.d, p.R, S);
        json entry{{"S", to_json(S)},
                   {"T", to_json(T)},
                   {"monomial", to_json(y)},
                   {"text", to_string(y)},
                   {"highest_weight", is_highest_weight(S, T)},
                   {"finite_dimensional", fd.finite}};
        if (fd.finite) {
          json P = json::object();
          json Q = json::object();
          for (const auto& [i, poly] : fd.P) P[std::to_string(i)] = to_json(poly.doubled_roots());
          for (const auto& [i, poly] : fd.Q) Q[std::to_string(i)] = to_json(poly.doubled_roots());
          entry["P_doubled_roots"] = P;
          entry["Q_doubled_roots"] = Q;
        }
        list.push_back(entry);
      }
      json out{{"schema_version", kSchemaVersion}, {"type", p.d.name()},
               {"R", to_json(p.R)},                {"mu", to_json(prob.mu)},
               {"m", to_json(prob.m)},             {"mu_dominant", prob.dominant},
               {"count", list.size()},             {"highest_weights", list}};
      std::cout << out.dump(2) << '\n';
    } else if (*check_cmd) {
      const Problem p = resolve(c);
      if (!p.S) throw ParseError("--S (or \"S\" in the spec file) is required");
      if (!(y_product(p.R) * z_product(p.d, *p.S).inverse()).parity_valid(p.d))
        throw ParityViolation("y_R z_S^{-1} is not parity-valid for " + p.d.name());
      const RegularityResult res = is_regular(p.d, p.R, *p.S);
      json out{{"schema_version", kSchemaVersion}, {"type", p.d.name()},
               {"flip_parity", p.d.flipped_parity()},
               {"monomial", to_string(y_product(p.R) * z_product(p.d, *p.S).inverse())},
               {"regular", res.regular}};
      out["witness"] = res.witness ? witness_json(*res.witness) : json(nullptr);
      if (all_failures) {
        json all = json::array();
        for (const auto& w : failing_conditions(p.d, p.R, *p.S)) all.push_back(witness_json(w));
        out["failing"] = all;
      }
      std::cout << out.dump(2) << '\n';
      if (render) std::cout << render_partition_diagram(p.d, p.R, *p.S);
    } else if (*enum_cmd) {
      const Problem p = resolve(c);
      const auto found = enumerate_by_regularity(p.d, p.R, require_mu(p), c.jobs);
      json out{{"schema_version", kSchemaVersion}, {"type", p.d.name()}, {"R", to_json(p.R)},
               {"mu", to_json(*p.mu)}, {"count", found.size()}, {"S", tuple_list(found)}};
      std::cout << out.dump(2) << '\n';
    } else if (*classify_cmd) {
      const Problem p = resolve(c);
      const auto cls = classify_params(p.d, ParamSet(p.d, p.R), c.cap);
      json out{{"schema_version", kSchemaVersion},
               {"type", p.d.name()},
               {"R", to_json(p.R)},
               {"well_spaced", cls.well_spaced},
               {"generic", cls.generic},
               {"maximally_singular", cls.maximally_singular},
               {"crystal_size", cls.crystal_size},
               {"tensor_size", cls.tensor_size},
               {"component_size", cls.component_size},
               {"gap_bound", cls.gap_bound}};
      std::cout << out.dump(2) << '\n';
    } else if (*flag_cmd) {
      const MultisetTuple wrapped = parse_tuple("1:" + flag_params);
      const Multiset& R = wrapped.at(1);
      const DynkinDiagram d = flag_diagram(steps);
      ParamSet(d, wrapped);
      const auto flags = enumerate_flags(steps, R);
      if (c.format == "text") {
        for (const Flag& f : flags) {
          std::cout << "(";
          for (int l = 0; l <= f.steps(); ++l) std::cout << (l ? ", " : "") << to_string(f.step(l));
          std::cout << ")  ->  " << to_string(flag_to_monomial(f, R)) << '\n';
        }
      } else {
        json table = json::array();
        for (const Flag& f : flags) {
          json st = json::array();
          for (int l = 0; l <= f.steps(); ++l) st.push_back(to_json(f.step(l)));
          const Monomial m = flag_to_monomial(f, R);
          table.push_back({{"flag", st}, {"monomial", to_json(m)}, {"text", to_string(m)}});
        }
        const VerifyReport rep = verify_flag_isomorphism(steps, R);
        json out{{"schema_version", kSchemaVersion}, {"n", steps}, {"R", to_json(R)},
                 {"size", flags.size()}, {"isomorphism", rep.ok}, {"flags", table}};
        if (!rep.ok) out["failure"] = rep.failure;
        std::cout << out.dump(2) << '\n';
      }
    } else if (*verify_cmd) {
      vopt.only = std::set<int>(only.begin(), only.end());
      std::cout << "seed " << vopt.seed << '\n';
      bool ok = true;
      for (int id = 1; id <= kCriterionCount; ++id) {
        if (!vopt.only.empty() && !vopt.only.count(id)) continue;
        const CriterionResult r = run_criterion(id, vopt);
        std::cout << format_result(r) << std::endl;
        ok = ok && r.pass;
      }
      return ok ? 0 : 1;
    } else if (*export_cmd) {
      if (!import_path.empty()) {
        std::ifstream in(import_path);
        if (!in) throw ParseError("cannot open " + import_path);
        json j;
        try {
          j = json::parse(in);
        } catch (const json::exception& e) {
          throw ParseError(import_path + ": " + e.what());
        }
        const Crystal B = crystal_from_json(j);
        std::cout << json{{"imported", import_path}, {"type", B.diagram().name()},
                          {"size", B.size()}, {"round_trip", crystal_to_json(B) == j}}
                         .dump(2)
                  << '\n';
        return 0;
      }
      const Problem p = resolve(c);
      const Crystal B = product_crystal(p.d, ParamSet(p.d, p.R), c.cap);
      std::string text;
      if (c.format == "dot")
        text = crystal_to_dot(B);
      else if (c.format == "text")
        text = crystal_to_text(B);
      else
        text = crystal_to_json(B).dump(2) + "\n";
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(output);
        if (!out) throw ParseError("cannot write " + output);
        out << text;
      }
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}
