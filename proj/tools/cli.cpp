#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "compat/convex_paths.hpp"
#include "compat/instance.hpp"
#include "compat/monotone_paths.hpp"
#include "compat/oracle.hpp"
#include "compat/polygon_paths.hpp"

namespace compat::cli {

namespace {

std::string join(const LabelSequence& seq) {
  std::string s;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(seq[k]);
  }
  return s;
}

LabelSequence parse_sequence(const std::string& text) {
  std::istringstream in(text);
  LabelSequence seq;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      seq.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("not a label: '" + tok + "'");
    }
  }
  return seq;
}

int report(std::ostream& out, const std::optional<LabelSequence>& witness) {
  if (witness) {
    out << "COMPATIBLE: " << join(*witness) << "\n";
    return kCompatible;
  }
  out << "NONE\n";
  return kNone;
}

std::size_t oracle_cap() {
  if (const char* env = std::getenv("COMPAT_ORACLE_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw InputError(std::string("COMPAT_ORACLE_CAP is not a number: ") + env);
    }
  }
  return kDefaultPathCap;
}

Constraint make_constraint(const Instance& inst, const std::string& name) {
  const std::string chosen = name.empty() ? (inst.polygon ? "polygon" : "free") : name;
  if (chosen == "polygon") return InsidePolygons{LabelledPolygon(inst.p), LabelledPolygon(inst.q)};
  if (chosen == "monotone") return MonotoneConstraint{};
  return FreeConstraint{};
}

std::optional<LabelSequence> decide(const Instance& inst, const std::string& method) {
  if (method == "convex") return compatible_paths_convex(inst.p, inst.q);
  if (method == "polygon") return compatible_paths_polygons(LabelledPolygon(inst.p), LabelledPolygon(inst.q));
  if (method == "monotone") return compatible_monotone_paths(inst.p, inst.q);
  const auto all = brute_force_compatible(inst.p, inst.q, make_constraint(inst, ""), oracle_cap());
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compatible noncrossing paths on labelled point sets", "compat"};
  app.require_subcommand(1);

  std::string file, constraint, verify, out_path, witness_text, method;
  int n = 0;
  bool all = false;

  auto* convex = app.add_subcommand("convex", "Linear-time decision for two convex point sets");
  convex->add_option("instance", file, "Instance JSON file")->required();
  auto* polygon = app.add_subcommand("polygon", "Decision for two simple polygons (listed order is the boundary)");
  polygon->add_option("instance", file, "Instance JSON file")->required();
  auto* monotone = app.add_subcommand("monotone", "Decision for compatible monotone paths");
  monotone->add_option("instance", file, "Instance JSON file")->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive reference decision (small n)");
  oracle->add_option("instance", file, "Instance JSON file")->required();
  oracle->add_option("--constraint", constraint, "free | polygon | monotone (default: polygon if the instance says so)")
      ->check(CLI::IsMember({"free", "polygon", "monotone"}));
  oracle->add_option("--verify", verify, "Check one label sequence instead of enumerating");
  oracle->add_flag("--all", all, "Print every compatible sequence");

  auto* gen = app.add_subcommand("gen-negative", "Write a convex instance with no compatible tree");
  gen->add_option("--n", n, "Number of points (>= 5)")->required();
  gen->add_option("--out", out_path, "Output file (default: stdout)");

  auto* render = app.add_subcommand("render", "Draw both point sets and a path as SVG");
  render->add_option("instance", file, "Instance JSON file")->required();
  render->add_option("--out", out_path, "SVG output file")->required();
  render->add_option("--witness", witness_text, "Label sequence to draw");
  render->add_option("--method", method, "Decide with convex | polygon | monotone | oracle and draw the witness")
      ->check(CLI::IsMember({"convex", "polygon", "monotone", "oracle"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*gen) {
      auto [p, q] = generate_negative_instance(n);
      const Instance inst{std::move(p), std::move(q), false};
      if (out_path.empty()) {
        out << dump_instance(inst);
      } else {
        save_instance(inst, out_path);
      }
      return 0;
    }

    const Instance inst = load_instance(file);
    if (*convex) return report(out, decide(inst, "convex"));
    if (*polygon) return report(out, decide(inst, "polygon"));
    if (*monotone) return report(out, decide(inst, "monotone"));
    if (*oracle) {
      const Constraint c = make_constraint(inst, constraint);
      if (!verify.empty()) {
        const LabelSequence seq = parse_sequence(verify);
        require_permutation(seq, inst.p.size());
        const bool ok = satisfies(inst.p, inst.q, c, seq);
        out << (ok ? "VALID" : "INVALID") << "\n";
        return ok ? kCompatible : kNone;
      }
      const auto found = brute_force_compatible(inst.p, inst.q, c, oracle_cap());
      if (found.empty()) return report(out, std::nullopt);
      for (const auto& seq : found) {
        report(out, seq);
        if (!all) break;
      }
      return kCompatible;
    }
    if (*render) {
      std::optional<LabelSequence> witness;
      if (!witness_text.empty()) {
        witness = parse_sequence(witness_text);
      } else if (!method.empty()) {
        witness = decide(inst, method);
      }
      std::ofstream svg(out_path);
      if (!svg) throw InputError("cannot write " + out_path);
      svg << render_svg(inst, witness);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace compat::cli
