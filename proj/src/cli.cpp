#include "kripke/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "kripke/catalog.hpp"
#include "kripke/clone.hpp"
#include "kripke/correspondence.hpp"
#include "kripke/many_valued.hpp"
#include "kripke/model.hpp"
#include "kripke/validity.hpp"

namespace kripke::cli {

namespace {

constexpr const char* kFooter = R"(Output formats:
  eval        'true' / 'false' for one world; 'truth set: W...' otherwise.
  valid/equiv '# verdict: valid' or '# verdict: counterexample' followed by
              '# key: value' lines and, for a counterexample, the model in
              the model text format. The whole report parses as a model file.
  godel-fan   the fan model in the model text format with '#' header lines.
  frames      one block per frame: '# frame INDEX' then worlds/order lines.
  mv eval     'value tail=...', 'component N = W...' lines, 'designated: yes|no'.
  clone       'DEFINABLE' + 'witness: F', or 'NOT-DEFINABLE' + 'closure size: N'
              and one 'member {W...} F' line per closure member.
Exit codes: 0 positive verdict, 1 negative verdict/counterexample, 2 error.)";

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_counterexample(std::ostream& out, Logic logic, const ValidityVerdict& verdict) {
  out << "# logic: " << logic_name(logic) << '\n';
  out << "# bound: " << verdict.bound << '\n';
  if (verdict.valid()) return;
  const Counterexample& ce = *verdict.counterexample;
  out << "# frame: " << ce.frame_index << '\n';
  out << "# assignment: " << ce.assignment << '\n';
  out << "# world: " << ce.model.frame().world_name(ce.world) << '\n';
  if (verdict.failing_direction) out << "# failing direction: " << render(*verdict.failing_direction) << '\n';
  out << render_model(ce.model);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kripke semantics, value-space and definability workbench", "kripke"};
  app.footer(kFooter);
  app.require_subcommand(1);

  SearchOptions search;
  app.add_option("--threads", search.threads, "worker threads for searches")->check(CLI::PositiveNumber);
  app.add_option("--ceiling", search.ceiling, "largest frame/assignment search space to attempt");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a formula in a model file");
  std::string model_path;
  std::string world;
  std::string formula_text;
  bool close_up = false;
  eval->add_option("--model", model_path, "model file")->required();
  eval->add_option("--world", world, "world name (omit to print the truth set)");
  eval->add_flag("--close-up", close_up, "replace atom sets by their upward closures");
  eval->add_option("formula", formula_text, "formula")->required();

  // valid / equiv
  std::string logic_text = "ipl";
  std::size_t max_worlds = 3;
  std::string second_text;
  auto* valid = app.add_subcommand("valid", "bounded validity check");
  valid->add_option("--logic", logic_text, "cpl, ipl or gdl")->required();
  valid->add_option("--max-worlds", max_worlds, "largest frame size searched")->required();
  valid->add_option("formula", formula_text, "formula")->required();
  auto* equiv = app.add_subcommand("equiv", "bounded equivalence check");
  equiv->add_option("--logic", logic_text, "cpl, ipl or gdl")->required();
  equiv->add_option("--max-worlds", max_worlds, "largest frame size searched")->required();
  equiv->add_option("formula", formula_text, "first formula")->required();
  equiv->add_option("other", second_text, "second formula")->required();

  std::size_t n = 0;
  auto* fan = app.add_subcommand("godel-fan", "fan model refuting the pigeonhole formula");
  fan->add_option("n", n, "number of leaves (>= 2)")->required();
  auto* pigeon = app.add_subcommand("pigeonhole", "print the pigeonhole formula");
  pigeon->add_option("n", n, "largest atom index (>= 1)")->required();

  std::size_t count = 0;
  bool up_to_iso = false;
  auto* frames = app.add_subcommand("frames", "print catalog frames");
  frames->add_option("--count", count, "number of frames")->required();
  frames->add_flag("--up-to-iso", up_to_iso, "skip frames isomorphic to earlier ones");

  auto* mv = app.add_subcommand("mv", "value-space commands");
  mv->require_subcommand(1);
  auto* mv_eval = mv->add_subcommand("eval", "extend a valuation to a formula");
  std::string valuation_path;
  mv_eval->add_option("--valuation", valuation_path, "valuation file")->required();
  mv_eval->add_option("formula", formula_text, "formula")->required();
  auto* mv_check = mv->add_subcommand("check-lemma3", "randomized valuation/model correspondence check");
  CorrespondenceOptions corr;
  mv_check->add_option("--depth", corr.depth, "formula depth")->required();
  mv_check->add_option("--frames", corr.frames, "catalog frames used")->required()->check(CLI::PositiveNumber);
  mv_check->add_option("--trials", corr.trials, "number of trials")->required()->check(CLI::PositiveNumber);
  mv_check->add_option("--seed", corr.seed, "random seed")->required();

  auto* clone = app.add_subcommand("clone", "decide definability of a target on a model");
  std::string connectives_text;
  std::string target_text;
  std::string generators_text;
  clone->add_option("--model", model_path, "model file")->required();
  clone->add_option("--connectives", connectives_text, "comma list of neg,and,or,imp")->required();
  clone->add_option("--target", target_text, "target formula")->required();
  clone->add_option("--generators", generators_text, "comma list of atoms and T");

  std::vector<std::string> argv_storage{"kripke"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPositive : kFailure;
  }

  try {
    if (eval->parsed()) {
      const Model model = load_model(model_path, close_up);
      const Formula f = parse(formula_text);
      if (!world.empty()) {
        const bool holds = forces(model, std::string_view(world), f);
        out << (holds ? "true" : "false") << '\n';
        return holds ? kPositive : kNegative;
      }
      const Upset set = truth_set(model, f);
      out << "truth set: " << format_worlds(model.frame(), set.bits()) << '\n';
      return set.bits() == model.frame().all() ? kPositive : kNegative;
    }

    if (valid->parsed() || equiv->parsed()) {
      const Logic logic = parse_logic(logic_text);
      const Formula f = parse(formula_text);
      const ValidityVerdict verdict = valid->parsed()
                                          ? check_validity(f, logic, max_worlds, search)
                                          : check_equivalence(f, parse(second_text), logic, max_worlds, search);
      out << "# verdict: " << (verdict.valid() ? "valid" : "counterexample") << '\n';
      print_counterexample(out, logic, verdict);
      return verdict.valid() ? kPositive : kNegative;
    }

    if (fan->parsed()) {
      const GodelFan g = godel_fan(n);
      const bool root_forces = forces(g.model, g.root, g.formula);
      out << "# formula: " << render(g.formula) << '\n';
      out << "# root: " << g.model.frame().world_name(g.root) << '\n';
      out << "# root forces formula: " << (root_forces ? "yes" : "no") << '\n';
      out << render_model(g.model);
      return root_forces ? kNegative : kPositive;
    }

    if (pigeon->parsed()) {
      out << render(pigeonhole_formula(n)) << '\n';
      return kPositive;
    }

    if (frames->parsed()) {
      bool first = true;
      for (std::size_t index : enumerate_frame_indices(count, up_to_iso)) {
        if (!first) out << '\n';
        first = false;
        out << "# frame " << index << '\n' << render_frame(frame_at(index));
      }
      return kPositive;
    }

    if (mv_eval->parsed()) {
      const Valuation v = load_valuation(valuation_path);
      const ValueSeq x = extend_valuation(v, parse(formula_text));
      const bool designated = is_designated(x);
      out << render_value(x) << "designated: " << (designated ? "yes" : "no") << '\n';
      return designated ? kPositive : kNegative;
    }

    if (mv_check->parsed()) {
      const CorrespondenceReport report = check_correspondence(corr);
      out << render_correspondence_report(corr, report);
      return report.ok() ? kPositive : kNegative;
    }

    if (clone->parsed()) {
      const Model model = load_model(model_path);
      std::set<Connective> ops;
      for (const auto& name : split_commas(connectives_text)) ops.insert(parse_connective(name));
      std::optional<std::vector<std::string>> gens;
      if (!generators_text.empty()) gens = split_commas(generators_text);
      const CloneProblem problem = make_clone_problem(model, ops, parse(target_text), gens);
      const CloneCertificate cert = check_definable(problem);
      if (cert.definable) {
        out << "DEFINABLE\nwitness: " << render(*cert.witness) << '\n';
        return kPositive;
      }
      out << "NOT-DEFINABLE\nclosure size: " << cert.closure.size() << '\n';
      for (const auto& m : cert.closure)
        out << "member {" << format_worlds(model.frame(), m.set.bits()) << "} " << render(m.witness) << '\n';
      return kNegative;
    }
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  err << app.help();
  return kFailure;
}

}  // namespace kripke::cli
