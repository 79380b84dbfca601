#include "mondec_cli/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "mondec/algorithms.hpp"
#include "mondec/decider.hpp"
#include "mondec/generators.hpp"
#include "mondec/relation_ops.hpp"
#include "mondec/text_format.hpp"

namespace mondec::cli {

namespace {

using nlohmann::ordered_json;

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot write " + path);
  file << text;
  if (!file) throw Error("failed writing " + path);
}

Automaton load(const std::string& path) {
  try {
    return load_automaton(path);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

ordered_json word_json(const Alphabet& alphabet, const Word& w) {
  ordered_json arr = ordered_json::array();
  for (Symbol s : w) arr.push_back(alphabet.name(s));
  return arr;
}

ordered_json certificate_json(const Certificate& c, const Alphabet& alphabet) {
  return {{"q", c.q},
          {"qp", c.qp},
          {"p", c.p},
          {"r", c.r},
          {"w0", word_json(alphabet, c.w0)},
          {"v0", word_json(alphabet, c.v0)},
          {"w1", word_json(alphabet, c.w1)},
          {"v1", word_json(alphabet, c.v1)},
          {"w", word_json(alphabet, c.w)},
          {"v", word_json(alphabet, c.v)}};
}

Alphabet parse_alphabet_option(const std::string& text) {
  std::vector<std::string> names;
  std::string current;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') {
      if (!current.empty()) names.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty()) names.push_back(current);
  return Alphabet(names, "_");
}

struct DecideArgs {
  std::string input;
  std::string certificate_path;
  bool json = false;
  std::optional<std::size_t> family;
  bool validate = false;
  unsigned threads = 1;
  bool timing = false;
};

int cmd_decide(const DecideArgs& args, std::ostream& out) {
  Automaton relation = load(args.input);
  if (relation.arity() < 2) throw Error("decide needs a relation of arity at least 2");
  const auto start = std::chrono::steady_clock::now();
  RelationDecision result = decide_nary(relation, {args.threads});
  const double millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const InducedDecision* failing = result.failing();
  const Certificate* certificate = failing ? &*failing->decision.certificate : nullptr;
  const Alphabet* alphabet = failing ? &failing->not_sim.alphabet() : nullptr;

  std::optional<bool> validated;
  if (certificate && args.validate) {
    CertificateCheck check = validate_certificate(*certificate, failing->not_sim, args.family.value_or(10));
    if (!check) throw Error("certificate failed validation: " + check.failure);
    validated = true;
  }
  std::vector<Word> family;
  if (certificate && args.family) family = expand_family(*certificate, *args.family);
  if (certificate && !args.certificate_path.empty())
    write_text(print_certificate(*certificate, *alphabet), args.certificate_path, out);

  std::size_t quadruples = 0;
  for (const auto& part : result.per_k) quadruples += part.decision.stats.quadruples_examined;

  if (args.json) {
    ordered_json report;
    report["verdict"] = std::string(to_string(result.verdict));
    report["failing_k"] = result.failing_k ? ordered_json(*result.failing_k) : ordered_json(nullptr);
    report["certificate"] = certificate ? certificate_json(*certificate, *alphabet) : ordered_json(nullptr);
    ordered_json per_k = ordered_json::array();
    for (const auto& part : result.per_k)
      per_k.push_back({{"k", part.k},
                       {"verdict", std::string(to_string(part.decision.verdict))},
                       {"not_sim_states", part.not_sim.num_states()},
                       {"quadruples_examined", part.decision.stats.quadruples_examined}});
    ordered_json stats = {{"input_states", relation.num_states()},
                          {"arity", relation.arity()},
                          {"quadruples_examined", quadruples},
                          {"per_k", per_k}};
    if (args.timing) stats["wall_time_ms"] = millis;
    report["stats"] = stats;
    if (args.family) {
      ordered_json words = ordered_json::array();
      for (const auto& w : family) words.push_back(word_json(*alphabet, w));
      report["family"] = certificate ? words : ordered_json(nullptr);
    }
    if (validated) report["validated"] = *validated;
    out << report.dump(2) << '\n';
  } else {
    out << "verdict: " << to_string(result.verdict) << '\n';
    if (relation.arity() > 2) {
      out << "k\tstates\tverdict\n";
      for (const auto& part : result.per_k)
        out << part.k << '\t' << part.not_sim.num_states() << '\t' << to_string(part.decision.verdict) << '\n';
      if (result.failing_k) out << "failing k: " << *result.failing_k << '\n';
    }
    out << "input states: " << relation.num_states() << '\n';
    if (relation.arity() == 2) out << "R^≁ states: " << result.per_k.front().not_sim.num_states() << '\n';
    out << "quadruples examined: " << quadruples << '\n';
    if (args.timing) out << "wall time: " << millis << " ms\n";
    if (certificate) {
      out << "certificate:\n";
      std::istringstream lines(print_certificate(*certificate, *alphabet));
      for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
    }
    if (validated) out << "certificate validated\n";
    if (certificate && args.family) {
      out << "family:\n";
      for (std::size_t i = 0; i < family.size(); ++i)
        out << "  x" << i << " = " << format_word(*alphabet, family[i]) << '\n';
    }
  }
  return result.verdict == Verdict::decomposable ? exit_decomposable : exit_not_decomposable;
}

void emit_instance(const Automaton& relation, const std::optional<ReductionInstance>& instance,
                   const std::string& path, std::ostream& out) {
  if (path.empty()) {
    if (instance) {
      out << "# ground_truth " << to_string(instance->ground_truth) << '\n';
      out << "# provenance " << instance->provenance << '\n';
    }
    out << print_automaton(relation);
    return;
  }
  save_automaton(relation, path);
  if (instance)
    write_text("ground_truth " + std::string(to_string(instance->ground_truth)) + "\nprovenance " +
                   instance->provenance + "\n",
               path + ".truth", out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monadic decomposability of synchronized regular relations"};
  app.name("mondec");
  app.require_subcommand(1);

  DecideArgs decide;
  auto* decide_cmd = app.add_subcommand("decide", "Decide whether a relation is monadic decomposable");
  decide_cmd->add_option("file", decide.input, "Automaton file")->required();
  decide_cmd->add_option("--certificate", decide.certificate_path, "Write the certificate document here");
  decide_cmd->add_flag("--json", decide.json, "Print a JSON report");
  decide_cmd->add_option("--family", decide.family, "Also print the witness family x_0..x_k");
  decide_cmd->add_flag("--validate", decide.validate, "Re-validate the certificate before printing");
  decide_cmd->add_option("--threads", decide.threads, "Worker threads for the quadruple search")
      ->check(CLI::PositiveNumber);
  decide_cmd->add_flag("--timing", decide.timing, "Report wall time");

  std::uint64_t seed = 1;
  std::string out_path;
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances with ground truth");
  gen_cmd->require_subcommand(1);

  std::size_t nfa_states = 3;
  double nfa_density = 0.6;
  std::string nfa_file;
  auto* gen_univ = gen_cmd->add_subcommand("universality", "Reduction from NFA universality");
  gen_univ->add_option("--states", nfa_states, "States of the random NFA")->check(CLI::PositiveNumber);
  gen_univ->add_option("--density", nfa_density, "Transition density of the random NFA")->check(CLI::Range(0.0, 1.0));
  gen_univ->add_option("--nfa", nfa_file, "Use this arity-1 automaton instead of a random one");

  std::size_t vertices = 8;
  double edge_probability = 0.3;
  std::optional<std::size_t> source, target;
  auto* gen_dag = gen_cmd->add_subcommand("dag", "Reduction from DAG reachability");
  gen_dag->add_option("--vertices", vertices, "Number of vertices")->check(CLI::PositiveNumber);
  gen_dag->add_option("--edge-probability", edge_probability, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gen_dag->add_option("--source", source, "Source vertex (default 0)");
  gen_dag->add_option("--target", target, "Target vertex (default vertices-1)");

  std::string canonical_name;
  std::string alphabet_text = "a,b";
  auto* gen_canon = gen_cmd->add_subcommand("canonical", "equality, strict_prefix or equal_length");
  gen_canon->add_option("name", canonical_name, "Relation name")->required();

  RandomAutomatonOptions random_options;
  bool random_nfa = false;
  auto* gen_random = gen_cmd->add_subcommand("random", "Seeded random automaton");
  gen_random->add_option("--arity", random_options.arity, "Arity")->check(CLI::PositiveNumber);
  gen_random->add_option("--states", random_options.states, "States")->check(CLI::PositiveNumber);
  gen_random->add_option("--density", random_options.density, "Transition density")->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("--final-probability", random_options.final_probability, "Final state probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_random->add_flag("--nfa", random_nfa, "Allow nondeterminism");

  for (auto* sub : {gen_univ, gen_dag, gen_canon, gen_random}) {
    sub->add_option("--seed", seed, "Random seed");
    sub->add_option("--out", out_path, "Output file (a .truth sidecar is written next to it)");
    sub->add_option("--alphabet", alphabet_text, "Base symbols, comma separated");
  }

  std::vector<std::string> op_inputs;
  std::string bool_op = "and";
  std::size_t tape = 1;
  std::size_t split = 1;
  auto* ops_cmd = app.add_subcommand("ops", "Relation operations");
  ops_cmd->require_subcommand(1);
  auto* op_notsim = ops_cmd->add_subcommand("notsim", "Inequivalence relation R^≁ of a binary relation");
  auto* op_complement = ops_cmd->add_subcommand("complement", "Complement relative to valid paddings");
  auto* op_product = ops_cmd->add_subcommand("product", "Boolean product of two automata");
  op_product->add_option("--op", bool_op, "and | or")->check(CLI::IsMember({"and", "or"}));
  auto* op_project = ops_cmd->add_subcommand("project", "Existential projection of one tape");
  op_project->add_option("--tape", tape, "Tape to remove, 1-based")->check(CLI::PositiveNumber);
  auto* op_minimize = ops_cmd->add_subcommand("minimize", "Minimal complete DFA");
  auto* op_induced = ops_cmd->add_subcommand("induced", "Induced binary relation R_k");
  op_induced->add_option("k", split, "Split position, 1..n-1")->required();
  for (auto* sub : {op_notsim, op_complement, op_product, op_project, op_minimize, op_induced}) {
    sub->add_option("files", op_inputs, "Input automata")->required();
    sub->add_option("--out", out_path, "Output file");
  }

  std::string dot_input;
  bool dot_trim = false;
  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering of an automaton");
  dot_cmd->add_option("file", dot_input, "Automaton file")->required();
  dot_cmd->add_flag("--trim", dot_trim, "Drop useless states first");
  dot_cmd->add_option("--out", out_path, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_error;
  }

  try {
    if (decide_cmd->parsed()) return cmd_decide(decide, out);

    if (gen_cmd->parsed()) {
      Alphabet alphabet = parse_alphabet_option(alphabet_text);
      if (gen_univ->parsed()) {
        Automaton nfa = nfa_file.empty() ? random_automaton(seed, alphabet,
                                                            {.arity = 1,
                                                             .states = nfa_states,
                                                             .density = nfa_density,
                                                             .deterministic = false,
                                                             .final_probability = 0.5})
                                         : load(nfa_file);
        ReductionInstance inst = universality_reduction(nfa);
        emit_instance(inst.relation, inst, out_path, out);
      } else if (gen_dag->parsed()) {
        Dag dag = random_dag(seed, vertices, edge_probability);
        ReductionInstance inst = dag_reduction(dag, source.value_or(0), target.value_or(vertices - 1));
        emit_instance(inst.relation, inst, out_path, out);
      } else if (gen_canon->parsed()) {
        Automaton r = canonical(canonical_name, alphabet);
        ReductionInstance inst{r, Verdict::not_decomposable, "canonical relation " + canonical_name};
        emit_instance(r, inst, out_path, out);
      } else {
        random_options.deterministic = !random_nfa;
        emit_instance(random_automaton(seed, alphabet, random_options), std::nullopt, out_path, out);
      }
      return 0;
    }

    if (ops_cmd->parsed()) {
      auto expect_inputs = [&](std::size_t n) {
        if (op_inputs.size() != n)
          throw Error("expected " + std::to_string(n) + " input file" + (n == 1 ? "" : "s"));
      };
      std::optional<Automaton> result;
      if (op_product->parsed()) {
        expect_inputs(2);
        Automaton a = load(op_inputs[0]);
        Automaton b = load(op_inputs[1]);
        if (!a.compatible_with(b)) throw Error("operands differ in arity or alphabet");
        result = boolean_product(a, b, bool_op == "and" ? BoolOp::conjunction : BoolOp::disjunction);
      } else {
        expect_inputs(1);
        Automaton a = load(op_inputs[0]);
        if (op_notsim->parsed()) {
          result = build_not_sim(a);
        } else if (op_complement->parsed()) {
          result = complement_padded(a);
        } else if (op_project->parsed()) {
          if (a.arity() < 2) throw Error("projection needs arity at least 2");
          if (tape > a.arity()) throw Error("tape " + std::to_string(tape) + " out of range");
          result = project(a, tape - 1);
        } else if (op_minimize->parsed()) {
          result = minimize(a);
        } else {
          result = induced_binary(a, split);
        }
      }
      write_text(print_automaton(*result), out_path, out);
      return 0;
    }

    if (dot_cmd->parsed()) {
      Automaton a = load(dot_input);
      DotOptions options;
      if (dot_trim) {
        Automaton trimmed = trim(a);
        options.notes.push_back("trimmed: " + std::to_string(a.num_states() - trimmed.num_states()) +
                                " useless state(s) removed");
        a = std::move(trimmed);
      }
      write_text(to_dot(a, options), out_path, out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}

}  // namespace mondec::cli
