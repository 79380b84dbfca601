// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit status if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "mondec/algorithms.hpp"
#include "mondec/decider.hpp"
#include "mondec/generators.hpp"
#include "mondec/relation_ops.hpp"
#include "oracle.hpp"

using namespace mondec;

namespace {

const Alphabet ab({"a", "b"}, "_");

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Not-decomposable results of criteria 1-3, replayed by criterion 4.
struct Witness {
  std::string origin;
  Automaton not_sim;
  Certificate certificate;
};
std::vector<Witness> witnesses;

struct Pipeline {
  Automaton not_sim;
  Decision decision;
};

Pipeline run_pipeline(const Automaton& relation, const std::string& origin) {
  Automaton not_sim = build_not_sim(relation);
  Decision d = decide_binary(not_sim);
  if (d.certificate) witnesses.push_back({origin, not_sim, *d.certificate});
  return {std::move(not_sim), std::move(d)};
}

Verdict verdict_of(const Automaton& relation) { return decide_binary(build_not_sim(relation)).verdict; }

Automaton random_binary(std::uint64_t seed, std::size_t states, bool deterministic, double density) {
  RandomAutomatonOptions o;
  o.states = states;
  o.deterministic = deterministic;
  o.density = density;
  return random_automaton(seed, ab, o);
}

Automaton random_finite(Rng& rng, std::size_t arity) {
  std::vector<WordTuple> tuples;
  for (std::size_t n = 1 + rng.below(10); n > 0; --n) {
    WordTuple t(arity);
    for (auto& x : t)
      for (std::size_t len = rng.below(5); len > 0; --len) x.push_back(static_cast<Symbol>(rng.below(2)));
    tuples.push_back(t);
  }
  return finite_relation(ab, arity, tuples);
}

Automaton random_language(Rng& rng) {
  RandomAutomatonOptions o;
  o.arity = 1;
  o.states = 1 + rng.below(3);
  o.deterministic = rng.chance(0.5);
  o.density = 0.4 + 0.5 * static_cast<double>(rng.below(100)) / 100.0;
  return random_automaton(rng.below(1u << 30), ab, o);
}

Outcome universality_suite() {
  std::size_t agree = 0, universal = 0;
  std::ostringstream bad;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    RandomAutomatonOptions o;
    o.arity = 1;
    o.states = 1 + rng.below(5);
    o.deterministic = false;
    o.density = 0.4 + 0.5 * static_cast<double>(rng.below(100)) / 100.0;
    o.final_probability = 0.3 + 0.6 * static_cast<double>(rng.below(100)) / 100.0;
    Automaton nfa = random_automaton(seed, ab, o);
    ReductionInstance inst = universality_reduction(nfa);
    Pipeline p = run_pipeline(inst.relation, "universality seed " + std::to_string(seed));
    if (inst.ground_truth == Verdict::decomposable) ++universal;
    if (p.decision.verdict == inst.ground_truth) ++agree;
    else bad << " seed " << seed;
  }
  std::ostringstream out;
  out << agree << "/200 agree (" << universal << " universal NFAs)" << bad.str();
  return {agree == 200, out.str()};
}

Outcome dag_suite() {
  std::size_t agree = 0, reachable = 0;
  std::ostringstream bad;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed ^ 0x5eed);
    std::size_t vertices = 2 + rng.below(11);
    double p = 0.15 + 0.35 * static_cast<double>(rng.below(100)) / 100.0;
    Dag dag = random_dag(seed, vertices, p);
    std::size_t s = rng.below(vertices), t = rng.below(vertices);
    if (s > t) std::swap(s, t);
    ReductionInstance inst = dag_reduction(dag, s, t);
    Pipeline pl = run_pipeline(inst.relation, "dag seed " + std::to_string(seed));
    if (inst.ground_truth == Verdict::not_decomposable) ++reachable;
    if (pl.decision.verdict == inst.ground_truth) ++agree;
    else bad << " seed " << seed;
  }
  std::ostringstream out;
  out << agree << "/200 agree (" << reachable << " with t reachable)" << bad.str();
  return {agree == 200, out.str()};
}

Outcome canonical_suite() {
  std::size_t ok = 0, total = 0;
  std::ostringstream bad;
  for (const char* name : {"equality", "strict_prefix", "equal_length"}) {
    ++total;
    if (run_pipeline(canonical(name, ab), name).decision.verdict == Verdict::not_decomposable) ++ok;
    else bad << ' ' << name;
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed + 1000);
    ++total;
    if (run_pipeline(random_finite(rng, 2), "finite").decision.verdict == Verdict::decomposable) ++ok;
    else bad << " finite#" << seed;
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed + 2000);
    std::size_t parts = 1 + rng.below(3);
    std::vector<Automaton> products;
    for (std::size_t i = 0; i < parts; ++i) {
      std::vector<Automaton> factors{random_language(rng), random_language(rng)};
      products.push_back(product_relation(factors));
    }
    Automaton relation = trim(unite(products));
    ++total;
    if (run_pipeline(relation, "products").decision.verdict == Verdict::decomposable) ++ok;
    else bad << " products#" << seed;
  }
  std::ostringstream out;
  out << ok << "/" << total << " expected verdicts" << bad.str();
  return {ok == total, out.str()};
}

Outcome certificate_suite() {
  std::size_t ok = 0;
  std::ostringstream bad;
  for (const auto& w : witnesses) {
    CertificateCheck check = validate_certificate(w.certificate, w.not_sim, 10);
    if (check) ++ok;
    else bad << " [" << w.origin << ": " << check.failure << "]";
  }
  std::ostringstream out;
  out << ok << "/" << witnesses.size() << " certificates validate at k = 10" << bad.str();
  return {ok == witnesses.size() && !witnesses.empty(), out.str()};
}

struct SemanticsData {
  std::size_t disagreements = 0;
  std::size_t pairs = 0;
  std::size_t max_states = 0;
  double max_ratio = 0;
  std::size_t bound_violations = 0;
};

SemanticsData semantics_data() {
  static std::optional<SemanticsData> cached;
  if (cached) return *cached;
  SemanticsData data;
  auto pairs = oracle::tuples_up_to(2, 2, 4);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Automaton r = random_binary(seed + 500, 1 + seed % 4, true, 0.5 + 0.01 * static_cast<double>(seed % 50));
    NotSimConstruction c = construct_not_sim(r);
    for (const auto& t : pairs) {
      ++data.pairs;
      if (accepts(c.relation, t) != oracle::separated(r, t[0], t[1], c.pre_projection_states)) ++data.disagreements;
    }
    const std::size_t q = r.num_states();
    const std::size_t bound = 8 * (q + 2) * (q + 2) + 16;
    const std::size_t states = c.relation.num_states();
    data.max_states = std::max(data.max_states, states);
    data.max_ratio = std::max(data.max_ratio, static_cast<double>(states) / static_cast<double>(bound));
    if (states > bound) ++data.bound_violations;
  }
  cached = data;
  return data;
}

Outcome semantics_suite() {
  SemanticsData d = semantics_data();
  std::ostringstream out;
  out << d.disagreements << " disagreements over " << d.pairs << " (automaton, pair) checks";
  return {d.disagreements == 0, out.str()};
}

Outcome size_suite() {
  SemanticsData d = semantics_data();
  std::ostringstream out;
  out.precision(3);
  out << d.bound_violations << " of 50 exceed 8(|Q|+2)^2+16; max observed " << d.max_states
      << " states, max fraction of bound " << d.max_ratio;
  return {d.bound_violations == 0, out.str()};
}

Outcome metamorphic_suite() {
  std::size_t renaming = 0, finite_union = 0, swap = 0, not_decomposable = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed + 3000);
    Automaton r = seed % 5 == 0 ? canonical(seed % 10 == 0 ? "strict_prefix" : "equal_length", ab)
                                : random_binary(seed + 3000, 1 + rng.below(4), rng.chance(0.5), 0.3 + 0.1 * static_cast<double>(seed % 5));
    if (seed % 7 == 3) {
      std::vector<Automaton> factors{random_language(rng), random_language(rng)};
      r = trim(unite(r, product_relation(factors)));
    }
    Automaton not_sim = build_not_sim(r);
    Decision base = decide_binary(not_sim);
    if (base.verdict == Verdict::not_decomposable) ++not_decomposable;

    std::vector<State> perm(not_sim.num_states());
    std::iota(perm.begin(), perm.end(), State{0});
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    Automaton renamed = permute_states(not_sim, perm);
    Decision d = decide_binary(renamed);
    if (d.verdict == base.verdict && (!d.certificate || validate_certificate(*d.certificate, renamed, 10))) ++renaming;

    if (verdict_of(trim(unite(r, random_finite(rng, 2)))) == base.verdict) ++finite_union;

    const std::size_t order[] = {1, 0};
    if (verdict_of(permute_tapes(r, order)) == base.verdict) ++swap;
  }
  std::ostringstream out;
  out << "renaming " << renaming << "/50, finite union " << finite_union << "/50, swap " << swap << "/50 ("
      << not_decomposable << " not decomposable)";
  return {renaming == 50 && finite_union == 50 && swap == 50, out.str()};
}

Outcome nary_suite() {
  AutomatonBuilder b(3, ab);
  State s = b.add_state(true);
  for (Symbol x = 0; x < 2; ++x) b.add_transition(s, ColumnLetter{{x, x, x}}, s);
  RelationDecision eq3 = decide_nary(std::move(b).build());
  bool eq_ok = eq3.verdict == Verdict::not_decomposable && eq3.failing() &&
               validate_certificate(*eq3.failing()->decision.certificate, eq3.failing()->not_sim, 10);

  Rng rng(4000);
  std::vector<Automaton> factors{random_language(rng), random_language(rng), random_language(rng)};
  bool product_ok = decide_nary(product_relation(factors)).verdict == Verdict::decomposable;

  std::size_t consistent = 0, not_decomposable = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomAutomatonOptions o;
    o.arity = 3;
    o.states = 1 + seed % 4;
    o.deterministic = seed % 2 == 0;
    o.density = 0.05 + 0.05 * static_cast<double>(seed % 6);
    Automaton r = random_automaton(seed + 4000, ab, o);
    RelationDecision d = decide_nary(r);
    bool all = true;
    std::optional<std::size_t> first;
    for (std::size_t k = 1; k < 3; ++k) {
      Verdict v = verdict_of(induced_binary(r, k));
      if (v == Verdict::not_decomposable) {
        all = false;
        if (!first) first = k;
      }
    }
    if (d.verdict == Verdict::not_decomposable) ++not_decomposable;
    if ((d.verdict == Verdict::decomposable) == all && d.failing_k == first) ++consistent;
  }
  std::ostringstream out;
  out << "ternary equality " << (eq_ok ? "not decomposable" : "WRONG") << ", A×B×C "
      << (product_ok ? "decomposable" : "WRONG") << ", " << consistent << "/50 random ternary consistent ("
      << not_decomposable << " not decomposable)";
  return {eq_ok && product_ok && consistent == 50, out.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;
  };
  const Criterion criteria[] = {
      {1, "universality differential", universality_suite, 120},
      {2, "DAG differential", dag_suite, 60},
      {3, "canonical verdicts", canonical_suite, 0},
      {4, "certificate soundness", certificate_suite, 0},
      {5, "R^≁ semantics", semantics_suite, 0},
      {6, "R^≁ size bound", size_suite, 0},
      {7, "metamorphic invariances", metamorphic_suite, 0},
      {8, "n-ary decisions", nary_suite, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the time budget";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %d [%s]: %s - %s (%.2f s)\n", c.id, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                seconds);
    std::fflush(stdout);
  }
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
