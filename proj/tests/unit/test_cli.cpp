#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "mondec/algorithms.hpp"
#include "mondec/generators.hpp"
#include "mondec/text_format.hpp"
#include "mondec_cli/cli.hpp"
#include "oracle.hpp"

using namespace mondec;
namespace fs = std::filesystem;

namespace {

const Alphabet ab({"a", "b"}, "_");
const std::string data_dir = MONDEC_TEST_DATA_DIR;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in, path.string());
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("mondec_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string write(const TempDir& dir, const std::string& name, const Automaton& a) {
  std::string path = dir.file(name);
  save_automaton(a, path);
  return path;
}

}  // namespace

TEST_CASE("decide exit statuses") {
  TempDir dir;
  std::string eq = write(dir, "eq.txt", canonical("equality", ab));
  Result r = run({"decide", eq});
  CHECK(r.status == cli::exit_not_decomposable);
  CHECK(r.out.find("verdict: not_decomposable") != std::string::npos);

  std::vector<Automaton> factors{regular_language(ab, "a*b"), regular_language(ab, "(ab)*")};
  std::string prod = write(dir, "prod.txt", product_relation(factors));
  Result p = run({"decide", prod});
  CHECK(p.status == cli::exit_decomposable);
  CHECK(p.out.find("verdict: decomposable") != std::string::npos);

  CHECK(run({"decide", dir.file("missing.txt")}).status == cli::exit_error);
  CHECK(run({"decide"}).status == cli::exit_error);
  CHECK(run({}).status == cli::exit_error);
  CHECK(run({"frobnicate"}).status == cli::exit_error);
  CHECK(run({"decide", eq, "--threads", "0"}).status == cli::exit_error);
}

TEST_CASE("parse errors are reported with line numbers") {
  TempDir dir;
  std::string path = dir.file("bad.txt");
  std::ofstream(path) << "arity 2\nalphabet a b\npad _\nstates 1\ninitial 0\ntrans 0 (_,_) 0\n";
  Result r = run({"decide", path});
  CHECK(r.status == cli::exit_error);
  CHECK(r.err.find("line 6") != std::string::npos);
  CHECK(r.err.find("bad.txt") != std::string::npos);
}

TEST_CASE("decide --json matches the golden report and is stable") {
  TempDir dir;
  std::string eq = write(dir, "eq.txt", canonical("equality", ab));
  Result first = run({"decide", eq, "--json"});
  Result second = run({"decide", eq, "--json", "--threads", "3"});
  CHECK(first.status == cli::exit_not_decomposable);
  CHECK(first.out == second.out);
  CHECK(first.out == read_file(data_dir + "/equality_decide.json"));
  for (const char* key : {"\"verdict\"", "\"failing_k\"", "\"certificate\"", "\"stats\""})
    CHECK(first.out.find(key) != std::string::npos);
  CHECK(first.out.find("wall_time") == std::string::npos);
  CHECK(run({"decide", eq, "--json", "--timing"}).out.find("wall_time_ms") != std::string::npos);
}

TEST_CASE("decide writes, validates and expands certificates") {
  TempDir dir;
  std::string sp = write(dir, "sp.txt", canonical("strict_prefix", ab));
  std::string cert = dir.file("cert.txt");
  Result r = run({"decide", sp, "--certificate", cert, "--validate", "--family", "3"});
  CHECK(r.status == cli::exit_not_decomposable);
  CHECK(r.out.find("certificate validated") != std::string::npos);
  CHECK(r.out.find("x3 = ") != std::string::npos);
  CHECK(read_file(cert).rfind("q ", 0) == 0);
}

TEST_CASE("decide reports a per-k table for n-ary relations") {
  TempDir dir;
  AutomatonBuilder b(3, ab);
  State s = b.add_state(true);
  for (Symbol x = 0; x < 2; ++x) b.add_transition(s, ColumnLetter{{x, x, x}}, s);
  std::string eq3 = write(dir, "eq3.txt", std::move(b).build());
  Result r = run({"decide", eq3});
  CHECK(r.status == cli::exit_not_decomposable);
  CHECK(r.out.find("failing k: 1") != std::string::npos);
  CHECK(r.out.find("k\tstates\tverdict") != std::string::npos);
}

TEST_CASE("gen universality writes a truthful sidecar") {
  TempDir dir;
  std::string out = dir.file("u.txt");
  CHECK(run({"gen", "universality", "--seed", "7", "--out", out}).status == 0);
  Automaton nfa = random_automaton(7, ab, {.arity = 1, .states = 3, .density = 0.6, .deterministic = false,
                                           .final_probability = 0.5});
  std::string expected = is_universal_padded(nfa) ? "decomposable" : "not_decomposable";
  CHECK(read_file(out + ".truth").rfind("ground_truth " + expected + "\n", 0) == 0);
  CHECK(load_automaton(out) == universality_reduction(nfa).relation);

  Result again = run({"gen", "universality", "--seed", "7"});
  CHECK(again.out.find("# ground_truth " + expected) == 0);
  CHECK(parse_automaton(again.out) == load_automaton(out));
}

TEST_CASE("gen dag writes a truthful sidecar") {
  TempDir dir;
  std::string out = dir.file("d.txt");
  CHECK(run({"gen", "dag", "--vertices", "8", "--seed", "7", "--out", out}).status == 0);
  Dag dag = random_dag(7, 8, 0.3);
  std::string expected = dag_reachable(dag, 0, 7) ? "not_decomposable" : "decomposable";
  CHECK(read_file(out + ".truth").rfind("ground_truth " + expected + "\n", 0) == 0);
  CHECK(run({"gen", "dag", "--vertices", "4", "--source", "9"}).status == cli::exit_error);
}

TEST_CASE("gen canonical and random") {
  Result r = run({"gen", "canonical", "strict_prefix"});
  CHECK(r.status == 0);
  std::string body = r.out.substr(r.out.find("arity"));
  CHECK(body == read_file(data_dir + "/strict_prefix.txt"));
  CHECK(run({"gen", "canonical", "bogus"}).status == cli::exit_error);

  Result a = run({"gen", "random", "--seed", "5", "--arity", "3"});
  Result b = run({"gen", "random", "--seed", "5", "--arity", "3"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(parse_automaton(a.out).arity() == 3);
}

TEST_CASE("ops") {
  TempDir dir;
  std::string eq = write(dir, "eq.txt", canonical("equality", ab));
  std::string ns = dir.file("ns.txt");
  CHECK(run({"ops", "notsim", eq, "--out", ns}).status == 0);
  Automaton not_sim = load_automaton(ns);
  for (const auto& t : oracle::tuples_up_to(2, 2, 3)) CHECK(oracle::accepts(not_sim, t) == (t[0] != t[1]));

  std::string m1 = dir.file("m1.txt"), m2 = dir.file("m2.txt");
  CHECK(run({"ops", "minimize", ns, "--out", m1}).status == 0);
  CHECK(run({"ops", "minimize", m1, "--out", m2}).status == 0);
  CHECK(read_file(m1) == read_file(m2));

  Result co = run({"ops", "complement", eq});
  CHECK(co.status == 0);
  CHECK(accepts(parse_automaton(co.out), {parse_word(ab, "a"), parse_word(ab, "b")}));

  std::string sp = write(dir, "sp.txt", canonical("strict_prefix", ab));
  Result both = run({"ops", "product", eq, sp, "--op", "or"});
  CHECK(both.status == 0);
  CHECK(accepts(parse_automaton(both.out), {parse_word(ab, "ab"), parse_word(ab, "ab")}));
  CHECK(run({"ops", "product", eq, sp, "--op", "xor"}).status == cli::exit_error);
  CHECK(run({"ops", "product", eq}).status == cli::exit_error);

  std::string one = write(dir, "one.txt", regular_language(ab, "a"));
  CHECK(run({"ops", "product", eq, one}).status == cli::exit_error);
  CHECK(run({"ops", "notsim", one}).status == cli::exit_error);

  Result proj = run({"ops", "project", sp, "--tape", "1"});
  CHECK(proj.status == 0);
  CHECK(parse_automaton(proj.out).arity() == 1);
  CHECK(run({"ops", "project", sp, "--tape", "3"}).status == cli::exit_error);
}

TEST_CASE("ops induced on the single ternary tuple") {
  std::string input = data_dir + "/single_ternary.txt";
  Result r = run({"ops", "induced", "1", input});
  CHECK(r.status == 0);
  CHECK(r.out == read_file(data_dir + "/single_ternary_induced1.txt"));
  Automaton r1 = parse_automaton(r.out);
  const Alphabet& sigma = r1.alphabet();
  CHECK(accepts(r1, {parse_word(sigma, "a"), parse_word(sigma, "(_,a) (_,b)")}));
  CHECK(run({"ops", "induced", "3", input}).status == cli::exit_error);
}

TEST_CASE("export-dot") {
  TempDir dir;
  std::string eq = write(dir, "eq.txt", canonical("equality", ab));
  Result r = run({"export-dot", eq});
  CHECK(r.status == 0);
  CHECK(r.out.find("0 [shape=doublecircle];") != std::string::npos);
  CHECK(r.out.find("\n  1;") != std::string::npos);
  CHECK(r.out.find("\n  2") == std::string::npos);

  Result trimmed = run({"export-dot", eq, "--trim"});
  CHECK(trimmed.out.find("// trimmed: 1 useless state(s) removed") != std::string::npos);
  CHECK(trimmed.out.find("\n  1;") == std::string::npos);

  std::string sp = write(dir, "sp.txt", canonical("strict_prefix", ab));
  std::string out = dir.file("sp.dot");
  CHECK(run({"export-dot", sp, "--out", out}).status == 0);
  CHECK(read_file(out) == read_file(data_dir + "/strict_prefix.dot"));
}

TEST_CASE("files round trip through the text format") {
  for (const char* name : {"strict_prefix.txt", "single_ternary.txt", "single_ternary_induced1.txt"}) {
    std::string text = read_file(data_dir + "/" + name);
    CHECK(print_automaton(parse_automaton(text)) == text);
  }
}
