#include "mondec/decider.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "mondec/algorithms.hpp"
#include "mondec/relation_ops.hpp"

namespace mondec {

namespace {

// How a product copy reads the letter pair (a, b) drawn from Σ×Σ.
enum class Step : std::uint8_t { ab, bb, pad_a, pad_b };

using Reach = std::vector<char>;
// Pairs (s, t), stored at s * states + t.
using PairReach = std::vector<char>;

// Successor structure of a trimmed binary automaton, split into the three
// subgraphs the checks move in: Σ×Σ letters, diagonal letters (b,b) and
// (⊥,x) letters.
class Graph {
 public:
  explicit Graph(const Automaton& n) : n_(n), m_(n.alphabet().size()), base_(n.codec().base()) {
    const std::size_t count = n.num_states();
    rev_ab_.resize(count);
    rev_diag_.resize(count);
    rev_pad_.resize(count);
    fwd_diag_.resize(count);
    fwd_pad_.resize(count);
    rev_all_.resize(count);
    const Symbol pad = n.alphabet().pad();
    for (State s = 0; s < count; ++s)
      for (const auto& t : n.transitions(s)) {
        Symbol x = n.codec().entry(t.letter, 0);
        Symbol y = n.codec().entry(t.letter, 1);
        if (x != pad && y != pad) {
          rev_ab_[t.target].push_back(s);
          if (x == y) {
            rev_diag_[t.target].push_back(s);
            fwd_diag_[s].push_back(t.target);
          }
        } else if (x == pad && y != pad) {
          rev_pad_[t.target].push_back(s);
          fwd_pad_[s].push_back(t.target);
        }
        rev_all_[t.target].push_back({t.letter, s});
      }
  }

  std::size_t states() const { return n_.num_states(); }
  std::size_t symbols() const { return m_; }

  std::span<const Transition> successors(State s, Step step, Symbol a, Symbol b) const {
    const Letter pad = static_cast<Letter>(m_);
    Letter code = 0;
    switch (step) {
      case Step::ab: code = a * base_ + b; break;
      case Step::bb: code = b * base_ + b; break;
      case Step::pad_a: code = pad * base_ + a; break;
      case Step::pad_b: code = pad * base_ + b; break;
    }
    return n_.successors(s, code);
  }

  // States reaching one of `targets` in zero or more steps.
  Reach reaching(const std::vector<std::vector<State>>& rev, std::span<const State> targets) const {
    Reach seen(states(), 0);
    std::vector<State> stack(targets.begin(), targets.end());
    for (State t : targets) seen[t] = 1;
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (State p : rev[s])
        if (!seen[p]) {
          seen[p] = 1;
          stack.push_back(p);
        }
    }
    return seen;
  }

  // Pairs (s, t) from which copies moving by steps `si` and `sj` on one
  // common sequence of letter pairs reach one of `targets`.
  PairReach pair_reaching(Step si, Step sj, const std::vector<std::pair<State, State>>& targets) const {
    const std::size_t count = states();
    PairReach seen(count * count, 0);
    std::vector<std::pair<State, State>> stack;
    for (auto [s, t] : targets)
      if (!seen[s * count + t]) {
        seen[s * count + t] = 1;
        stack.push_back({s, t});
      }
    while (!stack.empty()) {
      auto [s, t] = stack.back();
      stack.pop_back();
      for (auto [ls, ps] : rev_all_[s])
        for (auto [lt, pt] : rev_all_[t]) {
          if (seen[ps * count + pt]) continue;
          int a = -1, b = -1;
          if (!reads(si, ls, a, b) || !reads(sj, lt, a, b)) continue;
          seen[ps * count + pt] = 1;
          stack.push_back({ps, pt});
        }
    }
    return seen;
  }

  // States lying on a cycle of the given forward subgraph.
  static Reach on_cycle(const std::vector<std::vector<State>>& fwd) {
    const std::size_t count = fwd.size();
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(count, unset), low(count, 0);
    std::vector<char> on_stack(count, 0);
    std::vector<State> stack;
    Reach cyclic(count, 0);
    std::uint32_t counter = 0;
    struct Frame {
      State s;
      std::size_t next;
    };
    for (State root = 0; root < count; ++root) {
      if (index[root] != unset) continue;
      std::vector<Frame> frames{{root, 0}};
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = 1;
      while (!frames.empty()) {
        Frame& f = frames.back();
        if (f.next < fwd[f.s].size()) {
          State t = fwd[f.s][f.next++];
          if (t == f.s) cyclic[t] = 1;
          if (index[t] == unset) {
            index[t] = low[t] = counter++;
            stack.push_back(t);
            on_stack[t] = 1;
            frames.push_back({t, 0});
          } else if (on_stack[t]) {
            low[f.s] = std::min(low[f.s], index[t]);
          }
          continue;
        }
        State s = f.s;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().s] = std::min(low[frames.back().s], low[s]);
        if (low[s] == index[s]) {
          std::vector<State> component;
          State t;
          do {
            t = stack.back();
            stack.pop_back();
            on_stack[t] = 0;
            component.push_back(t);
          } while (t != s);
          if (component.size() > 1)
            for (State c : component) cyclic[c] = 1;
        }
      }
    }
    return cyclic;
  }

  const std::vector<std::vector<State>>& rev_ab() const { return rev_ab_; }
  const std::vector<std::vector<State>>& rev_diag() const { return rev_diag_; }
  const std::vector<std::vector<State>>& rev_pad() const { return rev_pad_; }
  const std::vector<std::vector<State>>& fwd_diag() const { return fwd_diag_; }
  const std::vector<std::vector<State>>& fwd_pad() const { return fwd_pad_; }

 private:
  // Whether `step` can read `code`, narrowing the letter pair (a, b); -1
  // marks a component that is still free.
  bool reads(Step step, Letter code, int& a, int& b) const {
    const int x = static_cast<int>(code / base_), y = static_cast<int>(code % base_);
    const int pad = static_cast<int>(m_);
    auto bind = [](int& slot, int value) {
      if (slot >= 0 && slot != value) return false;
      slot = value;
      return true;
    };
    switch (step) {
      case Step::ab: return x != pad && y != pad && bind(a, x) && bind(b, y);
      case Step::bb: return x == y && x != pad && bind(b, x);
      case Step::pad_a: return x == pad && y != pad && bind(a, y);
      case Step::pad_b: return x == pad && y != pad && bind(b, y);
    }
    return false;
  }

  const Automaton& n_;
  std::size_t m_;
  std::size_t base_;
  std::vector<std::vector<State>> rev_ab_, rev_diag_, rev_pad_, fwd_diag_, fwd_pad_;
  std::vector<std::vector<std::pair<Letter, State>>> rev_all_;
};

template <std::size_t W>
struct TupleHash {
  std::size_t operator()(const std::array<State, W>& t) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (State s : t) {
      h ^= s + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

// Breadth-first search in the W-fold product where copy i moves according to
// steps[i] and may only enter states with allowed[i][s] set. The start tuple
// is not itself visited, so every reported node is reached by a path of
// length at least one. Letters are expanded in ascending (a, b) order, so
// the recorded path to each node is shortest and lexicographically least.
template <std::size_t W>
class ProductSearch {
 public:
  using Node = std::array<State, W>;

  ProductSearch(const Graph& g, std::array<Step, W> steps, std::array<const Reach*, W> allowed)
      : g_(g), steps_(steps), allowed_(allowed) {}

  // Only admit nodes whose copies i and j jointly lie in `reach`.
  void require_pair(std::size_t i, std::size_t j, const PairReach* reach) { pairs_.push_back({i, j, reach}); }

  // visit(index, node) returns true to stop the search once the node being
  // expanded is finished; resume() then carries on where it stopped.
  template <class Visit>
  void run(const Node& start, Visit&& visit) {
    nodes_.clear();
    parent_.clear();
    letter_.clear();
    index_.clear();
    cursor_ = 0;
    stopped_ = false;
    expand(start, none, visit);
    if (!stopped_) resume(visit);
  }

  template <class Visit>
  void resume(Visit&& visit) {
    stopped_ = false;
    while (cursor_ < nodes_.size() && !stopped_) {
      Node current = nodes_[cursor_];
      expand(current, static_cast<std::uint32_t>(cursor_++), visit);
    }
  }

  bool exhausted() const { return cursor_ >= nodes_.size(); }

  std::pair<Word, Word> path(std::uint32_t index) const {
    Word w, v;
    for (std::uint32_t i = index; i != none; i = parent_[i]) {
      w.push_back(static_cast<Symbol>(letter_[i] / g_.symbols()));
      v.push_back(static_cast<Symbol>(letter_[i] % g_.symbols()));
    }
    std::reverse(w.begin(), w.end());
    std::reverse(v.begin(), v.end());
    return {w, v};
  }

  std::size_t visited() const { return nodes_.size(); }

 private:
  static constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();

  template <class Visit>
  void expand(const Node& from, std::uint32_t parent, Visit& visit) {
    const std::size_t m = g_.symbols();
    auto& choices = choices_;
    for (Symbol a = 0; a < m; ++a)
      for (Symbol b = 0; b < m; ++b) {
        bool viable = true;
        for (std::size_t i = 0; i < W && viable; ++i) {
          choices[i].clear();
          for (const auto& t : g_.successors(from[i], steps_[i], a, b))
            if (!allowed_[i] || (*allowed_[i])[t.target]) choices[i].push_back(t.target);
          viable = !choices[i].empty();
        }
        if (!viable) continue;
        std::array<std::size_t, W> pick{};
        for (;;) {
          Node next;
          for (std::size_t i = 0; i < W; ++i) next[i] = choices[i][pick[i]];
          if (admitted(next)) {
          auto [it, fresh] = index_.try_emplace(next, static_cast<std::uint32_t>(nodes_.size()));
          if (fresh) {
            nodes_.push_back(next);
            parent_.push_back(parent);
            letter_.push_back(static_cast<std::uint32_t>(a * m + b));
            if (visit(it->second, next)) stopped_ = true;
          }
          }
          bool wrapped = true;
          for (std::size_t i = W; i-- > 0;) {
            if (++pick[i] < choices[i].size()) {
              wrapped = false;
              break;
            }
            pick[i] = 0;
          }
          if (wrapped) break;
        }
      }
  }

  bool admitted(const Node& node) const {
    for (const auto& c : pairs_)
      if (!(*c.reach)[node[c.i] * g_.states() + node[c.j]]) return false;
    return true;
  }

  struct PairConstraint {
    std::size_t i, j;
    const PairReach* reach;
  };

  const Graph& g_;
  std::array<Step, W> steps_;
  std::array<const Reach*, W> allowed_;
  std::vector<PairConstraint> pairs_;
  std::array<std::vector<State>, W> choices_;
  std::size_t cursor_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> letter_;
  std::unordered_map<Node, std::uint32_t, TupleHash<W>> index_;
  bool stopped_ = false;
};

struct PairWitness {
  State q, qp;
  Word w0, v0;
};

struct CandidateResult {
  std::optional<Certificate> certificate;
  std::size_t examined = 0;
};

class Search {
 public:
  explicit Search(const Automaton& n) : n_(n), g_(n) {
    const std::size_t count = n.num_states();
    std::vector<State> finals = n.finals();
    final_reach_ = g_.reaching(g_.rev_pad(), finals);
    pad_cyclic_ = Graph::on_cycle(g_.fwd_pad());
    diag_cyclic_ = Graph::on_cycle(g_.fwd_diag());
    std::vector<State> cyclic;
    for (State s = 0; s < count; ++s)
      if (pad_cyclic_[s]) cyclic.push_back(s);
    cyclic_reach_ = g_.reaching(g_.rev_pad(), cyclic);
    // q needs a non-empty (⊥,x) path into a final state and one into a
    // (⊥,x)-cyclic state.
    useful_q_.assign(count, 0);
    for (State s = 0; s < count; ++s) {
      bool to_final = false, to_cyclic = false;
      for (State t : g_.fwd_pad()[s]) {
        to_final = to_final || final_reach_[t];
        to_cyclic = to_cyclic || cyclic_reach_[t];
      }
      useful_q_[s] = to_final && to_cyclic;
    }
  }

  std::vector<PairWitness> candidate_pairs() {
    ProductSearch<2> search(g_, {Step::ab, Step::bb}, {nullptr, &diag_reach_any()});
    std::vector<std::pair<std::array<State, 2>, std::uint32_t>> found;
    search.run({n_.initial(), n_.initial()}, [&](std::uint32_t index, const std::array<State, 2>& node) {
      if (useful_q_[node[0]] && diag_cyclic_[node[1]]) found.push_back({node, index});
      return false;
    });
    std::sort(found.begin(), found.end());
    std::vector<PairWitness> out;
    for (const auto& [node, index] : found) {
      auto [w0, v0] = search.path(index);
      out.push_back({node[0], node[1], std::move(w0), std::move(v0)});
    }
    return out;
  }

  CandidateResult examine(const PairWitness& c) const {
    CandidateResult result;
    const State q = c.q, qp = c.qp;
    auto to_q_ptr = cached(reach_ab_, g_.rev_ab(), q);
    auto to_qp_ptr = cached(reach_diag_, g_.rev_diag(), qp);
    const Reach& to_q = *to_q_ptr;
    const Reach& to_qp = *to_qp_ptr;

    // Check A, second half: (qp,qp,q,q) → (q,qp,p,r).
    ProductSearch<4> a2(g_, {Step::ab, Step::bb, Step::pad_a, Step::pad_b},
                        {&to_q, &to_qp, &final_reach_, &cyclic_reach_});
    std::map<std::pair<State, State>, std::uint32_t> candidates;  // (p, r) → node index
    a2.run({qp, qp, q, q}, [&](std::uint32_t index, const std::array<State, 4>& node) {
      if (node[0] == q && node[1] == qp && n_.is_final(node[2]) && pad_cyclic_[node[3]])
        candidates.try_emplace({node[2], node[3]}, index);
      return false;
    });
    if (candidates.empty()) return result;

    // Check B, one resumable search per r: (qp,qp,q,q,r,r) → (q,qp,p,r,p,r).
    struct PerR {
      PairReach end_pair, r_pair;
      std::shared_ptr<const Reach> to_r;
      std::unique_ptr<ProductSearch<6>> search;
      std::map<State, std::uint32_t> hits;  // p → node index
    };
    std::map<State, PerR> per_r;
    PairReach loop_pair;
    for (const auto& [pr, a2_index] : candidates) {
      const State p = pr.first, r = pr.second;
      ++result.examined;
      auto [slot, fresh] = per_r.try_emplace(r);
      PerR& b = slot->second;
      auto visit = [&](std::uint32_t index, const std::array<State, 6>& node) {
        if (node[0] == q && node[1] == qp && node[2] == node[4] && node[3] == r && node[5] == r &&
            candidates.count({node[2], r}))
          b.hits.try_emplace(node[2], index);
        return b.hits.count(p) > 0;
      };
      if (fresh) {
        if (loop_pair.empty()) loop_pair = g_.pair_reaching(Step::ab, Step::bb, {{q, qp}});
        std::vector<std::pair<State, State>> ends;
        for (const auto& [other, unused] : candidates)
          if (other.second == r) ends.push_back({other.first, other.first});
        b.end_pair = g_.pair_reaching(Step::pad_a, Step::pad_a, ends);
        b.r_pair = g_.pair_reaching(Step::pad_b, Step::pad_b, {{r, r}});
        b.to_r = cached(reach_pad_, g_.rev_pad(), r);
        b.search = std::make_unique<ProductSearch<6>>(
            g_, std::array{Step::ab, Step::bb, Step::pad_a, Step::pad_b, Step::pad_a, Step::pad_b},
            std::array<const Reach*, 6>{&to_q, &to_qp, &final_reach_, b.to_r.get(), &final_reach_, b.to_r.get()});
        b.search->require_pair(0, 1, &loop_pair);
        b.search->require_pair(2, 4, &b.end_pair);
        b.search->require_pair(3, 5, &b.r_pair);
        b.search->run({qp, qp, q, q, r, r}, visit);
      } else if (!b.hits.count(p) && !b.search->exhausted()) {
        b.search->resume(visit);
      }
      auto it = b.hits.find(p);
      if (it == b.hits.end()) continue;
      auto [w1, v1] = a2.path(a2_index);
      auto [w, v] = b.search->path(it->second);
      result.certificate = Certificate{q, qp, p, r, c.w0, c.v0, std::move(w1), std::move(v1), std::move(w), std::move(v)};
      return result;
    }
    return result;
  }

 private:
  using Cache = std::map<State, std::shared_ptr<const Reach>>;

  // States reaching `target` in the subgraph `rev`, computed once per target.
  std::shared_ptr<const Reach> cached(Cache& cache, const std::vector<std::vector<State>>& rev, State target) const {
    {
      std::lock_guard lock(cache_mutex_);
      auto it = cache.find(target);
      if (it != cache.end()) return it->second;
    }
    auto reach = std::make_shared<const Reach>(g_.reaching(rev, std::span<const State>(&target, 1)));
    std::lock_guard lock(cache_mutex_);
    return cache.try_emplace(target, std::move(reach)).first->second;
  }

  // Copy 2 of the first check must still be able to close a (b,b) cycle.
  const Reach& diag_reach_any() {
    if (diag_any_.empty()) {
      std::vector<State> cyclic;
      for (State s = 0; s < n_.num_states(); ++s)
        if (diag_cyclic_[s]) cyclic.push_back(s);
      diag_any_ = g_.reaching(g_.rev_diag(), cyclic);
    }
    return diag_any_;
  }

  const Automaton& n_;
  Graph g_;
  Reach final_reach_, pad_cyclic_, diag_cyclic_, cyclic_reach_, useful_q_, diag_any_;
  mutable std::mutex cache_mutex_;
  mutable Cache reach_ab_, reach_diag_, reach_pad_;
};

void require_lengths(const Word& x, const Word& y, const char* what) {
  if (x.size() != y.size() || x.empty())
    throw Error(std::string("certificate words ") + what + " must have equal non-zero lengths");
}

Word concat(const Word& x, const Word& y) {
  Word out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

}  // namespace

Decision decide_binary(const Automaton& not_sim, const DecideOptions& options) {
  if (not_sim.arity() != 2) throw Error("decide_binary expects a binary automaton");
  std::vector<State> kept;
  Automaton n = trim(not_sim, kept);

  Decision decision;
  decision.stats.not_sim_states = n.num_states();

  Search search(n);
  std::vector<PairWitness> pairs = search.candidate_pairs();
  decision.stats.candidate_pairs = pairs.size();
  if (pairs.empty()) return decision;

  std::vector<CandidateResult> results(pairs.size());
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(pairs.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      results[i] = search.examine(pairs[i]);
      if (results[i].certificate) break;
    }
  } else {
    // Candidates are claimed in order; work beyond the best index found so
    // far is skipped, so every index before the winner is fully examined.
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{pairs.size()};
    std::vector<std::thread> pool;
    std::mutex error_mutex;
    std::exception_ptr error;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        try {
          for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= pairs.size() || i > best.load()) return;
            results[i] = search.examine(pairs[i]);
            if (results[i].certificate) {
              std::size_t current = best.load();
              while (i < current && !best.compare_exchange_weak(current, i)) {
              }
            }
          }
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    for (auto& worker : pool) worker.join();
    if (error) std::rethrow_exception(error);
  }

  for (const auto& r : results) {
    decision.stats.quadruples_examined += r.examined;
    if (r.certificate) {
      Certificate c = *r.certificate;
      c.q = kept[c.q];
      c.qp = kept[c.qp];
      c.p = kept[c.p];
      c.r = kept[c.r];
      decision.verdict = Verdict::not_decomposable;
      decision.certificate = std::move(c);
      break;
    }
  }
  return decision;
}

const InducedDecision* RelationDecision::failing() const {
  if (!failing_k) return nullptr;
  for (const auto& part : per_k)
    if (part.k == *failing_k) return &part;
  return nullptr;
}

RelationDecision decide_nary(const Automaton& relation, const DecideOptions& options) {
  const std::size_t n = relation.arity();
  if (n < 2) throw Error("decide_nary expects arity at least 2");
  RelationDecision out;
  for (std::size_t k = 1; k < n; ++k) {
    Automaton binary = n == 2 ? relation : induced_binary(relation, k);
    Automaton not_sim = build_not_sim(binary);
    Decision d = decide_binary(not_sim, options);
    if (d.verdict == Verdict::not_decomposable && !out.failing_k) {
      out.failing_k = k;
      out.verdict = Verdict::not_decomposable;
    }
    out.per_k.push_back({k, std::move(not_sim), std::move(d)});
  }
  return out;
}

std::vector<Word> expand_family(const Certificate& c, std::size_t k) {
  require_lengths(c.w0, c.v0, "w0, v0");
  require_lengths(c.w1, c.v1, "w1, v1");
  require_lengths(c.w, c.v, "w, v");
  std::vector<Word> xs{c.w0};
  if (k == 0) return xs;
  Word y = concat(c.v0, c.v1);
  xs.push_back(concat(c.v0, c.w1));
  for (std::size_t i = 1; i < k; ++i) {
    xs.push_back(concat(y, c.w));
    y = concat(y, c.v);
  }
  return xs;
}

CertificateCheck validate_certificate(const Certificate& c, const Automaton& not_sim, std::size_t k) {
  auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  if (not_sim.arity() != 2) return fail("automaton is not binary");
  const std::size_t count = not_sim.num_states();
  for (State s : {c.q, c.qp, c.p, c.r})
    if (s >= count) return fail("state " + std::to_string(s) + " does not exist");
  for (const Word* word : {&c.w0, &c.v0, &c.w1, &c.v1, &c.w, &c.v})
    for (Symbol s : *word)
      if (s >= not_sim.alphabet().size()) return fail("word uses a symbol outside the alphabet");
  if (c.w0.size() != c.v0.size() || c.w0.empty()) return fail("|w0| = |v0| > 0 violated");
  if (c.w1.size() != c.v1.size() || c.w1.empty()) return fail("|w1| = |v1| > 0 violated");
  if (c.w.size() != c.v.size() || c.w.empty()) return fail("|w| = |v| > 0 violated");
  if (!not_sim.is_final(c.p)) return fail("p is not final");

  const LetterCodec& codec = not_sim.codec();
  auto reaches = [&](State from, const Word& x, const Word& y, State to) {
    StateSet end = run(not_sim, {from}, pad_encode(codec, {x, y}));
    return std::binary_search(end.begin(), end.end(), to);
  };
  const Word eps;
  const State q0 = not_sim.initial();
  struct Condition {
    const char* name;
    bool holds;
  };
  const Condition conditions[] = {
      {"check A (i): q from q0 on (w0,v0)", reaches(q0, c.w0, c.v0, c.q)},
      {"check A (ii): qp from q0 on (v0,v0)", reaches(q0, c.v0, c.v0, c.qp)},
      {"check A (iii): q from qp on (w1,v1)", reaches(c.qp, c.w1, c.v1, c.q)},
      {"check A (iv): qp from qp on (v1,v1)", reaches(c.qp, c.v1, c.v1, c.qp)},
      {"check A (v): p from q on (ε,w1)", reaches(c.q, eps, c.w1, c.p)},
      {"check A (vi): r from q on (ε,v1)", reaches(c.q, eps, c.v1, c.r)},
      {"check B (i): q from qp on (w,v)", reaches(c.qp, c.w, c.v, c.q)},
      {"check B (ii): qp from qp on (v,v)", reaches(c.qp, c.v, c.v, c.qp)},
      {"check B (iii): p from q on (ε,w)", reaches(c.q, eps, c.w, c.p)},
      {"check B (iv): r from q on (ε,v)", reaches(c.q, eps, c.v, c.r)},
      {"check B (v): p from r on (ε,w)", reaches(c.r, eps, c.w, c.p)},
      {"check B (vi): r from r on (ε,v)", reaches(c.r, eps, c.v, c.r)},
  };
  for (const auto& cond : conditions)
    if (!cond.holds) return fail(cond.name);

  std::vector<Word> xs = expand_family(c, k);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!accepts(not_sim, {xs[i], xs[j]}))
        return fail("family pair (x" + std::to_string(i) + ", x" + std::to_string(j) + ") not accepted");
  return {true, {}};
}

std::vector<Word> bounded_antichain_search(const Automaton& not_sim, std::size_t target, std::size_t max_length) {
  if (not_sim.arity() != 2) throw Error("bounded_antichain_search expects a binary automaton");
  constexpr std::size_t max_words = 4096;
  constexpr std::size_t max_checks = 200000;
  const std::size_t m = not_sim.alphabet().size();

  std::vector<Word> words{Word{}};
  for (std::size_t i = 0; i < words.size() && words.size() < max_words; ++i) {
    if (words[i].size() >= max_length) continue;
    for (Symbol s = 0; s < m && words.size() < max_words; ++s) {
      Word next = words[i];
      next.push_back(s);
      words.push_back(std::move(next));
    }
  }

  std::map<std::pair<std::size_t, std::size_t>, bool> memo;
  std::size_t checks = 0;
  auto related = [&](std::size_t i, std::size_t j) {
    auto key = std::minmax(i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    ++checks;
    bool r = accepts(not_sim, {words[i], words[j]}) && accepts(not_sim, {words[j], words[i]});
    memo.emplace(key, r);
    return r;
  };

  std::vector<std::size_t> chosen, best;
  std::function<bool(std::size_t)> extend = [&](std::size_t from) {
    if (chosen.size() > best.size()) best = chosen;
    if (chosen.size() >= target) return true;
    for (std::size_t i = from; i < words.size(); ++i) {
      if (checks > max_checks) return false;
      bool ok = true;
      for (std::size_t j : chosen)
        if (!related(i, j)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(i);
      if (extend(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (target > 0) extend(0);

  std::vector<Word> out;
  for (std::size_t i : best) out.push_back(words[i]);
  return out;
}

namespace {

constexpr const char* certificate_fields[] = {"q", "qp", "p", "r", "w0", "v0", "w1", "v1", "w", "v"};

std::string spaced(const Alphabet& alphabet, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += alphabet.name(w[i]);
  }
  return out;
}

}  // namespace

std::string print_certificate(const Certificate& c, const Alphabet& alphabet) {
  std::ostringstream out;
  out << "q " << c.q << "\nqp " << c.qp << "\np " << c.p << "\nr " << c.r << '\n';
  const Word* words[] = {&c.w0, &c.v0, &c.w1, &c.v1, &c.w, &c.v};
  for (std::size_t i = 0; i < 6; ++i) {
    out << certificate_fields[4 + i];
    if (!words[i]->empty()) out << ' ' << spaced(alphabet, *words[i]);
    out << '\n';
  }
  return out.str();
}

Certificate parse_certificate(const std::string& text, const Alphabet& alphabet) {
  Certificate c;
  std::map<std::string, bool> seen;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key) || key[0] == '#') continue;
    auto where = [&] { return "certificate line " + std::to_string(number) + ": "; };
    if (seen[key]) throw Error(where() + "duplicate field " + key);
    seen[key] = true;
    std::vector<std::string> values;
    for (std::string v; fields >> v;) values.push_back(v);
    State* state = key == "q" ? &c.q : key == "qp" ? &c.qp : key == "p" ? &c.p : key == "r" ? &c.r : nullptr;
    Word* word = key == "w0" ? &c.w0 : key == "v0" ? &c.v0 : key == "w1" ? &c.w1 : key == "v1" ? &c.v1
               : key == "w"  ? &c.w  : key == "v"  ? &c.v  : nullptr;
    if (state) {
      if (values.size() != 1) throw Error(where() + "expected one state index");
      try {
        std::size_t used = 0;
        unsigned long value = std::stoul(values[0], &used);
        if (used != values[0].size() || value > std::numeric_limits<State>::max()) throw Error("");
        *state = static_cast<State>(value);
      } catch (const std::exception&) {
        throw Error(where() + "bad state index '" + values[0] + "'");
      }
    } else if (word) {
      word->clear();
      for (const auto& v : values) {
        auto s = alphabet.find(v);
        if (!s) throw Error(where() + "unknown symbol '" + v + "'");
        word->push_back(*s);
      }
    } else {
      throw Error(where() + "unknown field " + key);
    }
  }
  for (const char* field : certificate_fields)
    if (!seen[field]) throw Error(std::string("certificate is missing field ") + field);
  return c;
}

}  // namespace mondec
