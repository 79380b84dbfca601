#include "mondec/algorithms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

namespace mondec {

namespace {

struct PairHash {
  std::size_t operator()(std::uint64_t k) const noexcept {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }
};

std::uint64_t pack(State a, std::uint32_t b) { return (std::uint64_t{a} << 32) | b; }

// Breadth-first numbering of pair-shaped product states.
class PairIndex {
 public:
  State get(State a, std::uint32_t b, bool& fresh) {
    auto [it, inserted] = index_.try_emplace(pack(a, b), static_cast<State>(order_.size()));
    fresh = inserted;
    if (inserted) order_.emplace_back(a, b);
    return it->second;
  }
  std::size_t size() const { return order_.size(); }
  std::pair<State, std::uint32_t> at(std::size_t i) const { return order_[i]; }

 private:
  std::unordered_map<std::uint64_t, State, PairHash> index_;
  std::vector<std::pair<State, std::uint32_t>> order_;
};

void require_compatible(const Automaton& a, const Automaton& b) {
  if (a.arity() != b.arity()) throw Error("arity mismatch between operands");
  if (!(a.alphabet() == b.alphabet())) throw Error("alphabet mismatch between operands");
}

void require_arity_one(const Automaton& a, const char* what) {
  if (a.arity() != 1) throw Error(std::string(what) + " requires an arity-1 automaton");
}

std::vector<bool> reachable(const Automaton& a) {
  std::vector<bool> seen(a.num_states(), false);
  std::vector<State> stack{a.initial()};
  seen[a.initial()] = true;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (const auto& t : a.transitions(s))
      if (!seen[t.target]) {
        seen[t.target] = true;
        stack.push_back(t.target);
      }
  }
  return seen;
}

std::vector<bool> coreachable(const Automaton& a) {
  std::vector<std::vector<State>> pred(a.num_states());
  for (State s = 0; s < a.num_states(); ++s)
    for (const auto& t : a.transitions(s)) pred[t.target].push_back(s);
  std::vector<bool> seen(a.num_states(), false);
  std::vector<State> stack;
  for (State s = 0; s < a.num_states(); ++s)
    if (a.is_final(s)) {
      seen[s] = true;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : pred[s])
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
  }
  return seen;
}

}  // namespace

StateSet run(const Automaton& a, const StateSet& from, std::span<const Letter> columns) {
  StateSet current = from;
  StateSet next;
  for (Letter c : columns) {
    next.clear();
    for (State s : current)
      for (const auto& t : a.successors(s, c)) next.push_back(t.target);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current.swap(next);
    if (current.empty()) break;
  }
  return current;
}

bool accepts_padded(const Automaton& a, std::span<const Letter> columns) {
  StateSet end = run(a, {a.initial()}, columns);
  return std::any_of(end.begin(), end.end(), [&](State s) { return a.is_final(s); });
}

bool accepts(const Automaton& a, const WordTuple& tuple) {
  if (tuple.size() != a.arity())
    throw Error("tuple of arity " + std::to_string(tuple.size()) +
                " given to an automaton of arity " + std::to_string(a.arity()));
  return accepts_padded(a, pad_encode(a.codec(), tuple));
}

Automaton valid_pad(std::size_t arity, const Alphabet& alphabet) {
  AutomatonBuilder b(arity, alphabet);
  const LetterCodec& codec = b.codec();
  const auto letters = codec.letters();
  std::map<std::uint32_t, State> index;
  std::deque<std::uint32_t> queue{0};
  index[0] = b.add_state(true);
  while (!queue.empty()) {
    std::uint32_t ended = queue.front();
    queue.pop_front();
    State from = index[ended];
    for (Letter c : letters) {
      std::uint32_t mask = codec.pad_mask(c);
      if ((ended & mask) != ended) continue;
      auto [it, fresh] = index.try_emplace(mask, 0);
      if (fresh) {
        it->second = b.add_state(true);
        queue.push_back(mask);
      }
      b.add_transition(from, c, it->second);
    }
  }
  return std::move(b).build();
}

Automaton determinize(const Automaton& a) {
  AutomatonBuilder b(a.arity(), a.alphabet());
  const auto letters = a.codec().letters();
  std::map<StateSet, State> index;
  std::vector<StateSet> subsets;

  auto intern = [&](StateSet set) {
    auto [it, fresh] = index.try_emplace(set, 0);
    if (fresh) {
      bool final = std::any_of(set.begin(), set.end(), [&](State s) { return a.is_final(s); });
      it->second = b.add_state(final);
      subsets.push_back(std::move(set));
    }
    return it->second;
  };

  intern({a.initial()});
  std::vector<Transition> gathered;
  StateSet target;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    gathered.clear();
    for (State s : subsets[i])
      for (const auto& t : a.transitions(s)) gathered.push_back(t);
    std::sort(gathered.begin(), gathered.end());
    auto g = gathered.begin();
    for (Letter c : letters) {
      target.clear();
      while (g != gathered.end() && g->letter < c) ++g;
      for (; g != gathered.end() && g->letter == c; ++g)
        if (target.empty() || target.back() != g->target) target.push_back(g->target);
      State to = intern(target);
      b.add_transition(static_cast<State>(i), c, to);
    }
  }
  return std::move(b).build();
}

Automaton complete(const Automaton& a) {
  if (a.is_complete()) return a;
  const auto letters = a.codec().letters();
  AutomatonBuilder b(a.arity(), a.alphabet());
  for (State s = 0; s < a.num_states(); ++s) b.add_state(a.is_final(s));
  b.set_initial(a.initial());
  State sink = 0;
  bool has_sink = false;
  for (State s = 0; s < a.num_states(); ++s) {
    auto ts = a.transitions(s);
    auto it = ts.begin();
    for (Letter c : letters) {
      bool any = false;
      for (; it != ts.end() && it->letter == c; ++it) {
        b.add_transition(s, c, it->target);
        any = true;
      }
      if (!any) {
        if (!has_sink) {
          sink = b.add_state(false);
          has_sink = true;
        }
        b.add_transition(s, c, sink);
      }
    }
  }
  if (has_sink)
    for (Letter c : letters) b.add_transition(sink, c, sink);
  return std::move(b).build();
}

namespace {

template <typename FinalFn>
Automaton pair_product(const Automaton& lhs, const Automaton& rhs, FinalFn is_final) {
  AutomatonBuilder b(lhs.arity(), lhs.alphabet());
  PairIndex index;
  bool fresh = false;
  index.get(lhs.initial(), rhs.initial(), fresh);
  b.add_state(is_final(lhs.initial(), rhs.initial()));
  for (std::size_t i = 0; i < index.size(); ++i) {
    auto [p, q] = index.at(i);
    auto lt = lhs.transitions(p);
    auto rt = rhs.transitions(q);
    auto ri = rt.begin();
    for (const auto& x : lt) {
      while (ri != rt.end() && ri->letter < x.letter) ++ri;
      for (auto rj = ri; rj != rt.end() && rj->letter == x.letter; ++rj) {
        State to = index.get(x.target, rj->target, fresh);
        if (fresh) b.add_state(is_final(x.target, rj->target));
        b.add_transition(static_cast<State>(i), x.letter, to);
      }
    }
  }
  return std::move(b).build();
}

}  // namespace

Automaton boolean_product(const Automaton& lhs, const Automaton& rhs, BoolOp op) {
  require_compatible(lhs, rhs);
  if (op == BoolOp::disjunction) {
    Automaton l = complete(lhs);
    Automaton r = complete(rhs);
    return pair_product(l, r, [&](State p, State q) { return l.is_final(p) || r.is_final(q); });
  }
  return pair_product(lhs, rhs, [&](State p, State q) { return lhs.is_final(p) && rhs.is_final(q); });
}

Automaton complement_padded(const Automaton& a) {
  Automaton d = determinize(a);
  AutomatonBuilder flipped(d.arity(), d.alphabet());
  for (State s = 0; s < d.num_states(); ++s) flipped.add_state(!d.is_final(s));
  flipped.set_initial(d.initial());
  for (State s = 0; s < d.num_states(); ++s)
    for (const auto& t : d.transitions(s)) flipped.add_transition(s, t.letter, t.target);
  return intersect(std::move(flipped).build(), valid_pad(a.arity(), a.alphabet()));
}

Automaton unite(std::span<const Automaton> parts) {
  if (parts.empty()) throw Error("union of no automata");
  for (const auto& p : parts) require_compatible(parts.front(), p);
  AutomatonBuilder b(parts.front().arity(), parts.front().alphabet());
  bool initial_final = std::any_of(parts.begin(), parts.end(),
                                   [](const Automaton& p) { return p.is_final(p.initial()); });
  State fresh = b.add_state(initial_final);
  std::vector<State> offset;
  for (const auto& p : parts) {
    offset.push_back(static_cast<State>(b.num_states()));
    for (State s = 0; s < p.num_states(); ++s) b.add_state(p.is_final(s));
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    for (State s = 0; s < p.num_states(); ++s)
      for (const auto& t : p.transitions(s)) b.add_transition(offset[i] + s, t.letter, offset[i] + t.target);
    for (const auto& t : p.transitions(p.initial())) b.add_transition(fresh, t.letter, offset[i] + t.target);
  }
  b.set_initial(fresh);
  return std::move(b).build();
}

Automaton unite(const Automaton& a, const Automaton& b) {
  std::vector<Automaton> parts{a, b};
  return unite(parts);
}

Automaton cylindrify(const Automaton& a, std::span<const std::size_t> positions, std::size_t arity) {
  if (positions.size() != a.arity())
    throw Error("position map must have one entry per tape of the input automaton");
  if (arity < a.arity()) throw Error("cylindrification cannot reduce the arity");
  std::vector<bool> used(arity, false);
  for (std::size_t p : positions) {
    if (p >= arity) throw Error("position " + std::to_string(p) + " out of range");
    if (used[p]) throw Error("position map is not injective");
    used[p] = true;
  }

  AutomatonBuilder b(arity, a.alphabet());
  const LetterCodec& out = b.codec();
  const LetterCodec& in = a.codec();
  struct Info {
    Letter code;
    std::uint32_t mask;
    Letter restricted;
  };
  std::vector<Info> infos;
  std::vector<Symbol> sub(a.arity());
  for (Letter c : out.letters()) {
    for (std::size_t i = 0; i < a.arity(); ++i) sub[i] = out.entry(c, positions[i]);
    infos.push_back({c, out.pad_mask(c), in.encode(sub)});
  }

  PairIndex index;
  bool fresh = false;
  index.get(a.initial(), 0, fresh);
  b.add_state(a.is_final(a.initial()));
  for (std::size_t i = 0; i < index.size(); ++i) {
    auto [s, ended] = index.at(i);
    for (const auto& info : infos) {
      if ((ended & info.mask) != ended) continue;
      if (info.restricted == in.all_pad()) {
        if (!a.is_final(s)) continue;
        State to = index.get(s, info.mask, fresh);
        if (fresh) b.add_state(true);
        b.add_transition(static_cast<State>(i), info.code, to);
        continue;
      }
      for (const auto& t : a.successors(s, info.restricted)) {
        State to = index.get(t.target, info.mask, fresh);
        if (fresh) b.add_state(a.is_final(t.target));
        b.add_transition(static_cast<State>(i), info.code, to);
      }
    }
  }
  return std::move(b).build();
}

Automaton project(const Automaton& a, std::size_t tape) {
  if (a.arity() < 2) throw Error("projection requires arity at least 2");
  if (tape >= a.arity()) throw Error("tape index " + std::to_string(tape) + " out of range");
  Automaton valid = intersect(a, valid_pad(a.arity(), a.alphabet()));

  AutomatonBuilder b(a.arity() - 1, a.alphabet());
  const LetterCodec& in = valid.codec();
  const LetterCodec& out = b.codec();
  std::vector<Letter> mapped(in.code_count(), out.all_pad());
  std::vector<Symbol> sub(out.arity());
  for (Letter c : in.letters()) {
    for (std::size_t i = 0, j = 0; i < in.arity(); ++i)
      if (i != tape) sub[j++] = in.entry(c, i);
    mapped[c] = out.encode(sub);
  }

  // Pad-closure: backward search from the finals along pad-only columns.
  std::vector<std::vector<State>> pad_pred(valid.num_states());
  for (State s = 0; s < valid.num_states(); ++s)
    for (const auto& t : valid.transitions(s))
      if (mapped[t.letter] == out.all_pad()) pad_pred[t.target].push_back(s);
  std::vector<bool> final(valid.num_states(), false);
  std::vector<State> stack;
  for (State s = 0; s < valid.num_states(); ++s)
    if (valid.is_final(s)) {
      final[s] = true;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : pad_pred[s])
      if (!final[p]) {
        final[p] = true;
        stack.push_back(p);
      }
  }

  for (State s = 0; s < valid.num_states(); ++s) b.add_state(final[s]);
  b.set_initial(valid.initial());
  for (State s = 0; s < valid.num_states(); ++s)
    for (const auto& t : valid.transitions(s))
      if (mapped[t.letter] != out.all_pad()) b.add_transition(s, mapped[t.letter], t.target);
  return std::move(b).build();
}

Automaton trim(const Automaton& a, std::vector<State>& kept) {
  auto fwd = reachable(a);
  auto bwd = coreachable(a);
  std::vector<State> rename(a.num_states(), ~State{0});
  kept.clear();
  AutomatonBuilder b(a.arity(), a.alphabet());
  for (State s = 0; s < a.num_states(); ++s)
    if ((fwd[s] && bwd[s]) || s == a.initial()) {
      rename[s] = b.add_state(a.is_final(s));
      kept.push_back(s);
    }
  b.set_initial(rename[a.initial()]);
  for (State s : kept)
    for (const auto& t : a.transitions(s))
      if (rename[t.target] != ~State{0} && (bwd[s] && bwd[t.target]))
        b.add_transition(rename[s], t.letter, rename[t.target]);
  return std::move(b).build();
}

Automaton trim(const Automaton& a) {
  std::vector<State> kept;
  return trim(a, kept);
}

bool is_empty(const Automaton& a) {
  auto fwd = reachable(a);
  for (State s = 0; s < a.num_states(); ++s)
    if (fwd[s] && a.is_final(s)) return false;
  return true;
}

namespace {

// Refinable partition over 0..n-1 (Valmari–Lehtinen layout).
class Partition {
 public:
  explicit Partition(std::size_t n) : elems_(n), loc_(n), block_(n, 0) {
    std::iota(elems_.begin(), elems_.end(), 0);
    std::iota(loc_.begin(), loc_.end(), 0);
    if (n > 0) {
      first_.push_back(0);
      end_.push_back(n);
      mid_.push_back(0);
    }
  }

  std::size_t block_count() const { return first_.size(); }
  std::size_t block_of(std::size_t e) const { return block_[e]; }
  std::size_t size(std::size_t b) const { return end_[b] - first_[b]; }
  std::span<const std::size_t> members(std::size_t b) const {
    return {elems_.data() + first_[b], end_[b] - first_[b]};
  }

  void mark(std::size_t e) {
    std::size_t b = block_[e];
    std::size_t i = loc_[e];
    if (i < mid_[b]) return;
    if (mid_[b] == first_[b]) touched_.push_back(b);
    std::size_t j = mid_[b]++;
    std::swap(elems_[i], elems_[j]);
    loc_[elems_[i]] = i;
    loc_[elems_[j]] = j;
  }

  /// Splits every touched block into marked / unmarked parts. Reports
  /// (old block, new block) for each real split; the new block holds the
  /// marked part.
  template <typename F>
  void split(F&& on_split) {
    for (std::size_t b : touched_) {
      std::size_t m = mid_[b];
      mid_[b] = first_[b];
      if (m == end_[b]) continue;
      std::size_t nb = first_.size();
      first_.push_back(first_[b]);
      end_.push_back(m);
      mid_.push_back(first_[b]);
      first_[b] = m;
      mid_[b] = m;
      for (std::size_t i = first_[nb]; i < end_[nb]; ++i) block_[elems_[i]] = nb;
      on_split(b, nb);
    }
    touched_.clear();
  }

 private:
  std::vector<std::size_t> elems_, loc_, block_;
  std::vector<std::size_t> first_, end_, mid_;
  std::vector<std::size_t> touched_;
};

}  // namespace

Automaton minimize(const Automaton& input) {
  Automaton d = input.is_deterministic() && input.is_complete() ? input : determinize(input);
  // Restrict to reachable states.
  {
    auto fwd = reachable(d);
    if (std::find(fwd.begin(), fwd.end(), false) != fwd.end()) {
      std::vector<State> kept;
      AutomatonBuilder b(d.arity(), d.alphabet());
      std::vector<State> rename(d.num_states(), 0);
      for (State s = 0; s < d.num_states(); ++s)
        if (fwd[s]) rename[s] = b.add_state(d.is_final(s));
      b.set_initial(rename[d.initial()]);
      for (State s = 0; s < d.num_states(); ++s)
        if (fwd[s])
          for (const auto& t : d.transitions(s)) b.add_transition(rename[s], t.letter, rename[t.target]);
      d = std::move(b).build();
    }
  }

  const std::size_t n = d.num_states();
  const auto letters = d.codec().letters();
  const std::size_t k = letters.size();
  // Inverse transitions in CSR form, indexed by letter position then target.
  std::vector<std::size_t> start(k * n + 1, 0);
  for (State s = 0; s < n; ++s) {
    auto ts = d.transitions(s);
    for (std::size_t li = 0; li < k; ++li) ++start[li * n + ts[li].target + 1];
  }
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<State> pred(start.back());
  {
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (State s = 0; s < n; ++s) {
      auto ts = d.transitions(s);
      for (std::size_t li = 0; li < k; ++li) pred[fill[li * n + ts[li].target]++] = s;
    }
  }

  Partition part(n);
  std::vector<bool> in_work;
  std::vector<std::size_t> work;
  for (State s = 0; s < n; ++s)
    if (d.is_final(s)) part.mark(s);
  part.split([](std::size_t, std::size_t) {});
  in_work.assign(part.block_count(), false);
  if (part.block_count() == 2) {
    std::size_t smaller = part.size(0) <= part.size(1) ? 0 : 1;
    work.push_back(smaller);
    in_work[smaller] = true;
  }

  std::vector<std::size_t> splitter;
  while (!work.empty()) {
    std::size_t blk = work.back();
    work.pop_back();
    in_work[blk] = false;
    auto mem = part.members(blk);
    splitter.assign(mem.begin(), mem.end());
    for (std::size_t li = 0; li < k; ++li) {
      for (std::size_t t : splitter)
        for (std::size_t i = start[li * n + t]; i < start[li * n + t + 1]; ++i) part.mark(pred[i]);
      part.split([&](std::size_t old_block, std::size_t new_block) {
        in_work.push_back(false);
        if (in_work[old_block]) {
          work.push_back(new_block);
          in_work[new_block] = true;
        } else {
          std::size_t smaller = part.size(new_block) <= part.size(old_block) ? new_block : old_block;
          work.push_back(smaller);
          in_work[smaller] = true;
        }
      });
    }
  }

  // Canonical numbering: breadth-first over blocks, letters ascending.
  AutomatonBuilder b(d.arity(), d.alphabet());
  std::vector<State> number(part.block_count(), ~State{0});
  std::vector<std::size_t> order;
  auto visit = [&](std::size_t blk) {
    if (number[blk] == ~State{0}) {
      number[blk] = b.add_state(d.is_final(static_cast<State>(part.members(blk)[0])));
      order.push_back(blk);
    }
    return number[blk];
  };
  visit(part.block_of(d.initial()));
  for (std::size_t i = 0; i < order.size(); ++i) {
    State rep = static_cast<State>(part.members(order[i])[0]);
    for (const auto& t : d.transitions(rep))
      b.add_transition(static_cast<State>(i), t.letter, visit(part.block_of(t.target)));
  }
  return std::move(b).build();
}

bool is_universal_padded(const Automaton& a) { return is_empty(complement_padded(a)); }

Automaton quotient_bisimulation(const Automaton& a) {
  const std::size_t n = a.num_states();
  std::vector<std::uint32_t> block(n);
  for (State s = 0; s < n; ++s) block[s] = a.is_final(s) ? 1 : 0;
  std::size_t count = 0;
  std::vector<std::pair<Letter, std::uint32_t>> sig_edges;
  while (true) {
    std::map<std::pair<std::uint32_t, std::vector<std::pair<Letter, std::uint32_t>>>, std::uint32_t> sigs;
    std::vector<std::uint32_t> next(n);
    for (State s = 0; s < n; ++s) {
      sig_edges.clear();
      for (const auto& t : a.transitions(s)) sig_edges.emplace_back(t.letter, block[t.target]);
      std::sort(sig_edges.begin(), sig_edges.end());
      sig_edges.erase(std::unique(sig_edges.begin(), sig_edges.end()), sig_edges.end());
      auto [it, fresh] = sigs.try_emplace({block[s], sig_edges}, static_cast<std::uint32_t>(sigs.size()));
      next[s] = it->second;
    }
    std::size_t fresh_count = sigs.size();
    block.swap(next);
    if (fresh_count == count) break;
    count = fresh_count;
  }
  // Number blocks by first occurrence so that the initial block and state order stay stable.
  std::vector<State> number(n, ~State{0});
  std::vector<State> rep;
  AutomatonBuilder b(a.arity(), a.alphabet());
  for (State s = 0; s < n; ++s)
    if (number[block[s]] == ~State{0}) {
      number[block[s]] = b.add_state(a.is_final(s));
      rep.push_back(s);
    }
  b.set_initial(number[block[a.initial()]]);
  for (std::size_t i = 0; i < rep.size(); ++i)
    for (const auto& t : a.transitions(rep[i]))
      b.add_transition(static_cast<State>(i), t.letter, number[block[t.target]]);
  return std::move(b).build();
}

Automaton permute_tapes(const Automaton& a, std::span<const std::size_t> order) {
  if (order.size() != a.arity()) throw Error("tape order must list every tape");
  std::vector<bool> seen(a.arity(), false);
  for (std::size_t t : order) {
    if (t >= a.arity() || seen[t]) throw Error("tape order is not a permutation");
    seen[t] = true;
  }
  const LetterCodec& codec = a.codec();
  AutomatonBuilder b(a.arity(), a.alphabet());
  for (State s = 0; s < a.num_states(); ++s) b.add_state(a.is_final(s));
  b.set_initial(a.initial());
  std::vector<Symbol> entries(a.arity());
  for (State s = 0; s < a.num_states(); ++s)
    for (const auto& t : a.transitions(s)) {
      for (std::size_t j = 0; j < a.arity(); ++j) entries[j] = codec.entry(t.letter, order[j]);
      b.add_transition(s, codec.encode(entries), t.target);
    }
  return std::move(b).build();
}

Automaton permute_states(const Automaton& a, std::span<const State> perm) {
  if (perm.size() != a.num_states()) throw Error("permutation must cover every state");
  std::vector<bool> seen(perm.size(), false);
  for (State p : perm) {
    if (p >= perm.size() || seen[p]) throw Error("not a permutation of the states");
    seen[p] = true;
  }
  std::vector<bool> final(a.num_states());
  for (State s = 0; s < a.num_states(); ++s) final[perm[s]] = a.is_final(s);
  AutomatonBuilder b(a.arity(), a.alphabet());
  for (State s = 0; s < a.num_states(); ++s) b.add_state(final[s]);
  b.set_initial(perm[a.initial()]);
  for (State s = 0; s < a.num_states(); ++s)
    for (const auto& t : a.transitions(s)) b.add_transition(perm[s], t.letter, perm[t.target]);
  return std::move(b).build();
}

Automaton with_alphabet(const Automaton& a, const Alphabet& target) {
  if (target.pad_name() != a.alphabet().pad_name()) throw Error("target alphabet uses another pad");
  std::vector<Symbol> map(a.alphabet().size() + 1);
  for (Symbol s = 0; s < a.alphabet().size(); ++s) {
    auto found = target.find(a.alphabet().name(s));
    if (!found || target.is_pad(*found))
      throw Error("symbol '" + a.alphabet().name(s) + "' missing from the target alphabet");
    map[s] = *found;
  }
  map[a.alphabet().pad()] = target.pad();
  AutomatonBuilder b(a.arity(), target);
  for (State s = 0; s < a.num_states(); ++s) b.add_state(a.is_final(s));
  b.set_initial(a.initial());
  std::vector<Symbol> entries(a.arity());
  for (State s = 0; s < a.num_states(); ++s)
    for (const auto& t : a.transitions(s)) {
      for (std::size_t i = 0; i < a.arity(); ++i) entries[i] = map[a.codec().entry(t.letter, i)];
      b.add_transition(s, b.codec().encode(entries), t.target);
    }
  return std::move(b).build();
}

Automaton concatenate(const Automaton& a, const Automaton& c) {
  require_arity_one(a, "concatenation");
  require_compatible(a, c);
  AutomatonBuilder b(1, a.alphabet());
  const State off = static_cast<State>(a.num_states());
  const bool c_nullable = c.is_final(c.initial());
  for (State s = 0; s < a.num_states(); ++s) b.add_state(a.is_final(s) && c_nullable);
  for (State s = 0; s < c.num_states(); ++s) b.add_state(c.is_final(s));
  b.set_initial(a.initial());
  for (State s = 0; s < a.num_states(); ++s) {
    for (const auto& t : a.transitions(s)) b.add_transition(s, t.letter, t.target);
    if (a.is_final(s))
      for (const auto& t : c.transitions(c.initial())) b.add_transition(s, t.letter, off + t.target);
  }
  for (State s = 0; s < c.num_states(); ++s)
    for (const auto& t : c.transitions(s)) b.add_transition(off + s, t.letter, off + t.target);
  return trim(std::move(b).build());
}

Automaton kleene_star(const Automaton& a) {
  require_arity_one(a, "Kleene star");
  AutomatonBuilder b(1, a.alphabet());
  State fresh = b.add_state(true);
  for (State s = 0; s < a.num_states(); ++s) b.add_state(a.is_final(s));
  auto init = a.transitions(a.initial());
  for (const auto& t : init) b.add_transition(fresh, t.letter, 1 + t.target);
  for (State s = 0; s < a.num_states(); ++s) {
    for (const auto& t : a.transitions(s)) b.add_transition(1 + s, t.letter, 1 + t.target);
    if (a.is_final(s))
      for (const auto& t : init) b.add_transition(1 + s, t.letter, 1 + t.target);
  }
  b.set_initial(fresh);
  return trim(std::move(b).build());
}

Automaton language_product(std::span<const Automaton> factors) {
  if (factors.empty()) throw Error("product of no languages");
  for (const auto& f : factors) {
    require_arity_one(f, "language product");
    require_compatible(factors.front(), f);
  }
  const std::size_t n = factors.size();
  std::size_t pos = 0;
  Automaton acc = cylindrify(factors[0], std::span<const std::size_t>(&pos, 1), n);
  for (pos = 1; pos < n; ++pos)
    acc = intersect(acc, cylindrify(factors[pos], std::span<const std::size_t>(&pos, 1), n));
  return acc;
}

}  // namespace mondec
