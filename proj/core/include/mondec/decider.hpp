#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mondec/automaton.hpp"
#include "mondec/generators.hpp"

namespace mondec {

/// Witness of non-decomposability for a binary relation R, stated over an
/// automaton N for R^≁ with initial state q0.
///
/// Check A: q ∈ N(q0; w0,v0), qp ∈ N(q0; v0,v0), q ∈ N(qp; w1,v1),
///          qp ∈ N(qp; v1,v1), p ∈ N(q; ε,w1), r ∈ N(q; ε,v1).
/// Check B: q ∈ N(qp; w,v), qp ∈ N(qp; v,v), p ∈ N(q; ε,w),
///          r ∈ N(q; ε,v), p ∈ N(r; ε,w), r ∈ N(r; ε,v).
/// p is final and every word pair has equal, non-zero lengths.
struct Certificate {
  State q = 0;
  State qp = 0;
  State p = 0;
  State r = 0;
  Word w0, v0, w1, v1, w, v;

  bool operator==(const Certificate&) const = default;
};

struct DecisionStats {
  std::size_t not_sim_states = 0;      ///< states of N after trimming
  std::size_t candidate_pairs = 0;     ///< (q, qp) pairs passing the first reachability check
  std::size_t quadruples_examined = 0; ///< (q, qp, p, r) passing check A and tested against check B
};

struct Decision {
  Verdict verdict = Verdict::decomposable;
  std::optional<Certificate> certificate;
  DecisionStats stats;
};

struct DecideOptions {
  /// Worker threads for the quadruple search; the result does not depend on it.
  unsigned threads = 1;
};

/// Decides monadic decomposability of R from an automaton N for R^≁. The
/// certificate, when present, is the lexicographically least quadruple
/// (q, qp, p, r) with shortest, lexicographically least words, and refers
/// to the state numbering of `not_sim` itself.
Decision decide_binary(const Automaton& not_sim, const DecideOptions& options = {});

struct InducedDecision {
  std::size_t k = 0;
  Automaton not_sim;  ///< the automaton the certificate refers to
  Decision decision;
};

struct RelationDecision {
  Verdict verdict = Verdict::decomposable;
  /// Smallest k whose induced relation is not decomposable.
  std::optional<std::size_t> failing_k;
  std::vector<InducedDecision> per_k;

  const InducedDecision* failing() const;
};

/// Decides an n-ary relation (n ≥ 2) through its induced binary relations
/// R_1..R_{n−1}. For n = 2 the relation itself is used.
RelationDecision decide_nary(const Automaton& relation, const DecideOptions& options = {});

/// x_0..x_k: x_0 = w0, y_0 = v0, x_1 = v0·w1, y_1 = v0·v1 and
/// x_{i+1} = y_i·w, y_{i+1} = y_i·v. Throws on a structurally invalid
/// certificate (unequal or zero lengths).
std::vector<Word> expand_family(const Certificate& c, std::size_t k);

struct CertificateCheck {
  bool valid = false;
  std::string failure;  ///< names the first failed condition

  explicit operator bool() const noexcept { return valid; }
};

/// Replays the twelve run conditions on `not_sim` and checks that every pair
/// (x_i, x_j), i < j ≤ k, of expand_family(c, k) is accepted.
CertificateCheck validate_certificate(const Certificate& c, const Automaton& not_sim, std::size_t k = 10);

/// Searches words of length ≤ max_length for up to `target` words that are
/// pairwise related by `not_sim` (both orders). A short result proves nothing.
std::vector<Word> bounded_antichain_search(const Automaton& not_sim, std::size_t target, std::size_t max_length);

/// Text document with one "<field> <value>" line per field q, qp, p, r, w0,
/// v0, w1, v1, w, v; words are space separated symbol names.
std::string print_certificate(const Certificate& c, const Alphabet& alphabet);
Certificate parse_certificate(const std::string& text, const Alphabet& alphabet);

}  // namespace mondec
