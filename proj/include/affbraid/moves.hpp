#pragma once

#include "affbraid/braid_word.hpp"
#include "affbraid/equality.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace affbraid {

enum class MoveKind { Rewrite, Conjugate, Stabilize, Destabilize };

/// One Markov step on a kind-A word w of rank n:
///   Rewrite(v)         w -> v, legal when v equals w in the group
///   Conjugate(g)       w -> g^-1 w g
///   Stabilize(e)       w -> w s_{n+1}^e in rank n+1
///   Destabilize(e, u)  w -> u in rank n-1, legal when w = u s_n^e and u avoids s_n
struct MoveStep {
  MoveKind kind = MoveKind::Rewrite;
  std::optional<BraidWord> word; // target, conjugator or witness
  int sign = 1;

  static MoveStep rewrite(BraidWord target) { return {MoveKind::Rewrite, std::move(target), 1}; }
  static MoveStep conjugate(BraidWord g) { return {MoveKind::Conjugate, std::move(g), 1}; }
  static MoveStep stabilize(int sign) { return {MoveKind::Stabilize, std::nullopt, sign}; }
  static MoveStep destabilize(int sign, BraidWord witness) {
    return {MoveKind::Destabilize, std::move(witness), sign};
  }

  friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

struct MoveSequence {
  BraidWord start;
  std::vector<MoveStep> steps;
  BraidWord end;

  friend bool operator==(const MoveSequence&, const MoveSequence&) = default;
};

/// Applies one step; throws DomainError naming the failed legality check.
BraidWord apply_move(const BraidWord& w, const MoveStep& step, EqualityOptions options = {});

/// Replays every step from `start` and checks the result equals `end`.
/// Returns the replayed final word; throws DomainError on the first failure.
BraidWord replay(const MoveSequence& seq, EqualityOptions options = {});

enum class ClosureProp { Dynkin, AppendA };

/// Explicit derivation, transported to A rank n+1 through xbar, that
///   dynkin:   F_n(x) and F_n(dynkin_shift(x, 1)) have the same closure
///   append_a: F_n(x) a_{n+1} and x have the same closure
/// for x in AT rank n-1 (n >= 2).
MoveSequence prop_closure_moves(const BraidWord& x, ClosureProp which);

struct SearchOptions {
  int max_rank = 4;
  int max_depth = 4;
  EqualityOptions equality{};
};

/// Breadth-first search over generator conjugations, stabilizations and
/// syntactic destabilizations.  Deterministic; nullopt is inconclusive.
std::optional<MoveSequence> markov_search(const BraidWord& x, const BraidWord& y,
                                          SearchOptions options = {});

/// Line format: "start <word>", one step per line ("rewrite <word>",
/// "conj <word>", "stab +1|-1", "destab +1|-1 <word>"), then "end <word>".
std::string serialize(const MoveSequence& seq);
MoveSequence parse_move_sequence(std::string_view text);
std::string render(const MoveStep& step);

} // namespace affbraid
