#pragma once

#include "affbraid/braid_word.hpp"
#include "affbraid/laurent.hpp"
#include "affbraid/temperley_lieb.hpp"

#include <optional>

namespace affbraid {

struct ClosureOptions {
  int max_strands = kMaxTLStrands;
};

struct ClosureInvariants {
  int strands = 1;
  int components = 1;
  int exponent_sum = 0;
  /// Absent when the strand budget rules out the bracket evaluation.
  std::optional<LaurentPoly> normalized_bracket;

  friend bool operator==(const ClosureInvariants&, const ClosureInvariants&) = default;
};

/// Kauffman bracket of the closure of a kind-A word, normalized so that the
/// unknot has bracket 1.  Throws ResourceError beyond the strand budget.
LaurentPoly kauffman_bracket(const BraidWord& w, ClosureOptions options = {});

/// (-A^3)^(-writhe) * bracket; invariant under both Markov moves.
LaurentPoly normalized_invariant(const BraidWord& w, ClosureOptions options = {});

ClosureInvariants closure_invariants(const BraidWord& w, ClosureOptions options = {});

/// Invariants of the closure of xbar_{n+1}(x) for x in AT rank n.
ClosureInvariants affine_close(const BraidWord& x, ClosureOptions options = {});

} // namespace affbraid
