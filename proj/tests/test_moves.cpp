#include "affbraid/closure.hpp"
#include "affbraid/errors.hpp"
#include "affbraid/morphisms.hpp"
#include "affbraid/moves.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace affbraid;
using affbraid::testing::W;

TEST_CASE("apply_move examples") {
  CHECK(apply_move(W("A:n=2: s1 s2"), MoveStep::conjugate(W("A:n=2: s1"))) ==
        W("A:n=2: s1^-1 s1 s2 s1"));
  CHECK(apply_move(W("A:n=1: s1"), MoveStep::stabilize(1)) == W("A:n=2: s1 s2"));
  CHECK(apply_move(W("A:n=1: s1"), MoveStep::stabilize(-1)) == W("A:n=2: s1 s2^-1"));
  CHECK(apply_move(W("A:n=1: s1"), MoveStep::destabilize(1, W("A:n=0:"))) == W("A:n=0:"));
  CHECK(apply_move(W("A:n=2: s1 s2 s1"), MoveStep::rewrite(W("A:n=2: s2 s1 s2"))) ==
        W("A:n=2: s2 s1 s2"));
}

TEST_CASE("illegal moves are rejected") {
  CHECK_THROWS_AS(apply_move(W("A:n=2: s1"), MoveStep::rewrite(W("A:n=2: s2"))), DomainError);
  CHECK_THROWS_AS(apply_move(W("A:n=1: s1"), MoveStep::destabilize(-1, W("A:n=0:"))), DomainError);
  CHECK_THROWS_AS(apply_move(W("A:n=2: s1 s2"), MoveStep::destabilize(1, W("A:n=2: s2"))),
                  DomainError);
  CHECK_THROWS_AS(apply_move(W("A:n=0:"), MoveStep::destabilize(1, W("A:n=0:"))), DomainError);
  CHECK_THROWS_AS(apply_move(W("A:n=2: s1"), MoveStep::conjugate(W("A:n=3: s1"))), DomainError);
  CHECK_THROWS_AS(apply_move(W("B:n=2: t"), MoveStep::stabilize(1)), DomainError);
  // A rank-n witness avoiding the top generator is accepted.
  CHECK(apply_move(W("A:n=2: s1 s2"), MoveStep::destabilize(1, W("A:n=2: s1"))) == W("A:n=1: s1"));
}

TEST_CASE("serialization round-trips") {
  const MoveSequence seq{W("A:n=2: s1 s2"),
                         {MoveStep::conjugate(W("A:n=2: s1^-1")), MoveStep::stabilize(-1),
                          MoveStep::rewrite(W("A:n=3: s2 s1 s3^-1")),
                          MoveStep::destabilize(-1, W("A:n=2: s2 s1"))},
                         W("A:n=2: s2 s1")};
  const std::string text = serialize(seq);
  CHECK(text ==
        "start A:n=2: s1 s2\nconj A:n=2: s1^-1\nstab -1\nrewrite A:n=3: s2 s1 s3^-1\n"
        "destab -1 A:n=2: s2 s1\nend A:n=2: s2 s1\n");
  CHECK(parse_move_sequence(text) == seq);
  CHECK_THROWS_AS(parse_move_sequence("conj A:n=1: s1\n"), ParseError);
  CHECK_THROWS_AS(parse_move_sequence("start A:n=1: s1\nstab 2\nend A:n=2:\n"), ParseError);
  CHECK_THROWS_AS(parse_move_sequence("start A:n=1: s1\n"), ParseError);
  CHECK_THROWS_AS(parse_move_sequence("start A:n=1: s1\nhop\nend A:n=1:\n"), ParseError);
}

TEST_CASE("replay validates end to end") {
  const MoveSequence good{W("A:n=1: s1"), {MoveStep::destabilize(1, W("A:n=0:"))}, W("A:n=0:")};
  CHECK(replay(good) == W("A:n=0:"));
  const MoveSequence wrong_end{W("A:n=1: s1"), {}, W("A:n=1:")};
  CHECK_THROWS_AS(replay(wrong_end), DomainError);
  const MoveSequence bad_step{W("A:n=1: s1"), {MoveStep::destabilize(-1, W("A:n=0:"))}, W("A:n=0:")};
  CHECK_THROWS_AS(replay(bad_step), DomainError);
}

TEST_CASE("closure proposition derivations replay") {
  for (const char* text : {"AT:n=1: s1", "AT:n=1:", "AT:n=1: a2 s1^-1", "AT:n=2: s1 a3 s2^-1"}) {
    const BraidWord x = W(text);
    for (const ClosureProp which : {ClosureProp::Dynkin, ClosureProp::AppendA}) {
      const MoveSequence seq = prop_closure_moves(x, which);
      CHECK_NOTHROW(replay(seq));
      CHECK(seq.steps.size() == (which == ClosureProp::Dynkin ? 1U : 4U));
      CHECK(parse_move_sequence(serialize(seq)) == seq);
    }
  }
}

TEST_CASE("append_a for the empty word ends at the unlinked closure") {
  const MoveSequence seq = prop_closure_moves(W("AT:n=1:"), ClosureProp::AppendA);
  CHECK(is_identity(replay(seq)));
  CHECK(normalized_invariant(seq.start) == normalized_invariant(seq.end));
}

TEST_CASE("markov_search") {
  const auto found = markov_search(W("A:n=2: s1 s2"), W("A:n=0:"));
  REQUIRE(found.has_value());
  CHECK_NOTHROW(replay(*found));
  CHECK(found->steps.size() == 2);

  const auto same = markov_search(W("A:n=1: s1 s1"), W("A:n=1: s1 s1"));
  REQUIRE(same.has_value());
  CHECK(same->steps.empty());

  const auto rotated = markov_search(W("A:n=2: s2 s1"), W("A:n=2: s1 s2"));
  REQUIRE(rotated.has_value());
  CHECK_NOTHROW(replay(*rotated));

  SearchOptions small;
  small.max_rank = 2;
  small.max_depth = 3;
  CHECK_FALSE(markov_search(W("A:n=1: s1^3"), W("A:n=1: s1"), small).has_value());
  CHECK(normalized_invariant(W("A:n=1: s1^3")) != normalized_invariant(W("A:n=1: s1")));

  // Determinism.
  CHECK(markov_search(W("A:n=2: s1 s2"), W("A:n=0:")) == found);
}

TEST_CASE("normalized invariant is stable under random single moves") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 60; ++t) {
    const int n = testing::random_int(rng, 1, 3);
    const BraidWord w = testing::random_word(rng, GroupKind::A, n, testing::random_int(rng, 0, 8));
    const LaurentPoly before = normalized_invariant(w);
    const int components = closure_invariants(w).components;
    BraidWord moved = w;
    switch (t % 3) {
    case 0:
      moved = apply_move(w, MoveStep::conjugate(testing::random_word(rng, GroupKind::A, n, 3)));
      break;
    case 1:
      moved = apply_move(w, MoveStep::stabilize(testing::random_int(rng, 0, 1) ? 1 : -1));
      break;
    default: {
      const int sign = testing::random_int(rng, 0, 1) ? 1 : -1;
      const BraidWord up = apply_move(w, MoveStep::stabilize(sign));
      moved = apply_move(up, MoveStep::destabilize(sign, w));
      break;
    }
    }
    CHECK(normalized_invariant(moved) == before);
    CHECK(closure_invariants(moved).components == components);
  }
}
