#include "affbraid/decomposition.hpp"
#include "affbraid/errors.hpp"
#include "affbraid/morphisms.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace affbraid;
using affbraid::testing::W;

namespace {

// Reads a parabolic AT word inside B through a3 = t s1 s2 s1^-1 t^-1,
// bypassing the formal alphabet entirely.
BraidWord parabolic_in_B(const BraidWord& w) {
  REQUIRE(w.presentation() == Presentation::Parabolic);
  return BraidWord(GroupKind::B, w.rank(), w.letters());
}

KernelWord random_fword(std::mt19937_64& rng, int n, int length) {
  std::vector<FreeLetter> letters;
  for (int i = 0; i < length; ++i) {
    letters.emplace_back(testing::random_int(rng, 1, n + 1), testing::random_int(rng, 0, 1) ? 1 : -1);
  }
  return {n, free_reduce(letters, n + 1)};
}

} // namespace

TEST_CASE("t exponent sum and membership") {
  CHECK(t_exponent_sum(W("B:n=2: t s1 t^-1 s2")) == 0);
  CHECK(t_exponent_sum(W("B:n=2: t")) == 1);
  CHECK(t_exponent_sum(W("B:n=2: a3")) == 0);
  CHECK(is_affine(W("B:n=2: t s1 t^-1")));
  CHECK_FALSE(is_affine(W("B:n=2: phi")));
  CHECK(is_affine(W("B:n=2: s1 s2")));
  CHECK_THROWS_AS(t_exponent_sum(W("A:n=2: s1")), DomainError);
}

TEST_CASE("phi_decompose examples") {
  const PhiDecomposition a = phi_decompose(W("B:n=2: s1"));
  CHECK(a.lambda == W("AT:n=2: s1"));
  CHECK(a.k == 0);
  const PhiDecomposition b = phi_decompose(W("B:n=2: t"));
  CHECK(b.lambda == W("AT:n=2: a3^-1 s2^-1"));
  CHECK(b.k == 1);
  CHECK(words_equal(phi_recombine(b), W("B:n=2: t")));
  const PhiDecomposition c = phi_decompose(W("B:n=2: t s1 t^-1"));
  CHECK(c.lambda == W("AT:n=2: a3^-1 s2 a3"));
  CHECK(c.k == 0);
  CHECK(words_equal(phi_recombine(c), W("B:n=2: t s1 t^-1")));
}

TEST_CASE("phi_decompose on random words") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 100; ++t) {
    const int n = testing::random_int(rng, 2, 4);
    const BraidWord w = testing::random_word(rng, GroupKind::B, n, testing::random_int(rng, 0, 12));
    const PhiDecomposition d = phi_decompose(w);
    CHECK(d.k == t_exponent_sum(w));
    CHECK(is_affine(w) == (d.k == 0));
    CHECK(words_equal(w, phi_recombine(d)));
  }
}

TEST_CASE("t exponent sum is additive") {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 50; ++t) {
    const BraidWord x = testing::random_word(rng, GroupKind::B, 3, 8);
    const BraidWord y = testing::random_word(rng, GroupKind::B, 3, 8);
    CHECK(t_exponent_sum(x * y) == t_exponent_sum(x) + t_exponent_sum(y));
  }
}

TEST_CASE("parabolic conversion") {
  const ParseOptions par{Presentation::Parabolic};
  CHECK(to_parabolic(W("AT:n=3: a4")) == parse("AT:n=3: s3^-1 a3 s3", par));
  CHECK(to_parabolic(W("AT:n=4: a5")) == parse("AT:n=4: s4^-1 s3^-1 a3 s3 s4", par));
  CHECK(render_atoms(to_parabolic(W("AT:n=3: s1 s2"))) == "s1 s2");
  CHECK(from_parabolic(parse("AT:n=3: a3", par)) == W("AT:n=3: s3 a4 s3^-1"));
  CHECK_THROWS_AS(to_parabolic(W("AT:n=2: a3")), DomainError);

  std::mt19937_64 rng(53);
  for (int t = 0; t < 50; ++t) {
    const int n = testing::random_int(rng, 3, 5);
    const BraidWord w = testing::random_word(rng, GroupKind::AffineA, n, 10);
    const BraidWord p = to_parabolic(w);
    CHECK(words_equal(from_parabolic(p), w));
    CHECK(words_equal(parabolic_in_B(p), apply_morphism({MorphismKind::Iota, n}, w)));
  }
}

TEST_CASE("parabolic and formal presentations agree") {
  for (int n = 3; n <= 5; ++n) {
    for (const Relation& r : defining_relations(GroupKind::AffineA, n, Presentation::Parabolic).pairs) {
      CHECK_MESSAGE(words_equal(r.lhs, r.rhs), "n=" << n << " " << r.label);
      CHECK(words_equal(parabolic_in_B(r.lhs), parabolic_in_B(r.rhs)));
    }
    int primed = 0;
    for (const Relation& r : defining_relations(GroupKind::AffineA, n).pairs) {
      if (r.label != "(3')" && r.label != "(4')" && r.label != "(5')") continue;
      ++primed;
      CHECK(words_equal(parabolic_in_B(to_parabolic(r.lhs)), parabolic_in_B(to_parabolic(r.rhs))));
    }
    CHECK(primed > 0);
  }
}

TEST_CASE("kernel rewriting examples") {
  CHECK(render(kernel_rewrite_F(W("B:n=2: t"))) == "F0");
  CHECK(render(kernel_rewrite_F(W("B:n=2: s1 t s1^-1"))) == "F1");
  CHECK(render(kernel_rewrite_F(W("B:n=2: s2 t s2^-1"))) == "F0");
  CHECK(render(kernel_rewrite_F(W("B:n=2:"))) == "1");
  CHECK_THROWS_AS(kernel_rewrite_F(W("B:n=2: s1")), DomainError);
  CHECK(kernel_expand(parse_kernel_word("F2", 2)) == W("B:n=2: s2 s1 t s1^-1 s2^-1"));
}

TEST_CASE("kernel action table matches conjugation in B") {
  for (int n = 2; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (int sign : {1, -1}) {
        const FreeEndomorphism table = kernel_action_table(n, j, sign);
        const BraidWord s(GroupKind::B, n, {sigma(j, sign)});
        for (int i = 0; i <= n; ++i) {
          const BraidWord f = kernel_expand({n, FreeWord::generator(n + 1, i + 1)});
          const BraidWord image = kernel_expand({n, table.image(i + 1)});
          CHECK_MESSAGE(words_equal(s * f * invert_word(s), image),
                        "n=" << n << " j=" << j << " sign=" << sign << " i=" << i);
        }
      }
    }
  }
}

TEST_CASE("kernel rewriting on random kernel elements") {
  std::mt19937_64 rng(54);
  for (int t = 0; t < 40; ++t) {
    const int n = testing::random_int(rng, 2, 4);
    BraidWord w = BraidWord::identity(GroupKind::B, n);
    for (int c = testing::random_int(rng, 0, 6); c > 0; --c) {
      const BraidWord u = testing::random_word(rng, GroupKind::B, n, 4);
      const BraidWord tt(GroupKind::B, n, {tee(testing::random_int(rng, 0, 1) ? 1 : -1)});
      w = w * u * tt * invert_word(u);
    }
    const KernelWord k = kernel_rewrite_F(w);
    CHECK(words_equal(kernel_expand(k), w));
  }
}

TEST_CASE("Schreier rewriting examples") {
  CHECK(render(schreier_rewrite(parse_kernel_word("F1 F2^-1", 2))) == "g[0,1] g[0,2]^-1");
  CHECK(render(schreier_rewrite(parse_kernel_word("F0 F1^-1", 2))) == "g[0,1]^-1");
  CHECK(render(schreier_rewrite(parse_kernel_word("F0^2 F1 F0^-3", 2))) == "g[2,1]");
  CHECK(render(schreier_expand(parse_schreier_word("g[2,1]", 2))) == "F0^2 F1 F0^-3");
  CHECK(render(schreier_expand(parse_schreier_word("g[-1,1]", 2))) == "F0^-1 F1");
  CHECK_THROWS_AS(schreier_rewrite(parse_kernel_word("F1", 2)), DomainError);
  CHECK(render(schreier_rewrite(parse_kernel_word("1", 2))) == "1");
}

TEST_CASE("Schreier rewriting is exact on zero-sum words") {
  std::mt19937_64 rng(55);
  int tested = 0;
  while (tested < 100) {
    const int n = testing::random_int(rng, 1, 4);
    const KernelWord k = random_fword(rng, n, testing::random_int(rng, 0, 20));
    if (k.word.exponent_sum() != 0) continue;
    ++tested;
    const SchreierWord s = schreier_rewrite(k);
    CHECK(schreier_expand(s) == k);
    CHECK(parse_schreier_word(render(s), n) == s);
    CHECK(parse_kernel_word(render(k), n) == k);
  }
}

TEST_CASE("text forms reject malformed input") {
  CHECK_THROWS_AS(parse_kernel_word("F3", 2), ParseError);
  CHECK_THROWS_AS(parse_kernel_word("G1", 2), ParseError);
  CHECK_THROWS_AS(parse_kernel_word("F1^", 2), ParseError);
  CHECK_THROWS_AS(parse_schreier_word("g[0,0]", 2), ParseError);
  CHECK_THROWS_AS(parse_schreier_word("g[0,1", 2), ParseError);
  CHECK(parse_schreier_word("g[0,1] g[0,1]^-1", 2).letters.empty());
}

TEST_CASE("ne_decompose") {
  const NeDecomposition a = ne_decompose(W("AT:n=2: s1"));
  CHECK(a.nu.letters.empty());
  CHECK(a.u == W("A:n=2: s1"));

  const BraidWord e = W("AT:n=2: a3^-1 s2^-1 s1 s2");
  CHECK(is_identity(apply_morphism({MorphismKind::Beta, 2}, e)));
  const NeDecomposition b = ne_decompose(e);
  CHECK_FALSE(b.nu.letters.empty());
  CHECK(is_identity(b.u));
  CHECK(words_equal(schreier_expand_affine(b.nu), e));

  const BraidWord a3 = W("AT:n=2: a3");
  const NeDecomposition c = ne_decompose(a3);
  CHECK(c.u == W("A:n=2: s2^-1 s1 s2"));
  CHECK(words_equal(schreier_expand_affine(c.nu) * apply_morphism({MorphismKind::IInc, 2}, c.u), a3));

  std::mt19937_64 rng(56);
  for (int t = 0; t < 30; ++t) {
    const int n = testing::random_int(rng, 2, 4);
    const BraidWord x = testing::random_word(rng, GroupKind::AffineA, n, 8);
    const NeDecomposition d = ne_decompose(x);
    CHECK(words_equal(schreier_expand_affine(d.nu) * apply_morphism({MorphismKind::IInc, n}, d.u), x));
  }
}
