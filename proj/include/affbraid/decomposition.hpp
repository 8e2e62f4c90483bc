#pragma once

#include "affbraid/braid_word.hpp"
#include "affbraid/equality.hpp"
#include "affbraid/free_word.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace affbraid {

// --- t-exponent membership and the phi split --------------------------------

/// Signed count of t letters of a kind-B word.
int t_exponent_sum(const BraidWord& w);

/// A kind-B word lies in the affine subgroup iff its t-exponent sum is 0.
bool is_affine(const BraidWord& w);

/// w = iota(lambda) * phi^k in B rank n, with lambda an AT rank n word.
struct PhiDecomposition {
  BraidWord lambda;
  int k = 0;
};

/// Pushes every phi to the right using t = phi z, z = s_n^-1 .. s1^-1, and
/// phi s_i phi^-1 = shift(s_i) along the cycle s1 -> .. -> s_n -> a_{n+1} -> s1.
PhiDecomposition phi_decompose(const BraidWord& w);

/// iota(lambda) * phi^k as a kind-B word.
BraidWord phi_recombine(const PhiDecomposition& d);

// --- parabolic alphabet -------------------------------------------------------

/// a_{n+1} -> s_n^-1 .. s3^-1 a3 s3 .. s_n; requires AT rank n >= 3.
BraidWord to_parabolic(const BraidWord& w);
/// a3 -> s3 .. s_n a_{n+1} s_n^-1 .. s3^-1.
BraidWord from_parabolic(const BraidWord& w);

// --- kernel of alpha over F_0..F_n ------------------------------------------

/// Word in the free generators F_0..F_n of ker(alpha_n) inside B rank n.
/// F_i is stored as free index i+1.
struct KernelWord {
  int n = 1;
  FreeWord word{2};

  friend bool operator==(const KernelWord&, const KernelWord&) = default;
};

/// Conjugation s_j^sign (.) s_j^-sign on F_0..F_n:
///   s_j: F_{j-1} -> F_j, F_j -> F_j^-1 F_{j-1} F_j, others fixed.
FreeEndomorphism kernel_action_table(int n, int j, int sign);

/// Rewrites w in ker(alpha_n) over F_0..F_n.  Throws DomainError when
/// alpha_n(w) is not the identity, ResourceError on budget overflow.
KernelWord kernel_rewrite_F(const BraidWord& w, EqualityOptions options = {});

/// F_i -> s_i .. s1 t s1^-1 .. s_i^-1 (F_0 = t).
BraidWord kernel_expand(const KernelWord& k);

// --- Schreier basis g_{j,i} = F_0^j F_i F_0^-(j+1), i >= 1 --------------------

struct SchreierLetter {
  int j = 0;
  int i = 1;
  int sign = 1;

  SchreierLetter inverse() const { return {j, i, -sign}; }
  friend bool operator==(const SchreierLetter&, const SchreierLetter&) = default;
};

struct SchreierWord {
  int n = 1;
  std::vector<SchreierLetter> letters; // freely reduced

  friend bool operator==(const SchreierWord&, const SchreierWord&) = default;
};

/// Throws DomainError when the F-exponent sum of k is not zero.
SchreierWord schreier_rewrite(const KernelWord& k);

/// Freely reduced F-word of the product of the g_{j,i}.
KernelWord schreier_expand(const SchreierWord& s);

/// The Schreier word read back as an AT rank n element.
BraidWord schreier_expand_affine(const SchreierWord& s);

// --- B(~A_n) = B(A_n) x| N_e ---------------------------------------------------

struct NeDecomposition {
  SchreierWord nu;
  BraidWord u; // kind A rank n
};

/// u = beta_n(x) and nu the Schreier form of x * i_inc(u)^-1.
NeDecomposition ne_decompose(const BraidWord& x, EqualityOptions options = {});

// --- text forms ---------------------------------------------------------------

/// "F0 F1^-1 F2^3"; "1" for the empty word.
std::string render(const KernelWord& k);
KernelWord parse_kernel_word(std::string_view text, int n);

/// "g[0,1] g[-2,3]^-1"; "1" for the empty word.
std::string render(const SchreierWord& s);
SchreierWord parse_schreier_word(std::string_view text, int n);

} // namespace affbraid
