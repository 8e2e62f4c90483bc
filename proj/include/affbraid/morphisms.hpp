#pragma once

#include "affbraid/braid_word.hpp"
#include "affbraid/equality.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace affbraid {

/// The arrows between the three families.  Ranks follow BraidWord's
/// convention ("B rank m" is B(B_{m+1}), "AT rank m" is B(~A_m)):
///
///   X(n)           A rank n-1  -> A rank n      s_i -> s_i
///   Y(n)           B rank n-1  -> B rank n      s_i -> s_i, t -> t
///   Z(n)           A rank n    -> B rank n      s_i -> s_i
///   IInc(n)        A rank n    -> AT rank n     s_i -> s_i
///   Iota(n)        AT rank n   -> B rank n      a_{n+1} -> t s1..sn s_{n-1}^-1..s1^-1 t^-1
///   F(n)           AT rank n-1 -> AT rank n     a_n -> s_n a_{n+1} s_n^-1
///   Alpha(n)       B rank n    -> A rank n      t -> 1
///   Beta(n)        AT rank n   -> A rank n      a_{n+1} -> s_n^-1..s_2^-1 s1 s2..s_n
///   FSemidirect(n) B rank n-1  -> AT rank n     phi_n -> D_n^-1, so t -> D_n^-1 s_{n-1}^-1..s1^-1
///   UnderbarI(n)   B rank n-1  -> A rank n      s_i -> s_{i+1}, t -> s1^2
///   XBar(n)        AT rank n-1 -> A rank n      UnderbarI(n) o Iota(n-1)
///   Dynkin(n, e)   AT rank n   -> AT rank n     (n+1)-cycle s1 -> s2 -> .. -> s_n -> a_{n+1} -> s1, to the power e
enum class MorphismKind {
  X,
  Y,
  Z,
  IInc,
  Iota,
  F,
  Alpha,
  Beta,
  FSemidirect,
  UnderbarI,
  XBar,
  Dynkin,
};

struct MorphismId {
  MorphismKind kind;
  int n;
  int exponent = 0; // Dynkin only
};

struct GroupSignature {
  GroupKind kind;
  int rank;

  friend bool operator==(const GroupSignature&, const GroupSignature&) = default;
};

/// Stable CLI names: x, y, z, i_inc, iota, F, alpha, beta, f_semidirect,
/// underbar_i, xbar, dynkin.
std::string_view morphism_name(MorphismKind kind);
std::optional<MorphismKind> morphism_from_name(std::string_view name);

/// Throws DomainError when n is too small for the arrow.
GroupSignature morphism_domain(const MorphismId& id);
GroupSignature morphism_codomain(const MorphismId& id);

/// Generator-image substitution.  Parabolic AT inputs are first rewritten in
/// the formal alphabet.  Throws DomainError when w is not in the domain.
BraidWord apply_morphism(const MorphismId& id, const BraidWord& w);

/// The Dynkin automorphism of AT rank n raised to the power e.
BraidWord dynkin_shift(const BraidWord& w, int e);

/// D_n = s_n s_{n-1} .. s1 a_{n+1} in AT rank n.
BraidWord dominating_element(int n);

/// The commuting identities between the arrows.
enum class Diagram {
  IotaF,        // i_n F_n = y_n i_{n-1}        on AT rank n-1
  XAlpha,       // x_n alpha_{n-1} = alpha_n y_n on B rank n-1
  AlphaIota,    // alpha_n i_n = beta_n          on AT rank n
  XBeta,        // x_n beta_{n-1} = beta_n F_n   on AT rank n-1
  YRestriction, // y_n restricted to AT rank n-1 lands in AT rank n and equals F_n
};

std::string_view diagram_name(Diagram d);
std::optional<Diagram> diagram_from_name(std::string_view name);
GroupSignature diagram_source(Diagram d, int n);

/// True iff both composite images of w agree as group elements.
bool check_diagram(Diagram d, int n, const BraidWord& w, EqualityOptions options = {});

} // namespace affbraid
