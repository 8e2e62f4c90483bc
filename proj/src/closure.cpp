#include "affbraid/closure.hpp"

#include "affbraid/equality.hpp"
#include "affbraid/errors.hpp"
#include "affbraid/morphisms.hpp"

#include <string>

namespace affbraid {

namespace {

int strand_count(const BraidWord& w, const char* op) {
  if (w.kind() != GroupKind::A) {
    throw DomainError(std::string(op) + " expects a kind-A word, got " + render(w));
  }
  return w.rank() + 1;
}

void check_budget(int strands, const ClosureOptions& options) {
  const int cap = options.max_strands < kMaxTLStrands ? options.max_strands : kMaxTLStrands;
  if (strands > cap) {
    throw ResourceError("bracket evaluation on " + std::to_string(strands) +
                        " strands exceeds the strand budget " + std::to_string(cap));
  }
}

} // namespace

LaurentPoly kauffman_bracket(const BraidWord& w, ClosureOptions options) {
  const int m = strand_count(w, "kauffman_bracket");
  check_budget(m, options);
  TLElement acc = TLElement::identity(m);
  for (const BraidLetter& l : w.letters()) {
    acc = acc * TLElement::braid_generator(m, l.gen.index, l.sign);
  }
  const LaurentPoly d = loop_weight();
  LaurentPoly out;
  for (const auto& [diagram, c] : acc.terms()) {
    out += c * d.pow(static_cast<unsigned>(diagram.closure_loops() - 1));
  }
  return out;
}

LaurentPoly normalized_invariant(const BraidWord& w, ClosureOptions options) {
  const int writhe = w.exponent_sum();
  // (-A^3)^(-writhe) = (-1)^writhe A^(-3 writhe)
  const std::int64_t sign = (writhe % 2 == 0) ? 1 : -1;
  return LaurentPoly::monomial(sign, -3 * writhe) * kauffman_bracket(w, options);
}

ClosureInvariants closure_invariants(const BraidWord& w, ClosureOptions options) {
  ClosureInvariants out;
  out.strands = strand_count(w, "closure_invariants");
  out.components = underlying_permutation(w).cycle_count();
  out.exponent_sum = w.exponent_sum();
  try {
    out.normalized_bracket = normalized_invariant(w, options);
  } catch (const ResourceError&) {
    out.normalized_bracket.reset();
  }
  return out;
}

ClosureInvariants affine_close(const BraidWord& x, ClosureOptions options) {
  const BraidWord formal = parabolic_to_formal(x);
  if (formal.kind() != GroupKind::AffineA) {
    throw DomainError("affine_close expects an AT word, got " + render(x));
  }
  return closure_invariants(apply_morphism({MorphismKind::XBar, formal.rank() + 1}, formal),
                            options);
}

} // namespace affbraid
