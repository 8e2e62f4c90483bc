#pragma once

#include "affbraid/laurent.hpp"

#include <cstdint>
#include <map>

namespace affbraid {

inline constexpr int kMaxTLStrands = 8;

/// Non-crossing pairing of 2m boundary points: top points 0..m-1 and bottom
/// points m..2m-1, both numbered left to right.  Partner of point p is held
/// in 4 bits at offset 4p.
class TLDiagram {
public:
  /// Identity diagram on m strands (m <= kMaxTLStrands).
  static TLDiagram identity(int m);
  /// Cup-cap e_i joining top i,i+1 and bottom i,i+1 (1-based i < m).
  static TLDiagram cup_cap(int m, int i);

  int strands() const { return m_; }
  int partner(int p) const { return static_cast<int>((code_ >> (4 * p)) & 0xFU); }
  std::uint64_t code() const { return code_; }

  /// Stacks this diagram on top of `below`; returns the result and the
  /// number of closed loops formed in the middle.
  std::pair<TLDiagram, int> compose(const TLDiagram& below) const;

  /// Loops formed by joining top point i to bottom point i for every i.
  int closure_loops() const;

  friend bool operator==(const TLDiagram&, const TLDiagram&) = default;
  friend auto operator<=>(const TLDiagram&, const TLDiagram&) = default;

private:
  TLDiagram(int m, std::uint64_t code) : m_(m), code_(code) {}
  void set(int p, int q);

  int m_ = 0;
  std::uint64_t code_ = 0;
};

/// Linear combination of diagrams on m strands with Laurent coefficients.
class TLElement {
public:
  explicit TLElement(int m);
  static TLElement identity(int m);
  /// Kauffman image of sigma_i^sign: A^sign * 1 + A^-sign * e_i.
  static TLElement braid_generator(int m, int i, int sign);

  int strands() const { return m_; }
  const std::map<TLDiagram, LaurentPoly>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add(const TLDiagram& d, const LaurentPoly& c);
  TLElement operator*(const TLElement& below) const;

  /// Markov closure with loop weight d = -A^2 - A^-2, counting every loop.
  LaurentPoly closure() const;

private:
  int m_;
  std::map<TLDiagram, LaurentPoly> terms_;
};

/// The loop value -A^2 - A^-2.
LaurentPoly loop_weight();

} // namespace affbraid
