#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace affbraid {

/// Integer Laurent polynomial in one variable A; zero coefficients are never stored.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant); // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(std::int64_t coefficient, int exponent);
  /// The variable A raised to e.
  static LaurentPoly A(int e = 1) { return monomial(1, e); }

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;
  int max_degree() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

  /// Non-negative integer power.
  LaurentPoly pow(unsigned e) const;

  /// Exact division by a monomial c*A^e; throws DomainError if not exact.
  LaurentPoly divide_by_monomial(std::int64_t c, int e) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Descending exponents, e.g. "-A^5 - A^-3 + A^-7"; "0" for zero.
  std::string to_string() const;

private:
  void add_term(int exponent, std::int64_t c);

  std::map<int, std::int64_t> terms_;
};

/// Parses the to_string form (terms "c", "cA", "cA^e" joined by + or -).
LaurentPoly parse_laurent(std::string_view text);

} // namespace affbraid
