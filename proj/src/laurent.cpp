#include "affbraid/laurent.hpp"

#include "affbraid/errors.hpp"

#include <cctype>
#include <charconv>

namespace affbraid {

LaurentPoly::LaurentPoly(std::int64_t constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(std::int64_t coefficient, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

void LaurentPoly::add_term(int exponent, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::divide_by_monomial(std::int64_t c, int e) const {
  if (c == 0) throw DomainError("division by zero monomial");
  LaurentPoly out;
  for (const auto& [exp, coeff] : terms_) {
    if (coeff % c != 0) throw DomainError("inexact Laurent division");
    out.add_term(exp - e, coeff / c);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "A";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly parse_laurent(std::string_view text) {
  LaurentPoly out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&](std::int64_t& value) {
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + pos) return false;
    pos = static_cast<std::size_t>(ptr - text.data());
    return true;
  };
  skip();
  if (text.substr(pos) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) {
      if (first) throw ParseError("empty polynomial", pos);
      break;
    }
    std::int64_t sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    std::int64_t coeff = 1;
    const bool has_coeff = pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    if (has_coeff && !number(coeff)) throw ParseError("bad coefficient", pos);
    int exponent = 0;
    if (pos < text.size() && text[pos] == 'A') {
      ++pos;
      exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::int64_t e = 0;
        if (!number(e)) throw ParseError("bad exponent", pos);
        exponent = static_cast<int>(e);
      }
    } else if (!has_coeff) {
      throw ParseError("expected term", pos);
    }
    out += LaurentPoly::monomial(sign * coeff, exponent);
    first = false;
  }
  return out;
}

} // namespace affbraid
