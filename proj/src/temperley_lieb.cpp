#include "affbraid/temperley_lieb.hpp"

#include "affbraid/errors.hpp"

#include <string>
#include <vector>

namespace affbraid {

namespace {

void check_strands(int m) {
  if (m < 1 || m > kMaxTLStrands) {
    throw ResourceError("Temperley-Lieb evaluation supports 1.." + std::to_string(kMaxTLStrands) +
                        " strands, got " + std::to_string(m));
  }
}

} // namespace

void TLDiagram::set(int p, int q) {
  const auto clear = ~(std::uint64_t{0xF} << (4 * p));
  code_ = (code_ & clear) | (static_cast<std::uint64_t>(q) << (4 * p));
}

TLDiagram TLDiagram::identity(int m) {
  check_strands(m);
  TLDiagram d(m, 0);
  for (int i = 0; i < m; ++i) {
    d.set(i, m + i);
    d.set(m + i, i);
  }
  return d;
}

TLDiagram TLDiagram::cup_cap(int m, int i) {
  if (i < 1 || i >= m) throw DomainError("cup_cap index outside 1..m-1");
  TLDiagram d = identity(m);
  const int a = i - 1;
  const int b = i;
  d.set(a, b);
  d.set(b, a);
  d.set(m + a, m + b);
  d.set(m + b, m + a);
  return d;
}

std::pair<TLDiagram, int> TLDiagram::compose(const TLDiagram& below) const {
  const int m = m_;
  TLDiagram out(m, 0);
  std::vector<bool> middle_seen(static_cast<std::size_t>(m), false);

  // Follows a path entering the middle row at point k going down; returns the
  // outer endpoint (top points of this, bottom points of below).
  auto follow_down = [&](int k) {
    while (true) {
      middle_seen[static_cast<std::size_t>(k)] = true;
      const int r = below.partner(k);
      if (r >= m) return r;
      middle_seen[static_cast<std::size_t>(r)] = true;
      const int q = partner(m + r);
      if (q < m) return q;
      k = q - m;
    }
  };

  for (int p = 0; p < 2 * m; ++p) {
    int end = 0;
    if (p < m) {
      const int q = partner(p);
      end = q < m ? q : follow_down(q - m);
    } else {
      const int r = below.partner(p);
      if (r >= m) {
        end = r;
      } else {
        middle_seen[static_cast<std::size_t>(r)] = true;
        const int q = partner(m + r);
        end = q < m ? q : follow_down(q - m);
      }
    }
    out.set(p, end);
  }

  int loops = 0;
  for (int k = 0; k < m; ++k) {
    if (middle_seen[static_cast<std::size_t>(k)]) continue;
    ++loops;
    int cur = k;
    do {
      middle_seen[static_cast<std::size_t>(cur)] = true;
      const int r = below.partner(cur);
      middle_seen[static_cast<std::size_t>(r)] = true;
      cur = partner(m + r) - m;
    } while (cur != k);
  }
  return {out, loops};
}

int TLDiagram::closure_loops() const {
  const int m = m_;
  std::vector<bool> seen(static_cast<std::size_t>(2 * m), false);
  int loops = 0;
  for (int start = 0; start < 2 * m; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++loops;
    int p = start;
    do {
      seen[static_cast<std::size_t>(p)] = true;
      const int q = partner(p);
      seen[static_cast<std::size_t>(q)] = true;
      p = q < m ? q + m : q - m;
    } while (p != start);
  }
  return loops;
}

TLElement::TLElement(int m) : m_(m) { check_strands(m); }

TLElement TLElement::identity(int m) {
  TLElement e(m);
  e.add(TLDiagram::identity(m), LaurentPoly(1));
  return e;
}

TLElement TLElement::braid_generator(int m, int i, int sign) {
  TLElement e(m);
  e.add(TLDiagram::identity(m), LaurentPoly::A(sign));
  e.add(TLDiagram::cup_cap(m, i), LaurentPoly::A(-sign));
  return e;
}

void TLElement::add(const TLDiagram& d, const LaurentPoly& c) {
  if (d.strands() != m_) throw DomainError("diagram strand count mismatch");
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (c.is_zero()) {
    terms_.erase(it);
  }
}

TLElement TLElement::operator*(const TLElement& below) const {
  if (below.m_ != m_) throw DomainError("TL product strand count mismatch");
  const LaurentPoly d = loop_weight();
  TLElement out(m_);
  for (const auto& [da, ca] : terms_) {
    for (const auto& [db, cb] : below.terms_) {
      const auto [dc, loops] = da.compose(db);
      out.add(dc, ca * cb * d.pow(static_cast<unsigned>(loops)));
    }
  }
  return out;
}

LaurentPoly TLElement::closure() const {
  const LaurentPoly d = loop_weight();
  LaurentPoly out;
  for (const auto& [diagram, c] : terms_) {
    out += c * d.pow(static_cast<unsigned>(diagram.closure_loops()));
  }
  return out;
}

LaurentPoly loop_weight() { return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2); }

} // namespace affbraid
