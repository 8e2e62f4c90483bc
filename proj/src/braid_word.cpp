#include "affbraid/braid_word.hpp"

#include "affbraid/errors.hpp"

#include <cctype>
#include <charconv>

namespace affbraid {

std::string_view to_string(GroupKind kind) {
  switch (kind) {
  case GroupKind::A: return "A";
  case GroupKind::B: return "B";
  case GroupKind::AffineA: return "AT";
  }
  return "?";
}

std::string_view to_string(Presentation p) {
  switch (p) {
  case Presentation::Formal: return "formal";
  case Presentation::Parabolic: return "parabolic";
  case Presentation::Split: return "split";
  }
  return "?";
}

namespace {

std::string letter_name(const BraidLetter& l) {
  switch (l.gen.kind) {
  case GenKind::Sigma: return "s" + std::to_string(l.gen.index);
  case GenKind::T: return "t";
  case GenKind::AGen: return "a" + std::to_string(l.gen.index);
  case GenKind::Phi: return "phi";
  }
  return "?";
}

std::string group_name(GroupKind kind, int rank) {
  return std::string(to_string(kind)) + ":n=" + std::to_string(rank);
}

[[noreturn]] void illegal(const BraidLetter& l, GroupKind kind, int rank, const std::string& why) {
  throw DomainError("generator " + letter_name(l) + " is not legal in " + group_name(kind, rank) +
                    ": " + why);
}

void check_group(GroupKind kind, int rank, Presentation p) {
  const int min_rank = kind == GroupKind::A ? 0 : 1;
  if (rank < min_rank) {
    throw DomainError("rank " + std::to_string(rank) + " too small for kind " +
                      std::string(to_string(kind)));
  }
  if (p == Presentation::Parabolic) {
    if (kind != GroupKind::AffineA) {
      throw DomainError("parabolic presentation exists only for kind AT");
    }
    if (rank < 3) {
      throw DomainError("parabolic presentation requires n >= 3, got n=" + std::to_string(rank));
    }
  }
  if (p == Presentation::Split && kind != GroupKind::B) {
    throw DomainError("split presentation exists only for kind B");
  }
}

class Expander {
public:
  Expander(GroupKind kind, int rank, Presentation p) : kind_(kind), rank_(rank), p_(p) {}

  void push(const BraidLetter& l) {
    if (l.sign != 1 && l.sign != -1) {
      throw DomainError("letter sign must be +1 or -1");
    }
    switch (l.gen.kind) {
    case GenKind::Sigma:
      if (l.gen.index < 1 || l.gen.index > rank_) {
        illegal(l, kind_, rank_, "sigma index exceeds rank");
      }
      out_.push_back(l);
      return;
    case GenKind::T:
      if (kind_ != GroupKind::B) {
        illegal(l, kind_, rank_, "t exists only in kind B");
      }
      out_.push_back(l);
      return;
    case GenKind::Phi:
      if (kind_ != GroupKind::B) {
        illegal(l, kind_, rank_, "phi exists only in kind B");
      }
      push_phi(l.sign);
      return;
    case GenKind::AGen:
      push_agen(l);
      return;
    }
  }

  std::vector<BraidLetter> take() && { return std::move(out_); }

private:
  void push_sequence(const std::vector<BraidLetter>& seq, int sign) {
    if (sign > 0) {
      for (const auto& l : seq) push(l);
    } else {
      for (auto it = seq.rbegin(); it != seq.rend(); ++it) push(it->inverse());
    }
  }

  void push_phi(int sign) {
    std::vector<BraidLetter> seq{tee()};
    for (int i = 1; i <= rank_; ++i) seq.push_back(sigma(i));
    push_sequence(seq, sign);
  }

  void push_agen(const BraidLetter& l) {
    const int k = l.gen.index;
    const int n = rank_;
    if (kind_ == GroupKind::A) {
      illegal(l, kind_, rank_, "affine generators do not exist in kind A");
    }
    if (kind_ == GroupKind::B) {
      if (k < 2 || k > n + 1) {
        illegal(l, kind_, rank_, "a_k needs 2 <= k <= n+1");
      }
      // a_k = t s1 .. s_{k-1} s_{k-2}^-1 .. s1^-1 t^-1
      std::vector<BraidLetter> seq{tee()};
      for (int i = 1; i <= k - 1; ++i) seq.push_back(sigma(i));
      for (int i = k - 2; i >= 1; --i) seq.push_back(sigma(i, -1));
      seq.push_back(tee(-1));
      push_sequence(seq, l.sign);
      return;
    }
    if (p_ == Presentation::Parabolic) {
      if (k == 3) {
        out_.push_back(l);
        return;
      }
      if (k < 4 || k > n + 1) {
        illegal(l, kind_, rank_, "parabolic words use a_3 (or a_k, 4 <= k <= n+1)");
      }
      // a_k = s_{k-1}^-1 .. s_3^-1 a_3 s_3 .. s_{k-1}
      std::vector<BraidLetter> seq;
      for (int i = k - 1; i >= 3; --i) seq.push_back(sigma(i, -1));
      seq.push_back(agen(3));
      for (int i = 3; i <= k - 1; ++i) seq.push_back(sigma(i));
      push_sequence(seq, l.sign);
      return;
    }
    if (k == n + 1) {
      out_.push_back(l);
      return;
    }
    if (k < 3 || k > n + 1) {
      illegal(l, kind_, rank_, "a_k needs 3 <= k <= n+1 (or k = n+1)");
    }
    // a_k = s_k .. s_n a_{n+1} s_n^-1 .. s_k^-1
    std::vector<BraidLetter> seq;
    for (int i = k; i <= n; ++i) seq.push_back(sigma(i));
    seq.push_back(agen(n + 1));
    for (int i = n; i >= k; --i) seq.push_back(sigma(i, -1));
    push_sequence(seq, l.sign);
  }

  GroupKind kind_;
  int rank_;
  Presentation p_;
  std::vector<BraidLetter> out_;
};

Presentation stored_presentation(Presentation p) {
  return p == Presentation::Split ? Presentation::Formal : p;
}

} // namespace

BraidWord::BraidWord(Canonical, GroupKind kind, int rank, Presentation p,
                     std::vector<BraidLetter> letters)
    : kind_(kind), rank_(rank), presentation_(p), letters_(std::move(letters)) {}

BraidWord::BraidWord(GroupKind kind, int rank, std::span<const BraidLetter> letters,
                     Presentation presentation)
    : BraidWord(expand_abbreviations(kind, rank, letters, presentation)) {}

BraidWord::BraidWord(GroupKind kind, int rank, std::initializer_list<BraidLetter> letters,
                     Presentation presentation)
    : BraidWord(kind, rank, std::span<const BraidLetter>(letters.begin(), letters.size()),
                presentation) {}

int BraidWord::exponent_sum(Generator g) const {
  int s = 0;
  for (const auto& l : letters_) {
    if (l.gen == g) s += l.sign;
  }
  return s;
}

int BraidWord::exponent_sum() const {
  int s = 0;
  for (const auto& l : letters_) s += l.sign;
  return s;
}

bool BraidWord::uses(Generator g) const {
  for (const auto& l : letters_) {
    if (l.gen == g) return true;
  }
  return false;
}

BraidWord expand_abbreviations(GroupKind kind, int rank, std::span<const BraidLetter> letters,
                               Presentation presentation) {
  check_group(kind, rank, presentation);
  const Presentation stored = stored_presentation(presentation);
  Expander e(kind, rank, stored);
  for (const auto& l : letters) e.push(l);
  return BraidWord(BraidWord::Canonical{}, kind, rank, stored, std::move(e).take());
}

BraidWord expand_abbreviations(const BraidWord& w) {
  return expand_abbreviations(w.kind(), w.rank(), w.letters(), w.presentation());
}

BraidWord concat(const BraidWord& x, const BraidWord& y) {
  if (!x.same_group(y) || x.presentation() != y.presentation()) {
    throw DomainError("concat: words live in different groups (" +
                      group_name(x.kind(), x.rank()) + " vs " + group_name(y.kind(), y.rank()) +
                      ")");
  }
  std::vector<BraidLetter> out(x.letters_);
  out.insert(out.end(), y.letters_.begin(), y.letters_.end());
  return BraidWord(BraidWord::Canonical{}, x.kind_, x.rank_, x.presentation_, std::move(out));
}

BraidWord operator*(const BraidWord& x, const BraidWord& y) { return concat(x, y); }

BraidWord invert_word(const BraidWord& x) {
  std::vector<BraidLetter> out;
  out.reserve(x.size());
  for (auto it = x.letters_.rbegin(); it != x.letters_.rend(); ++it) out.push_back(it->inverse());
  return BraidWord(BraidWord::Canonical{}, x.kind_, x.rank_, x.presentation_, std::move(out));
}

BraidWord free_cancel(const BraidWord& x) {
  std::vector<BraidLetter> out;
  out.reserve(x.size());
  for (const auto& l : x.letters_) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(BraidWord::Canonical{}, x.kind_, x.rank_, x.presentation_, std::move(out));
}

BraidWord power(const BraidWord& x, int e) {
  const BraidWord base = e < 0 ? invert_word(x) : x;
  BraidWord out = BraidWord::identity(x.kind(), x.rank(), x.presentation());
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out = out * base;
  return out;
}

BraidWord relabel(const BraidWord& w, GroupKind kind, int rank, Presentation presentation) {
  check_group(kind, rank, presentation);
  const Presentation stored = stored_presentation(presentation);
  for (const auto& l : w.letters_) {
    const bool legal = [&] {
      switch (l.gen.kind) {
      case GenKind::Sigma: return l.gen.index >= 1 && l.gen.index <= rank;
      case GenKind::T: return kind == GroupKind::B;
      case GenKind::AGen:
        if (kind != GroupKind::AffineA) return false;
        return stored == Presentation::Parabolic ? l.gen.index == 3 : l.gen.index == rank + 1;
      case GenKind::Phi: return false;
      }
      return false;
    }();
    if (!legal) {
      illegal(l, kind, rank, "cannot relabel into this group");
    }
  }
  return BraidWord(BraidWord::Canonical{}, kind, rank, stored, w.letters_);
}

BraidWord parabolic_to_formal(const BraidWord& w) {
  if (w.presentation() != Presentation::Parabolic) {
    return w;
  }
  const int n = w.rank();
  std::vector<BraidLetter> out;
  for (const auto& l : w.letters()) {
    if (l.gen.kind != GenKind::AGen) {
      out.push_back(l);
      continue;
    }
    // a_3 = s3 .. sn a_{n+1} sn^-1 .. s3^-1 (formal abbreviation)
    out.push_back(agen(3, l.sign));
  }
  return expand_abbreviations(GroupKind::AffineA, n, out, Presentation::Formal);
}

// --- parsing -------------------------------------------------------------------

namespace {

class Scanner {
public:
  Scanner(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  std::size_t offset() const { return base_ + pos_; }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(std::string_view s) {
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view s, const char* what) {
    if (!accept(s)) fail(std::string("expected ") + what);
  }

  long long integer(bool allow_sign) {
    const std::size_t start = pos_;
    if (allow_sign && (peek() == '-' || peek() == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer");
    }
    long long v = 0;
    const char* first = text_.data() + (text_[start] == '+' ? start + 1 : start);
    const auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, v);
    if (ec != std::errc() || v > 1'000'000 || v < -1'000'000) {
      pos_ = start;
      fail("integer out of range");
    }
    (void)ptr;
    return v;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, offset()); }
  void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

bool at_atom_boundary(Scanner& s) {
  const char c = s.peek();
  return c == '\0' || c == '^' || std::isspace(static_cast<unsigned char>(c));
}

BraidWord parse_atoms(Scanner& s, GroupKind kind, int rank, ParseOptions options) {
  std::vector<BraidLetter> raw;
  const Presentation p = options.presentation;
  while (!s.done()) {
    const std::size_t at = s.offset();
    BraidLetter base;
    if (s.accept("phi")) {
      base = phi();
    } else if (s.accept("s")) {
      base = sigma(static_cast<int>(s.integer(false)));
    } else if (s.accept("a")) {
      base = agen(static_cast<int>(s.integer(false)));
    } else if (s.accept("t")) {
      base = tee();
    } else {
      s.fail("unknown generator");
    }
    if (!at_atom_boundary(s)) s.fail("unexpected character after generator");
    long long e = 1;
    if (s.accept("^")) e = s.integer(true);
    if (!at_atom_boundary(s) || s.peek() == '^') s.fail("unexpected character after exponent");
    // Validate the base letter on its own so the error points at the atom.
    try {
      (void)expand_abbreviations(kind, rank, std::span<const BraidLetter>(&base, 1), p);
    } catch (const DomainError& err) {
      s.fail_at(err.what(), at);
    }
    const BraidLetter l = e < 0 ? base.inverse() : base;
    for (long long i = 0; i < (e < 0 ? -e : e); ++i) raw.push_back(l);
  }
  return expand_abbreviations(kind, rank, raw, p);
}

} // namespace

BraidWord parse_word(std::string_view atoms, GroupKind kind, int rank, ParseOptions options) {
  try {
    check_group(kind, rank, options.presentation);
  } catch (const DomainError& err) {
    throw ParseError(err.what(), 0);
  }
  Scanner s(atoms, 0);
  return parse_atoms(s, kind, rank, options);
}

BraidWord parse(std::string_view text, ParseOptions options) {
  Scanner s(text, 0);
  s.skip_ws();
  GroupKind kind;
  if (s.accept("AT")) {
    kind = GroupKind::AffineA;
  } else if (s.accept("A")) {
    kind = GroupKind::A;
  } else if (s.accept("B")) {
    kind = GroupKind::B;
  } else {
    s.fail("expected group kind A, B or AT");
  }
  s.skip_ws();
  s.expect(":", "':' after kind");
  s.skip_ws();
  s.expect("n=", "'n='");
  const std::size_t rank_at = s.offset();
  const long long rank = s.integer(false);
  s.skip_ws();
  s.expect(":", "':' after rank");
  Presentation p = options.presentation;
  if (kind != GroupKind::AffineA) p = Presentation::Formal;
  try {
    check_group(kind, static_cast<int>(rank), p);
  } catch (const DomainError& err) {
    throw ParseError(err.what(), rank_at);
  }
  return parse_atoms(s, kind, static_cast<int>(rank), ParseOptions{p});
}

std::string render_atoms(const BraidWord& w) {
  std::string out;
  const auto ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const long long run = static_cast<long long>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += letter_name(ls[i]);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::string render(const BraidWord& w) {
  std::string out = group_name(w.kind(), w.rank()) + ":";
  const std::string atoms = render_atoms(w);
  if (!atoms.empty()) out += " " + atoms;
  return out;
}

// --- relations -------------------------------------------------------------------

namespace {

struct TableBuilder {
  RelationTable table;

  void add(std::string label, std::vector<BraidLetter> lhs, std::vector<BraidLetter> rhs) {
    const Presentation p = table.presentation;
    table.pairs.push_back(Relation{std::move(label),
                                   BraidWord(table.kind, table.rank, lhs, p),
                                   BraidWord(table.kind, table.rank, rhs, p)});
  }

  // sigma_i sigma_j = sigma_j sigma_i, |i-j| >= 2; braid relations among sigmas
  void sigma_relations(const std::string& far, const std::string& braid) {
    const int n = table.rank;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 2; j <= n; ++j) {
        add(far, {sigma(i), sigma(j)}, {sigma(j), sigma(i)});
      }
    }
    for (int i = 1; i + 1 <= n; ++i) {
      add(braid, {sigma(i), sigma(i + 1), sigma(i)}, {sigma(i + 1), sigma(i), sigma(i + 1)});
    }
  }

  // relations (3'),(4'),(5') with a = the top affine generator
  void affine_relations(const BraidLetter& a, const std::string& commute,
                        const std::string& first, const std::string& last) {
    const int n = table.rank;
    for (int i = 2; i <= n - 1; ++i) add(commute, {sigma(i), a}, {a, sigma(i)});
    if (n >= 2) {
      add(first, {sigma(1), a, sigma(1)}, {a, sigma(1), a});
      add(last, {sigma(n), a, sigma(n)}, {a, sigma(n), a});
    }
  }
};

} // namespace

RelationTable defining_relations(GroupKind kind, int rank, Presentation presentation) {
  check_group(kind, rank, presentation);
  TableBuilder b{RelationTable{kind, rank, presentation, {}}};
  const int n = rank;
  switch (kind) {
  case GroupKind::A:
    if (presentation != Presentation::Formal) {
      throw DomainError("kind A has only the formal presentation");
    }
    b.sigma_relations("(1)", "(2)");
    break;
  case GroupKind::B:
    if (presentation == Presentation::Formal) {
      b.sigma_relations("(1)", "(2)");
      for (int i = 2; i <= n; ++i) b.add("(3)", {sigma(i), tee()}, {tee(), sigma(i)});
      b.add("(4)", {sigma(1), tee(), sigma(1), tee()}, {tee(), sigma(1), tee(), sigma(1)});
    } else {
      const BraidLetter a = agen(n + 1);
      b.sigma_relations("(1)", "(2)");
      b.affine_relations(a, "(3)", "(4)", "(5)");
      for (int i = 1; i <= n - 1; ++i) {
        b.add("(6)", {phi(), sigma(i), phi(-1)}, {sigma(i + 1)});
      }
      b.add("(7)", {phi(), sigma(n), phi(-1)}, {a});
      b.add("(8)", {phi(), a, phi(-1)}, {sigma(1)});
    }
    break;
  case GroupKind::AffineA:
    if (presentation == Presentation::Formal) {
      b.sigma_relations("(1')", "(2')");
      b.affine_relations(agen(n + 1), "(3')", "(4')", "(5')");
    } else {
      const BraidLetter a3 = agen(3);
      b.sigma_relations("(1)", "(2)");
      b.add("(3)", {sigma(1), a3, sigma(1)}, {a3, sigma(1), a3});
      b.add("(4)", {sigma(3), a3, sigma(3)}, {a3, sigma(3), a3});
      for (int i = 4; i <= n; ++i) b.add("(5)", {sigma(i), a3}, {a3, sigma(i)});
      b.add("(6)", {sigma(3), sigma(2), a3, sigma(3)}, {sigma(2), a3, sigma(3), sigma(2)});
    }
    break;
  }
  return std::move(b.table);
}

} // namespace affbraid
