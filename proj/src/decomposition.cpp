#include "affbraid/decomposition.hpp"

#include "affbraid/errors.hpp"
#include "affbraid/morphisms.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace affbraid {

namespace {

void require_kind(const BraidWord& w, GroupKind kind, const char* op) {
  if (w.kind() != kind) {
    throw DomainError(std::string(op) + ": unexpected group for " + render(w));
  }
}

// Letter of AT rank n moved r steps along s1 -> .. -> s_n -> a_{n+1} -> s1.
BraidLetter shifted(int n, int r, int pos, int sign) {
  const int period = n + 1;
  const int target = (((pos + r) % period) + period) % period;
  return target == n ? agen(n + 1, sign) : sigma(target + 1, sign);
}

void check_n(int n, const char* op) {
  if (n < 1) throw DomainError(std::string(op) + ": rank must be >= 1");
}

// Whitespace-separated atoms "<head><payload>(^int)?".
struct AtomScanner {
  std::string_view text;
  std::size_t pos = 0;

  bool done() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos >= text.size();
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }
  void expect(char c) {
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  bool accept(char c) {
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  int integer(bool allow_sign) {
    const std::size_t start = pos;
    bool negative = false;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    int value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || !std::isdigit(static_cast<unsigned char>(*first)) || ec != std::errc{}) {
      pos = start;
      fail("expected integer");
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    return negative ? -value : value;
  }
  int exponent() {
    int e = 1;
    if (accept('^')) {
      const std::size_t at = pos;
      e = integer(true);
      if (e < -1'000'000 || e > 1'000'000) {
        pos = at;
        fail("exponent out of range");
      }
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      fail("unexpected character");
    }
    return e;
  }
  // The lone atom "1" denotes the empty word.
  bool accept_unit() {
    if (text.substr(pos) == "1" ||
        (text.substr(pos, 1) == "1" && pos + 1 < text.size() &&
         std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
      ++pos;
      return true;
    }
    return false;
  }
};

std::string power_suffix(int e) { return e == 1 ? "" : "^" + std::to_string(e); }

} // namespace

int t_exponent_sum(const BraidWord& w) {
  require_kind(w, GroupKind::B, "t_exponent_sum");
  return w.exponent_sum(Generator{GenKind::T, 0});
}

bool is_affine(const BraidWord& w) { return t_exponent_sum(w) == 0; }

PhiDecomposition phi_decompose(const BraidWord& w) {
  require_kind(w, GroupKind::B, "phi_decompose");
  const int n = w.rank();
  std::vector<BraidLetter> out;
  int r = 0;
  for (const BraidLetter& l : w.letters()) {
    if (l.gen.kind == GenKind::Sigma) {
      out.push_back(shifted(n, r, l.gen.index - 1, l.sign));
    } else if (l.sign > 0) {
      // t = phi z
      ++r;
      for (int i = n; i >= 1; --i) out.push_back(shifted(n, r, i - 1, -1));
    } else {
      // t^-1 = z^-1 phi^-1
      for (int i = 1; i <= n; ++i) out.push_back(shifted(n, r, i - 1, 1));
      --r;
    }
  }
  return {free_cancel(BraidWord(GroupKind::AffineA, n, out)), r};
}

BraidWord phi_recombine(const PhiDecomposition& d) {
  const int n = d.lambda.rank();
  const BraidWord lifted = apply_morphism({MorphismKind::Iota, n}, d.lambda);
  return lifted * power(BraidWord(GroupKind::B, n, {phi()}), d.k);
}

BraidWord to_parabolic(const BraidWord& input) {
  const BraidWord w = parabolic_to_formal(input);
  require_kind(w, GroupKind::AffineA, "to_parabolic");
  if (w.rank() < 3) throw DomainError("parabolic presentation needs n >= 3");
  // a_{n+1} is an abbreviation in the parabolic alphabet.
  return BraidWord(GroupKind::AffineA, w.rank(), w.letters(), Presentation::Parabolic);
}

BraidWord from_parabolic(const BraidWord& w) {
  require_kind(w, GroupKind::AffineA, "from_parabolic");
  if (w.rank() < 3) throw DomainError("parabolic presentation needs n >= 3");
  return parabolic_to_formal(w);
}

FreeEndomorphism kernel_action_table(int n, int j, int sign) {
  check_n(n, "kernel_action_table");
  if (j < 1 || j > n) throw DomainError("kernel_action_table: j outside 1..n");
  const int rank = n + 1;
  std::vector<FreeWord> images;
  for (int idx = 1; idx <= rank; ++idx) images.push_back(FreeWord::generator(rank, idx));
  const int lo = j;     // F_{j-1}
  const int hi = j + 1; // F_j
  auto& img_lo = images[static_cast<std::size_t>(lo - 1)];
  auto& img_hi = images[static_cast<std::size_t>(hi - 1)];
  if (sign > 0) {
    img_lo = FreeWord::generator(rank, hi);
    img_hi = free_reduce({-hi, lo, hi}, rank);
  } else {
    img_hi = FreeWord::generator(rank, lo);
    img_lo = free_reduce({lo, hi, -lo}, rank);
  }
  return FreeEndomorphism(std::move(images));
}

KernelWord kernel_rewrite_F(const BraidWord& w, EqualityOptions options) {
  require_kind(w, GroupKind::B, "kernel_rewrite_F");
  const int n = w.rank();
  if (!is_identity(apply_morphism({MorphismKind::Alpha, n}, w), options)) {
    throw DomainError("kernel_rewrite_F: alpha_n of the input is not the identity");
  }
  const int rank = n + 1;
  // w = K * s with s the sigma letters read so far; psi is conjugation by s.
  FreeEndomorphism psi = FreeEndomorphism::identity(rank);
  FreeWordBuilder out(rank, options.max_endo_length);
  for (const BraidLetter& l : w.letters()) {
    if (l.gen.kind == GenKind::Sigma) {
      psi = endo_compose(psi, kernel_action_table(n, l.gen.index, l.sign), options.max_endo_length);
    } else if (l.sign > 0) {
      out.append(psi.image(1));
    } else {
      out.append_inverse(psi.image(1));
    }
  }
  return {n, std::move(out).build()};
}

BraidWord kernel_expand(const KernelWord& k) {
  check_n(k.n, "kernel_expand");
  std::vector<BraidLetter> out;
  for (const FreeLetter l : k.word.letters()) {
    const int i = l.index() - 1;
    std::vector<BraidLetter> f;
    for (int m = i; m >= 1; --m) f.push_back(sigma(m));
    f.push_back(tee());
    for (int m = 1; m <= i; ++m) f.push_back(sigma(m, -1));
    if (l.sign() > 0) {
      out.insert(out.end(), f.begin(), f.end());
    } else {
      for (auto it = f.rbegin(); it != f.rend(); ++it) out.push_back(it->inverse());
    }
  }
  return BraidWord(GroupKind::B, k.n, out);
}

SchreierWord schreier_rewrite(const KernelWord& k) {
  check_n(k.n, "schreier_rewrite");
  if (k.word.exponent_sum() != 0) {
    throw DomainError("schreier_rewrite: F-exponent sum is " +
                      std::to_string(k.word.exponent_sum()) + ", expected 0");
  }
  SchreierWord s{k.n, {}};
  int j = 0;
  auto emit = [&s](SchreierLetter g) {
    if (!s.letters.empty() && s.letters.back() == g.inverse()) {
      s.letters.pop_back();
    } else {
      s.letters.push_back(g);
    }
  };
  for (const FreeLetter l : k.word.letters()) {
    const int i = l.index() - 1;
    if (l.sign() > 0) {
      if (i >= 1) emit({j, i, 1});
      ++j;
    } else {
      if (i >= 1) emit({j - 1, i, -1});
      --j;
    }
  }
  return s;
}

KernelWord schreier_expand(const SchreierWord& s) {
  check_n(s.n, "schreier_expand");
  const int rank = s.n + 1;
  FreeWordBuilder out(rank);
  const FreeLetter f0(1, 1);
  for (const SchreierLetter& g : s.letters) {
    if (g.i < 1 || g.i > s.n) throw DomainError("schreier letter index outside 1..n");
    // g_{j,i} = F_0^j F_i F_0^-(j+1)
    std::vector<FreeLetter> letters;
    for (int m = 0; m < std::abs(g.j); ++m) letters.push_back(g.j > 0 ? f0 : f0.inverse());
    letters.emplace_back(g.i + 1, 1);
    for (int m = 0; m < std::abs(g.j + 1); ++m) letters.push_back(g.j + 1 > 0 ? f0.inverse() : f0);
    if (g.sign > 0) {
      for (const FreeLetter l : letters) out.push(l);
    } else {
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.push(it->inverse());
    }
  }
  return {s.n, std::move(out).build()};
}

BraidWord schreier_expand_affine(const SchreierWord& s) {
  const PhiDecomposition d = phi_decompose(kernel_expand(schreier_expand(s)));
  if (d.k != 0) throw std::logic_error("schreier expansion left the affine subgroup");
  return d.lambda;
}

NeDecomposition ne_decompose(const BraidWord& input, EqualityOptions options) {
  const BraidWord x = parabolic_to_formal(input);
  require_kind(x, GroupKind::AffineA, "ne_decompose");
  const int n = x.rank();
  BraidWord u = apply_morphism({MorphismKind::Beta, n}, x);
  const BraidWord section = apply_morphism({MorphismKind::IInc, n}, u);
  const BraidWord rest = free_cancel(x * invert_word(section));
  const BraidWord lifted = apply_morphism({MorphismKind::Iota, n}, rest);
  KernelWord kernel{n, FreeWord(n + 1)};
  try {
    kernel = kernel_rewrite_F(lifted, options);
  } catch (const DomainError& err) {
    throw std::logic_error(std::string("ne_decompose: kernel membership failed: ") + err.what());
  }
  return {schreier_rewrite(kernel), std::move(u)};
}

std::string render(const KernelWord& k) {
  const auto ls = k.word.letters();
  if (ls.empty()) return "1";
  std::string out;
  for (std::size_t p = 0; p < ls.size();) {
    std::size_t q = p;
    while (q < ls.size() && ls[q] == ls[p]) ++q;
    if (!out.empty()) out += ' ';
    out += "F" + std::to_string(ls[p].index() - 1) +
           power_suffix(ls[p].sign() * static_cast<int>(q - p));
    p = q;
  }
  return out;
}

KernelWord parse_kernel_word(std::string_view text, int n) {
  check_n(n, "parse_kernel_word");
  AtomScanner s{text};
  std::vector<FreeLetter> letters;
  while (!s.done()) {
    if (s.accept_unit()) continue;
    const std::size_t at = s.pos;
    s.expect('F');
    const int i = s.integer(false);
    if (i > n) {
      s.pos = at;
      s.fail("kernel generator F" + std::to_string(i) + " exceeds rank " + std::to_string(n));
    }
    const int e = s.exponent();
    for (int m = 0; m < std::abs(e); ++m) letters.emplace_back(i + 1, e);
  }
  return {n, free_reduce(letters, n + 1)};
}

std::string render(const SchreierWord& s) {
  if (s.letters.empty()) return "1";
  std::string out;
  for (std::size_t p = 0; p < s.letters.size();) {
    std::size_t q = p;
    while (q < s.letters.size() && s.letters[q] == s.letters[p]) ++q;
    if (!out.empty()) out += ' ';
    const SchreierLetter& g = s.letters[p];
    out += "g[" + std::to_string(g.j) + "," + std::to_string(g.i) + "]" +
           power_suffix(g.sign * static_cast<int>(q - p));
    p = q;
  }
  return out;
}

SchreierWord parse_schreier_word(std::string_view text, int n) {
  check_n(n, "parse_schreier_word");
  AtomScanner s{text};
  SchreierWord out{n, {}};
  while (!s.done()) {
    if (s.accept_unit()) continue;
    const std::size_t at = s.pos;
    s.expect('g');
    s.expect('[');
    const int j = s.integer(true);
    s.expect(',');
    const int i = s.integer(false);
    s.expect(']');
    if (i < 1 || i > n) {
      s.pos = at;
      s.fail("Schreier generator index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
    const int e = s.exponent();
    const SchreierLetter g{j, i, e < 0 ? -1 : 1};
    for (int m = 0; m < std::abs(e); ++m) {
      if (!out.letters.empty() && out.letters.back() == g.inverse()) {
        out.letters.pop_back();
      } else {
        out.letters.push_back(g);
      }
    }
  }
  return out;
}

} // namespace affbraid
