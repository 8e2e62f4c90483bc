#include "affbraid/equality.hpp"

#include "affbraid/errors.hpp"
#include "affbraid/morphisms.hpp"

#include <algorithm>

namespace affbraid {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (const int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v - 1)]) {
      throw DomainError("permutation images are not a bijection");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> images(static_cast<std::size_t>(size));
  for (int k = 0; k < size; ++k) images[static_cast<std::size_t>(k)] = k + 1;
  return Permutation(std::move(images));
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t k = start; !seen[k]; k = static_cast<std::size_t>(images_[k] - 1)) {
      seen[k] = true;
    }
  }
  return cycles;
}

namespace {

void require_kind_a(const BraidWord& w, const char* op) {
  if (w.kind() != GroupKind::A) {
    throw DomainError(std::string(op) + " expects a kind-A word, got " + render(w));
  }
}

// Applies sigma_k^sign (as an automorphism of F_{n+1}) to a reduced word.
FreeWord apply_generator(const FreeWord& w, int k, int sign, std::size_t max_length) {
  FreeWordBuilder out(w.rank(), max_length);
  const FreeLetter xk(k, 1);
  const FreeLetter xk1(k + 1, 1);
  for (const FreeLetter l : w.letters()) {
    const int i = l.index();
    const bool pos = l.sign() > 0;
    if (sign > 0) {
      if (i == k) {
        out.push(xk);
        out.push(pos ? xk1 : xk1.inverse());
        out.push(xk.inverse());
      } else if (i == k + 1) {
        out.push(pos ? xk : xk.inverse());
      } else {
        out.push(l);
      }
    } else {
      if (i == k) {
        out.push(pos ? xk1 : xk1.inverse());
      } else if (i == k + 1) {
        out.push(xk1.inverse());
        out.push(pos ? xk : xk.inverse());
        out.push(xk1);
      } else {
        out.push(l);
      }
    }
  }
  return std::move(out).build();
}

BraidWord subword(const BraidWord& w, std::size_t first, std::size_t last) {
  return BraidWord(w.kind(), w.rank(), w.letters().subspan(first, last - first),
                   w.presentation());
}

// Letters of a freely reduced word with inverse pairs at the two ends removed.
std::vector<BraidLetter> cyclic_letters(const BraidWord& w) {
  const auto ls = w.letters();
  std::size_t first = 0;
  std::size_t last = ls.size();
  while (last - first >= 2 && ls[first] == ls[last - 1].inverse()) {
    ++first;
    --last;
  }
  return {ls.begin() + static_cast<std::ptrdiff_t>(first), ls.begin() + static_cast<std::ptrdiff_t>(last)};
}

} // namespace

Permutation underlying_permutation(const BraidWord& w) {
  require_kind_a(w, "underlying_permutation");
  const int strands = w.rank() + 1;
  // position[k] = current position of the strand that started at k+1
  std::vector<int> position(static_cast<std::size_t>(strands));
  std::vector<int> at(static_cast<std::size_t>(strands)); // at[p] = strand at position p+1
  for (int k = 0; k < strands; ++k) {
    position[static_cast<std::size_t>(k)] = k + 1;
    at[static_cast<std::size_t>(k)] = k;
  }
  for (const BraidLetter& l : w.letters()) {
    const auto i = static_cast<std::size_t>(l.gen.index - 1);
    std::swap(at[i], at[i + 1]);
    position[static_cast<std::size_t>(at[i])] = static_cast<int>(i) + 1;
    position[static_cast<std::size_t>(at[i + 1])] = static_cast<int>(i) + 2;
  }
  return Permutation(std::move(position));
}

FreeEndomorphism artin_generator(int n, int k, int sign) {
  if (k < 1 || k > n) {
    throw DomainError("artin_generator: sigma index outside 1..n");
  }
  const int rank = n + 1;
  std::vector<FreeWord> images;
  for (int i = 1; i <= rank; ++i) {
    images.push_back(apply_generator(FreeWord::generator(rank, i), k, sign, kDefaultMaxWordLength));
  }
  return FreeEndomorphism(std::move(images));
}

FreeWord artin_image(const BraidWord& w, int index, EqualityOptions options) {
  require_kind_a(w, "artin_image");
  FreeWord current = FreeWord::generator(w.rank() + 1, index);
  const auto ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    current = apply_generator(current, it->gen.index, it->sign, options.max_endo_length);
  }
  return current;
}

FreeEndomorphism artin_action(const BraidWord& w, EqualityOptions options) {
  require_kind_a(w, "artin_action");
  std::vector<FreeWord> images;
  for (int i = 1; i <= w.rank() + 1; ++i) images.push_back(artin_image(w, i, options));
  return FreeEndomorphism(std::move(images));
}

BraidWord embed_to_A(const BraidWord& input) {
  const BraidWord w = parabolic_to_formal(input);
  switch (w.kind()) {
  case GroupKind::A: return w;
  case GroupKind::B: return apply_morphism({MorphismKind::UnderbarI, w.rank() + 1}, w);
  case GroupKind::AffineA: return apply_morphism({MorphismKind::XBar, w.rank() + 1}, w);
  }
  throw DomainError("unknown group kind");
}

bool words_equal(const BraidWord& x_in, const BraidWord& y_in, EqualityOptions options) {
  if (!x_in.same_group(y_in)) {
    throw DomainError("words_equal: " + render(x_in) + " and " + render(y_in) +
                      " live in different groups");
  }
  BraidWord x = free_cancel(parabolic_to_formal(x_in));
  BraidWord y = free_cancel(parabolic_to_formal(y_in));

  // x = p m s and y = p m' s are equal iff m = m'.
  const auto xl = x.letters();
  const auto yl = y.letters();
  std::size_t prefix = 0;
  while (prefix < xl.size() && prefix < yl.size() && xl[prefix] == yl[prefix]) ++prefix;
  std::size_t suffix = 0;
  while (suffix < xl.size() - prefix && suffix < yl.size() - prefix &&
         xl[xl.size() - 1 - suffix] == yl[yl.size() - 1 - suffix]) {
    ++suffix;
  }
  if (prefix + suffix == xl.size() && xl.size() == yl.size()) return true;
  x = subword(x, prefix, xl.size() - suffix);
  y = subword(y, prefix, yl.size() - suffix);

  const BraidWord ax = embed_to_A(x);
  const BraidWord ay = embed_to_A(y);
  // Necessary conditions; they may only short-circuit to false.
  if (ax.exponent_sum() != ay.exponent_sum()) return false;
  if (underlying_permutation(ax) != underlying_permutation(ay)) return false;

  // x = y iff z = x y^-1 is trivial iff some cyclic rotation of z is; the
  // rotations have very different intermediate image sizes, so search them
  // under a growing budget.
  const std::vector<BraidLetter> z = cyclic_letters(free_cancel(ax * invert_word(ay)));
  if (z.empty()) return true;
  const int strands = ax.rank() + 1;
  std::size_t budget = std::min<std::size_t>(options.max_endo_length, 4096);
  while (true) {
    for (std::size_t r = 0; r < z.size(); ++r) {
      std::vector<BraidLetter> rotated(z.begin() + static_cast<std::ptrdiff_t>(r), z.end());
      rotated.insert(rotated.end(), z.begin(), z.begin() + static_cast<std::ptrdiff_t>(r));
      const BraidWord zr(GroupKind::A, ax.rank(), rotated);
      try {
        for (int i = 1; i <= strands; ++i) {
          if (artin_image(zr, i, {budget}) != FreeWord::generator(strands, i)) return false;
        }
        return true;
      } catch (const ResourceError&) {
      }
    }
    if (budget >= options.max_endo_length) break;
    budget = std::min(options.max_endo_length, budget * 16);
  }
  throw ResourceError("Artin evaluation exceeded the image budget of " +
                      std::to_string(options.max_endo_length) + " letters");
}

bool is_identity(const BraidWord& w, EqualityOptions options) {
  return words_equal(w, BraidWord::identity(w.kind(), w.rank(), w.presentation()), options);
}

} // namespace affbraid
