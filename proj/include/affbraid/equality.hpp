#pragma once

#include "affbraid/braid_word.hpp"
#include "affbraid/free_word.hpp"

#include <cstddef>
#include <vector>

namespace affbraid {

struct EqualityOptions {
  /// Cap on any intermediate free word while evaluating the Artin action.
  std::size_t max_endo_length = kDefaultMaxWordLength;
};

/// Bijection of {1..size}; images[k-1] is the image of k.
class Permutation {
public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int size);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }
  std::span<const int> images() const { return images_; }
  int cycle_count() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// Strand permutation of a kind-A word: strand starting at position k ends
/// at position perm(k).  Letter signs are ignored.
Permutation underlying_permutation(const BraidWord& w);

/// Artin automorphism of F_{n+1} for sigma_k^sign:
///   sigma_k: x_k -> x_k x_{k+1} x_k^-1, x_{k+1} -> x_k, others fixed.
FreeEndomorphism artin_generator(int n, int k, int sign);

/// Artin representation of a kind-A word of rank n as an endomorphism of
/// F_{n+1}; multiplicative: action(xy) = action(x) o action(y).  Throws
/// ResourceError when an image exceeds the budget.
FreeEndomorphism artin_action(const BraidWord& w, EqualityOptions options = {});

/// Image of the single generator x_index under artin_action(w), evaluated
/// right to left without composing full endomorphisms.
FreeWord artin_image(const BraidWord& w, int index, EqualityOptions options = {});

/// Injective embedding of any word into an A-type group:
///   A rank n  -> itself
///   B rank n  -> A rank n+1   (s_i -> s_{i+1}, t -> s1^2)
///   AT rank n -> A rank n+1   (through B rank n)
BraidWord embed_to_A(const BraidWord& w);

/// Group equality for words of the same kind and rank (parabolic AT words
/// are compared through the formal alphabet).  Throws DomainError on a group
/// mismatch and ResourceError when the Artin evaluation exceeds its budget.
bool words_equal(const BraidWord& x, const BraidWord& y, EqualityOptions options = {});

/// True when w represents the identity element.
bool is_identity(const BraidWord& w, EqualityOptions options = {});

} // namespace affbraid
