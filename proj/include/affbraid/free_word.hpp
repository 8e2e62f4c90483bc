#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace affbraid {

/// Default cap on the length of any free word produced while substituting.
inline constexpr std::size_t kDefaultMaxWordLength = 1'000'000;

/// A signed free generator x_i^{+1} or x_i^{-1}, stored as +i or -i.
class FreeLetter {
public:
  constexpr FreeLetter() = default;
  constexpr FreeLetter(int index, int sign) : value_(sign < 0 ? -index : index) {}

  static constexpr FreeLetter from_signed(int value) {
    FreeLetter l;
    l.value_ = value;
    return l;
  }

  constexpr int index() const { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  constexpr int signed_value() const { return value_; }
  constexpr FreeLetter inverse() const { return from_signed(-value_); }

  friend constexpr bool operator==(FreeLetter, FreeLetter) = default;
  friend constexpr auto operator<=>(FreeLetter, FreeLetter) = default;

private:
  std::int32_t value_ = 1;
};

/// Freely reduced word in the free group on x_1..x_rank.
class FreeWord {
public:
  explicit FreeWord(int rank = 1);

  /// Single generator x_index^sign.
  static FreeWord generator(int rank, int index, int sign = 1);

  int rank() const { return rank_; }
  std::span<const FreeLetter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Exponent sum over all letters.
  int exponent_sum() const;

  std::string to_string(const std::string& symbol = "x", int index_offset = 0) const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend bool operator<(const FreeWord& a, const FreeWord& b) { return a.letters_ < b.letters_; }

private:
  friend FreeWord free_reduce(std::span<const FreeLetter>, int);
  friend class FreeWordBuilder;

  int rank_;
  std::vector<FreeLetter> letters_;
};

/// Incremental free reduction with an optional length budget: pushing a letter
/// that cancels the current last letter pops it instead.
class FreeWordBuilder {
public:
  explicit FreeWordBuilder(int rank, std::size_t max_length = kDefaultMaxWordLength);

  void push(FreeLetter l);
  void append(const FreeWord& w);
  void append_inverse(const FreeWord& w);
  std::size_t size() const { return letters_.size(); }

  FreeWord build() &&;

private:
  int rank_;
  std::size_t max_length_;
  std::vector<FreeLetter> letters_;
};

FreeWord free_reduce(std::span<const FreeLetter> letters, int rank);
FreeWord free_reduce(std::initializer_list<int> signed_letters, int rank);

FreeWord free_multiply(const FreeWord& a, const FreeWord& b,
                       std::size_t max_length = kDefaultMaxWordLength);
FreeWord free_invert(const FreeWord& a);

/// Endomorphism of a free group, given by the images of the generators.
class FreeEndomorphism {
public:
  explicit FreeEndomorphism(std::vector<FreeWord> images);

  static FreeEndomorphism identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const FreeWord& image(int index) const { return images_.at(static_cast<std::size_t>(index - 1)); }
  std::span<const FreeWord> images() const { return images_; }

  /// Total letter count over all images.
  std::size_t total_length() const;

  friend bool operator==(const FreeEndomorphism&, const FreeEndomorphism&) = default;

private:
  std::vector<FreeWord> images_;
};

FreeWord endo_apply(const FreeEndomorphism& e, const FreeWord& w,
                    std::size_t max_length = kDefaultMaxWordLength);

/// (e o f): generator i maps to e(f(x_i)).
FreeEndomorphism endo_compose(const FreeEndomorphism& e, const FreeEndomorphism& f,
                              std::size_t max_length = kDefaultMaxWordLength);

} // namespace affbraid
