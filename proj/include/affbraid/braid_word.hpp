#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace affbraid {

/// The three families.  Rank n always counts the sigma generators:
///   A       rank n: B(A_n), sigma_1..sigma_n on n+1 strands (n >= 0)
///   B       rank n: B(B_{n+1}), sigma_1..sigma_n and t (n >= 1)
///   AffineA rank n: B(~A_n), sigma_1..sigma_n and a_{n+1} (n >= 1)
enum class GroupKind : std::uint8_t { A, B, AffineA };

/// Generating set a word is written in.  Parabolic applies to AffineA with
/// n >= 3 and replaces a_{n+1} by a_3.  Split only names the
/// {sigma, a_{n+1}, phi} relation table of kind B; words written in it are
/// ingested as formal words.
enum class Presentation : std::uint8_t { Formal, Parabolic, Split };

std::string_view to_string(GroupKind kind);
std::string_view to_string(Presentation p);

enum class GenKind : std::uint8_t { Sigma, T, AGen, Phi };

struct Generator {
  GenKind kind = GenKind::Sigma;
  int index = 0; // sigma and a-generator index, 0 for t and phi

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

struct BraidLetter {
  Generator gen;
  int sign = 1;

  BraidLetter inverse() const { return {gen, -sign}; }

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
  friend auto operator<=>(const BraidLetter&, const BraidLetter&) = default;
};

inline BraidLetter sigma(int i, int sign = 1) { return {{GenKind::Sigma, i}, sign}; }
inline BraidLetter tee(int sign = 1) { return {{GenKind::T, 0}, sign}; }
inline BraidLetter agen(int k, int sign = 1) { return {{GenKind::AGen, k}, sign}; }
inline BraidLetter phi(int sign = 1) { return {{GenKind::Phi, 0}, sign}; }

/// A braid word in canonical storage form: abbreviations (phi, a_k with k
/// below the top) are expanded at construction, so every letter belongs to
/// the formal alphabet of (kind, rank) -- or to {sigma, a_3} for parabolic
/// AffineA words.  operator== is literal letter equality; group equality is
/// words_equal().
class BraidWord {
public:
  BraidWord(GroupKind kind, int rank, std::span<const BraidLetter> letters = {},
            Presentation presentation = Presentation::Formal);
  BraidWord(GroupKind kind, int rank, std::initializer_list<BraidLetter> letters,
            Presentation presentation = Presentation::Formal);

  static BraidWord identity(GroupKind kind, int rank,
                            Presentation presentation = Presentation::Formal) {
    return BraidWord(kind, rank, std::span<const BraidLetter>{}, presentation);
  }

  GroupKind kind() const { return kind_; }
  int rank() const { return rank_; }
  Presentation presentation() const { return presentation_; }
  std::span<const BraidLetter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool same_group(const BraidWord& other) const {
    return kind_ == other.kind_ && rank_ == other.rank_;
  }

  /// Signed count of letters equal to g.
  int exponent_sum(Generator g) const;
  /// Signed count of all letters.
  int exponent_sum() const;
  bool uses(Generator g) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  struct Canonical {};
  BraidWord(Canonical, GroupKind kind, int rank, Presentation p, std::vector<BraidLetter> letters);

  friend BraidWord expand_abbreviations(GroupKind, int, std::span<const BraidLetter>, Presentation);
  friend BraidWord concat(const BraidWord&, const BraidWord&);
  friend BraidWord invert_word(const BraidWord&);
  friend BraidWord free_cancel(const BraidWord&);
  friend BraidWord relabel(const BraidWord&, GroupKind, int, Presentation);

  GroupKind kind_;
  int rank_;
  Presentation presentation_;
  std::vector<BraidLetter> letters_;
};

/// Validates letters for (kind, rank, presentation) and expands abbreviations:
///   phi (kind B)             -> t s1 .. sn
///   a_k (kind B, 2<=k<=n+1)  -> t s1 .. s_{k-1} s_{k-2}^-1 .. s1^-1 t^-1
///   a_k (AffineA, 3<=k<=n)   -> s_k .. s_n a_{n+1} s_n^-1 .. s_k^-1
///   a_k (parabolic, 4<=k<=n+1) -> s_{k-1}^-1 .. s_3^-1 a_3 s_3 .. s_{k-1}
/// Throws DomainError for letters illegal in the group.
BraidWord expand_abbreviations(GroupKind kind, int rank, std::span<const BraidLetter> letters,
                               Presentation presentation = Presentation::Formal);
BraidWord expand_abbreviations(const BraidWord& w);

BraidWord concat(const BraidWord& x, const BraidWord& y);
BraidWord invert_word(const BraidWord& x);
/// Removes adjacent letter/inverse pairs only; not a normal form.
BraidWord free_cancel(const BraidWord& x);

BraidWord operator*(const BraidWord& x, const BraidWord& y);

/// Power x^e (e may be negative).
BraidWord power(const BraidWord& x, int e);

/// Reinterprets the letters of w in another group whose alphabet contains
/// them (e.g. a sigma-only word of B(A_n) inside B(A_m), m >= n).  Letters
/// are validated against the target.
BraidWord relabel(const BraidWord& w, GroupKind kind, int rank,
                  Presentation presentation = Presentation::Formal);

/// Parabolic AffineA word rewritten in the formal alphabet
/// (a_3 -> s3 .. sn a_{n+1} sn^-1 .. s3^-1); formal words pass through.
BraidWord parabolic_to_formal(const BraidWord& w);

// --- text form ---------------------------------------------------------------
//   braid  := header word          header := kind ":" "n=" uint ":"
//   kind   := "A" | "B" | "AT"     atom   := base ("^" int)?
//   base   := "s" uint | "t" | "a" uint | "phi"

struct ParseOptions {
  /// For AT words: Parabolic keeps a_3 as a generator (n >= 3).
  Presentation presentation = Presentation::Formal;
};

BraidWord parse(std::string_view text, ParseOptions options = {});
/// Parses a whitespace-separated atom list for an already known group.
BraidWord parse_word(std::string_view atoms, GroupKind kind, int rank, ParseOptions options = {});

std::string render(const BraidWord& w);
/// Atoms only, without the header; runs of equal letters are written as powers.
std::string render_atoms(const BraidWord& w);

// --- defining relations ----------------------------------------------------

struct Relation {
  std::string label; // numbering as in the presentations, e.g. "(4')"
  BraidWord lhs;
  BraidWord rhs;
};

struct RelationTable {
  GroupKind kind;
  int rank;
  Presentation presentation;
  std::vector<Relation> pairs;
};

/// Complete list of defining relations.  Supported combinations: (A, Formal),
/// (B, Formal), (B, Split), (AffineA, Formal), (AffineA, Parabolic, n >= 3).
RelationTable defining_relations(GroupKind kind, int rank,
                                 Presentation presentation = Presentation::Formal);

} // namespace affbraid
