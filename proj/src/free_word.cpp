#include "affbraid/free_word.hpp"

#include "affbraid/errors.hpp"

#include <numeric>

namespace affbraid {

namespace {

void check_rank(int rank) {
  if (rank < 1) {
    throw DomainError("free group rank must be positive, got " + std::to_string(rank));
  }
}

void check_same_rank(int a, int b, const char* op) {
  if (a != b) {
    throw DomainError(std::string(op) + ": rank mismatch (" + std::to_string(a) + " vs " +
                      std::to_string(b) + ")");
  }
}

} // namespace

FreeWord::FreeWord(int rank) : rank_(rank) { check_rank(rank); }

FreeWord FreeWord::generator(int rank, int index, int sign) {
  const FreeLetter l(index, sign);
  return free_reduce(std::span<const FreeLetter>(&l, 1), rank);
}

int FreeWord::exponent_sum() const {
  return std::accumulate(letters_.begin(), letters_.end(), 0,
                         [](int acc, FreeLetter l) { return acc + l.sign(); });
}

std::string FreeWord::to_string(const std::string& symbol, int index_offset) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const FreeLetter l : letters_) {
    if (!out.empty()) {
      out += ' ';
    }
    out += symbol + std::to_string(l.index() + index_offset);
    if (l.sign() < 0) {
      out += "^-1";
    }
  }
  return out;
}

FreeWordBuilder::FreeWordBuilder(int rank, std::size_t max_length)
    : rank_(rank), max_length_(max_length) {
  check_rank(rank);
}

void FreeWordBuilder::push(FreeLetter l) {
  if (l.index() < 1 || l.index() > rank_) {
    throw DomainError("free generator index " + std::to_string(l.index()) + " outside 1.." +
                      std::to_string(rank_));
  }
  if (!letters_.empty() && letters_.back() == l.inverse()) {
    letters_.pop_back();
    return;
  }
  letters_.push_back(l);
  if (letters_.size() > max_length_) {
    throw ResourceError("free word length exceeded budget of " + std::to_string(max_length_) +
                        " letters");
  }
}

void FreeWordBuilder::append(const FreeWord& w) {
  check_same_rank(rank_, w.rank(), "append");
  for (const FreeLetter l : w.letters()) {
    push(l);
  }
}

void FreeWordBuilder::append_inverse(const FreeWord& w) {
  check_same_rank(rank_, w.rank(), "append_inverse");
  const auto ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    push(it->inverse());
  }
}

FreeWord FreeWordBuilder::build() && {
  FreeWord w(rank_);
  w.letters_ = std::move(letters_);
  return w;
}

FreeWord free_reduce(std::span<const FreeLetter> letters, int rank) {
  FreeWordBuilder b(rank, static_cast<std::size_t>(-1));
  for (const FreeLetter l : letters) {
    b.push(l);
  }
  return std::move(b).build();
}

FreeWord free_reduce(std::initializer_list<int> signed_letters, int rank) {
  std::vector<FreeLetter> ls;
  ls.reserve(signed_letters.size());
  for (const int v : signed_letters) {
    ls.push_back(FreeLetter::from_signed(v));
  }
  return free_reduce(ls, rank);
}

FreeWord free_multiply(const FreeWord& a, const FreeWord& b, std::size_t max_length) {
  check_same_rank(a.rank(), b.rank(), "free_multiply");
  FreeWordBuilder out(a.rank(), max_length);
  out.append(a);
  out.append(b);
  return std::move(out).build();
}

FreeWord free_invert(const FreeWord& a) {
  FreeWordBuilder out(a.rank(), static_cast<std::size_t>(-1));
  out.append_inverse(a);
  return std::move(out).build();
}

FreeEndomorphism::FreeEndomorphism(std::vector<FreeWord> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw DomainError("endomorphism needs at least one generator image");
  }
  for (const FreeWord& w : images_) {
    check_same_rank(rank(), w.rank(), "FreeEndomorphism");
  }
}

FreeEndomorphism FreeEndomorphism::identity(int rank) {
  check_rank(rank);
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) {
    images.push_back(FreeWord::generator(rank, i));
  }
  return FreeEndomorphism(std::move(images));
}

std::size_t FreeEndomorphism::total_length() const {
  std::size_t n = 0;
  for (const FreeWord& w : images_) {
    n += w.size();
  }
  return n;
}

FreeWord endo_apply(const FreeEndomorphism& e, const FreeWord& w, std::size_t max_length) {
  check_same_rank(e.rank(), w.rank(), "endo_apply");
  FreeWordBuilder out(e.rank(), max_length);
  for (const FreeLetter l : w.letters()) {
    if (l.sign() > 0) {
      out.append(e.image(l.index()));
    } else {
      out.append_inverse(e.image(l.index()));
    }
  }
  return std::move(out).build();
}

FreeEndomorphism endo_compose(const FreeEndomorphism& e, const FreeEndomorphism& f,
                              std::size_t max_length) {
  check_same_rank(e.rank(), f.rank(), "endo_compose");
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(f.rank()));
  for (const FreeWord& fi : f.images()) {
    images.push_back(endo_apply(e, fi, max_length));
  }
  return FreeEndomorphism(std::move(images));
}

} // namespace affbraid
