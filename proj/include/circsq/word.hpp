#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace circsq {

using Symbol = unsigned char;

// A finite word over dense symbol ids 0..k-1.
//
// Symbols are stored as raw bytes in a std::string, so comparison is the
// lexicographic order on ids and short words stay in the small-string buffer.
// A word optionally carries a label table mapping ids back to the characters
// it was parsed from; labels never take part in comparison.
class Word {
 public:
  Word() = default;

  // Builds a word from raw symbol ids. With no labels, ids print as a0, a1, ...
  static Word from_ids(std::string ids, std::shared_ptr<const std::string> labels = nullptr);
  static Word from_ids(const std::vector<int>& ids,
                       std::shared_ptr<const std::string> labels = nullptr);

  // Word over the letters a, b, c, ... (at most 26 distinct ids).
  static Word over_letters(std::string ids);

  // Parses ASCII text, one character per symbol. Distinct characters get ids
  // by their rank in sorted character order, so id order matches text order.
  static Word parse(std::string_view text);

  // Parses several words over their common alphabet.
  static std::vector<Word> parse_many(const std::vector<std::string>& texts);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  Symbol operator[](std::size_t i) const { return static_cast<Symbol>(ids_[i]); }
  const std::string& ids() const noexcept { return ids_; }
  const std::shared_ptr<const std::string>& labels() const noexcept { return labels_; }

  // w[pos, pos + len); labels are inherited.
  Word substr(std::size_t pos, std::size_t len) const;
  Word power(std::size_t k) const;
  Word operator+(const Word& other) const;

  // |Alph(w)|: number of distinct symbols present.
  std::size_t alphabet_size() const;

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) noexcept { return a.ids_ == b.ids_; }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    return a.ids_.compare(b.ids_) <=> 0;
  }

 private:
  Word(std::string ids, std::shared_ptr<const std::string> labels)
      : ids_(std::move(ids)), labels_(std::move(labels)) {}

  std::string ids_;
  std::shared_ptr<const std::string> labels_;
};

using WordSet = std::set<Word>;

// Conjugacy class [w], held by its least rotation.
class CircularWord {
 public:
  explicit CircularWord(const Word& w);

  const Word& canonical() const noexcept { return canonical_; }
  std::size_t size() const noexcept { return canonical_.size(); }

  friend bool operator==(const CircularWord& a, const CircularWord& b) noexcept {
    return a.canonical_ == b.canonical_;
  }
  friend std::strong_ordering operator<=>(const CircularWord& a, const CircularWord& b) noexcept {
    return a.canonical_ <=> b.canonical_;
  }

 private:
  Word canonical_;
};

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 1;
};

// All n rotations w_s(i) w_p(i-1), i = 1..n, in order; duplicates kept.
std::vector<Word> rotations(const Word& w);

// Least rotation (Booth's algorithm, linear time).
Word canonical_rotation(const Word& w);

// Index r such that rotating w left by r gives canonical_rotation(w).
std::size_t least_rotation_index(const Word& w);

bool is_primitive(const Word& w);
PrimitiveRoot primitive_root(const Word& w);

// Fac_m(w); requires 1 <= m <= |w|.
WordSet factors(const Word& w, std::size_t m);

// [w]_m: length-m windows of w^infinity, read from w^(floor(m/|w|)+2).
WordSet circular_factors(const Word& w, std::size_t m);
std::size_t circular_factor_count(const Word& w, std::size_t m);

std::size_t smallest_period(const Word& w);
bool has_period(const Word& w, std::size_t p);

// Checks one instance of the Fine-Wilf theorem: true unless w has periods p
// and q, |w| >= p + q - gcd(p, q), and still lacks period gcd(p, q).
bool fine_wilf_check(const Word& w, std::size_t p, std::size_t q);

// u^(num/|u|): the length-num prefix of u^infinity; requires num >= |u|.
Word rational_power(const Word& u, std::size_t num);

}  // namespace circsq
