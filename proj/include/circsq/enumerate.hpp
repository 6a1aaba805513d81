#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "circsq/word.hpp"

namespace circsq {

// Renames symbols to their first-occurrence rank: "cbca" -> "abac".
Word relabel_first_occurrence(const Word& w);

// Least word among all rotations and all alphabet renamings of w.
// Sq([w]), primitivity and split behaviour are invariant on these classes.
Word rotation_renaming_canonical(const Word& w);

enum class WordFamily {
  kAll,        // every word over the alphabet
  kRenaming,   // one representative per alphabet renaming (first-occurrence form)
  kNecklaces,  // one representative per rotation x renaming class
};

// Streams words of lengths min_len..max_len over at most `alphabet` letters,
// length by length, lexicographically within a length.
class WordStream {
 public:
  WordStream(std::size_t alphabet, std::size_t min_len, std::size_t max_len, WordFamily family,
             bool primitive_only = false);

  std::optional<Word> next();

 private:
  bool advance();        // step state_ to the next candidate of the current length
  bool start_length();   // initialise state_ for length_
  bool accept() const;

  std::size_t alphabet_;
  std::size_t max_len_;
  WordFamily family_;
  bool primitive_only_;
  std::size_t length_;
  std::vector<int> state_;
  std::size_t prenecklace_period_ = 1;
  bool fresh_ = true;
  bool done_ = false;
};

// Convenience: materialise a stream.
std::vector<Word> collect_words(std::size_t alphabet, std::size_t min_len, std::size_t max_len,
                                WordFamily family, bool primitive_only = false);

}  // namespace circsq
