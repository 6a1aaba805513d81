#include "circsq/enumerate.hpp"

#include <array>

#include "circsq/errors.hpp"

namespace circsq {

namespace {

// Relabels rotation r of `ids` to first-occurrence form, writing into out.
void relabel_rotation(const std::string& ids, std::size_t r, std::string& out) {
  std::array<int, 256> rank;
  rank.fill(-1);
  int next = 0;
  const std::size_t n = ids.size();
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto s = static_cast<Symbol>(ids[(r + i) % n]);
    if (rank[s] < 0) rank[s] = next++;
    out[i] = static_cast<char>(rank[s]);
  }
}

}  // namespace

Word relabel_first_occurrence(const Word& w) {
  std::string out;
  relabel_rotation(w.ids(), 0, out);
  return Word::from_ids(std::move(out), w.labels());
}

Word rotation_renaming_canonical(const Word& w) {
  if (w.empty()) throw InvalidInput("rotation_renaming_canonical: empty word");
  std::string best;
  std::string candidate;
  relabel_rotation(w.ids(), 0, best);
  for (std::size_t r = 1; r < w.size(); ++r) {
    relabel_rotation(w.ids(), r, candidate);
    if (candidate < best) best.swap(candidate);
  }
  return Word::from_ids(std::move(best), w.labels());
}

WordStream::WordStream(std::size_t alphabet, std::size_t min_len, std::size_t max_len,
                       WordFamily family, bool primitive_only)
    : alphabet_(alphabet),
      max_len_(max_len),
      family_(family),
      primitive_only_(primitive_only),
      length_(min_len) {
  if (alphabet == 0 || alphabet > 256) throw InvalidArgument("alphabet size must be in 1..256");
  if (min_len == 0) throw InvalidArgument("word lengths start at 1");
  done_ = min_len > max_len || !start_length();
}

bool WordStream::start_length() {
  state_.assign(length_, 0);
  prenecklace_period_ = 1;
  fresh_ = true;
  return true;
}

bool WordStream::advance() {
  const int top = static_cast<int>(alphabet_) - 1;
  const std::size_t n = length_;
  switch (family_) {
    case WordFamily::kAll: {
      std::size_t i = n;
      while (i > 0 && state_[i - 1] == top) --i;
      if (i == 0) return false;
      ++state_[i - 1];
      for (std::size_t j = i; j < n; ++j) state_[j] = 0;
      return true;
    }
    case WordFamily::kRenaming: {
      // Restricted growth strings: state_[i] <= 1 + max(state_[0..i)).
      std::vector<int> prefix_max(n, 0);
      for (std::size_t i = 1; i < n; ++i) prefix_max[i] = std::max(prefix_max[i - 1], state_[i - 1]);
      std::size_t i = n;
      while (i > 1 && state_[i - 1] >= std::min(top, prefix_max[i - 1] + 1)) --i;
      if (i <= 1) return false;
      ++state_[i - 1];
      for (std::size_t j = i; j < n; ++j) state_[j] = 0;
      return true;
    }
    case WordFamily::kNecklaces: {
      // Fredricksen-Kessler-Maiorana successor on prenecklaces.
      std::size_t i = n;
      while (i > 0 && state_[i - 1] == top) --i;
      if (i == 0) return false;
      ++state_[i - 1];
      for (std::size_t j = i; j < n; ++j) state_[j] = state_[j - i];
      prenecklace_period_ = i;
      return true;
    }
  }
  return false;
}

bool WordStream::accept() const {
  const std::size_t n = length_;
  if (family_ == WordFamily::kNecklaces) {
    if (n % prenecklace_period_ != 0) return false;
    if (primitive_only_ && prenecklace_period_ != n) return false;
    std::string ids(state_.begin(), state_.end());
    std::string candidate;
    for (std::size_t r = 0; r < n; ++r) {
      relabel_rotation(ids, r, candidate);
      if (candidate < ids) return false;
    }
    return true;
  }
  if (primitive_only_) {
    std::string ids(state_.begin(), state_.end());
    return is_primitive(Word::from_ids(std::move(ids)));
  }
  return true;
}

std::optional<Word> WordStream::next() {
  while (!done_) {
    bool have = true;
    if (fresh_) {
      fresh_ = false;
    } else {
      have = advance();
    }
    if (!have) {
      if (++length_ > max_len_) {
        done_ = true;
        break;
      }
      start_length();
      continue;
    }
    if (accept()) {
      std::string ids(state_.begin(), state_.end());
      if (alphabet_ <= 26) return Word::over_letters(std::move(ids));
      return Word::from_ids(std::move(ids));
    }
  }
  return std::nullopt;
}

std::vector<Word> collect_words(std::size_t alphabet, std::size_t min_len, std::size_t max_len,
                                WordFamily family, bool primitive_only) {
  WordStream stream(alphabet, min_len, max_len, family, primitive_only);
  std::vector<Word> out;
  while (auto w = stream.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace circsq
