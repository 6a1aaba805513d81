#include "circsq/word.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

#include "circsq/errors.hpp"

namespace circsq {

namespace {

void require_nonempty(const Word& w, const char* op) {
  if (w.empty()) throw InvalidInput(std::string(op) + ": empty word");
}

std::shared_ptr<const std::string> letter_labels() {
  static const auto labels = std::make_shared<const std::string>("abcdefghijklmnopqrstuvwxyz");
  return labels;
}

}  // namespace

Word Word::from_ids(std::string ids, std::shared_ptr<const std::string> labels) {
  return Word(std::move(ids), std::move(labels));
}

Word Word::from_ids(const std::vector<int>& ids, std::shared_ptr<const std::string> labels) {
  std::string raw;
  raw.reserve(ids.size());
  for (int id : ids) {
    if (id < 0 || id > 255) throw InvalidInput("symbol id out of range: " + std::to_string(id));
    raw.push_back(static_cast<char>(id));
  }
  return Word(std::move(raw), std::move(labels));
}

Word Word::over_letters(std::string ids) {
  for (char c : ids) {
    if (static_cast<Symbol>(c) >= 26) throw InvalidInput("over_letters: symbol id >= 26");
  }
  return Word(std::move(ids), letter_labels());
}

Word Word::parse(std::string_view text) {
  return parse_many({std::string(text)}).front();
}

std::vector<Word> Word::parse_many(const std::vector<std::string>& texts) {
  std::array<bool, 256> seen{};
  for (const auto& text : texts) {
    for (char c : text) {
      auto u = static_cast<unsigned char>(c);
      if (u < 0x21 || u > 0x7e) {
        throw InvalidInput("word must be printable ASCII without spaces");
      }
      seen[u] = true;
    }
  }
  auto labels = std::make_shared<std::string>();
  std::array<int, 256> rank{};
  for (int c = 0; c < 256; ++c) {
    if (seen[c]) {
      rank[c] = static_cast<int>(labels->size());
      labels->push_back(static_cast<char>(c));
    }
  }
  std::shared_ptr<const std::string> shared = std::move(labels);
  std::vector<Word> out;
  out.reserve(texts.size());
  for (const auto& text : texts) {
    std::string ids;
    ids.reserve(text.size());
    for (char c : text) ids.push_back(static_cast<char>(rank[static_cast<unsigned char>(c)]));
    out.push_back(Word(std::move(ids), shared));
  }
  return out;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  return Word(ids_.substr(pos, len), labels_);
}

Word Word::power(std::size_t k) const {
  std::string out;
  out.reserve(ids_.size() * k);
  for (std::size_t i = 0; i < k; ++i) out += ids_;
  return Word(std::move(out), labels_);
}

Word Word::operator+(const Word& other) const {
  return Word(ids_ + other.ids_, labels_ ? labels_ : other.labels_);
}

std::size_t Word::alphabet_size() const {
  std::array<bool, 256> seen{};
  std::size_t count = 0;
  for (char c : ids_) {
    auto u = static_cast<Symbol>(c);
    if (!seen[u]) {
      seen[u] = true;
      ++count;
    }
  }
  return count;
}

std::string Word::str() const {
  std::string out;
  for (char c : ids_) {
    auto id = static_cast<Symbol>(c);
    if (labels_ && id < labels_->size()) {
      out.push_back((*labels_)[id]);
    } else {
      out += 'a';
      out += std::to_string(id);
    }
  }
  return out;
}

CircularWord::CircularWord(const Word& w) : canonical_(canonical_rotation(w)) {}

std::vector<Word> rotations(const Word& w) {
  require_nonempty(w, "rotations");
  const std::size_t n = w.size();
  const Word doubled = w + w;
  std::vector<Word> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(doubled.substr(i, n));
  return out;
}

std::size_t least_rotation_index(const Word& w) {
  require_nonempty(w, "least_rotation_index");
  // Booth's least-rotation algorithm over the doubled word.
  const std::string& s = w.ids();
  const long n = static_cast<long>(s.size());
  std::vector<long> fail(static_cast<std::size_t>(2 * n), -1);
  long k = 0;
  auto at = [&](long i) { return static_cast<Symbol>(s[static_cast<std::size_t>(i % n)]); };
  for (long j = 1; j < 2 * n; ++j) {
    const Symbol sj = at(j);
    long i = fail[static_cast<std::size_t>(j - k - 1)];
    while (i != -1 && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = fail[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + i + 1)) {
      if (sj < at(k)) k = j;
      fail[static_cast<std::size_t>(j - k)] = -1;
    } else {
      fail[static_cast<std::size_t>(j - k)] = i + 1;
    }
  }
  return static_cast<std::size_t>(k % n);
}

Word canonical_rotation(const Word& w) {
  require_nonempty(w, "canonical_rotation");
  const std::size_t r = least_rotation_index(w);
  return (w + w).substr(r, w.size());
}

std::size_t smallest_period(const Word& w) {
  require_nonempty(w, "smallest_period");
  // Prefix function: the longest proper border gives the least period.
  const std::string& s = w.ids();
  std::vector<std::size_t> border(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && s[i] != s[k]) k = border[k - 1];
    if (s[i] == s[k]) ++k;
    border[i] = k;
  }
  return s.size() - border.back();
}

bool has_period(const Word& w, std::size_t p) {
  if (p == 0) throw InvalidArgument("has_period: period must be positive");
  for (std::size_t i = 0; i + p < w.size(); ++i) {
    if (w[i] != w[i + p]) return false;
  }
  return true;
}

bool is_primitive(const Word& w) {
  require_nonempty(w, "is_primitive");
  const std::size_t p = smallest_period(w);
  return p == w.size() || w.size() % p != 0;
}

PrimitiveRoot primitive_root(const Word& w) {
  require_nonempty(w, "primitive_root");
  const std::size_t p = smallest_period(w);
  if (w.size() % p != 0) return {w, 1};
  return {w.substr(0, p), w.size() / p};
}

WordSet factors(const Word& w, std::size_t m) {
  if (m == 0 || m > w.size()) {
    throw InvalidArgument("factors: length " + std::to_string(m) + " outside 1.." +
                          std::to_string(w.size()));
  }
  WordSet out;
  for (std::size_t i = 0; i + m <= w.size(); ++i) out.insert(w.substr(i, m));
  return out;
}

WordSet circular_factors(const Word& w, std::size_t m) {
  require_nonempty(w, "circular_factors");
  if (m == 0) throw InvalidArgument("circular_factors: length must be positive");
  // floor(m/n)+1 copies miss windows once m mod n >= 2; one more copy covers w^infinity.
  return factors(w.power(m / w.size() + 2), m);
}

std::size_t circular_factor_count(const Word& w, std::size_t m) {
  require_nonempty(w, "circular_factor_count");
  if (m == 0) throw InvalidArgument("circular_factor_count: length must be positive");
  // Every window of w^infinity starts at one of the n positions of w.
  const std::string ext = w.power(m / w.size() + 2).ids();
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < w.size(); ++i) seen.insert(std::string_view(ext).substr(i, m));
  return seen.size();
}

bool fine_wilf_check(const Word& w, std::size_t p, std::size_t q) {
  require_nonempty(w, "fine_wilf_check");
  if (p == 0 || q == 0 || p > w.size() || q > w.size()) {
    throw InvalidArgument("fine_wilf_check: periods must lie in 1..|w|");
  }
  const std::size_t g = std::gcd(p, q);
  const bool hypotheses = has_period(w, p) && has_period(w, q) && w.size() + g >= p + q;
  return !hypotheses || has_period(w, g);
}

Word rational_power(const Word& u, std::size_t num) {
  require_nonempty(u, "rational_power");
  if (num < u.size()) {
    throw InvalidArgument("rational_power: length " + std::to_string(num) +
                          " shorter than the base word");
  }
  return u.power(num / u.size() + 1).substr(0, num);
}

}  // namespace circsq
