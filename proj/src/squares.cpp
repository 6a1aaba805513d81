#include "circsq/squares.hpp"

#include <map>
#include <string_view>

#include "circsq/errors.hpp"

namespace circsq {

namespace {

void require_nonempty(const Word& w, const char* op) {
  if (w.empty()) throw InvalidInput(std::string(op) + ": empty word");
}

// Inserts every square of text[first, last) whose length is at most max_len.
void collect_squares(const Word& text, std::size_t first, std::size_t last, std::size_t max_len,
                     WordSet& out) {
  const std::string_view s(text.ids());
  for (std::size_t half = 1; 2 * half <= last - first && 2 * half <= max_len; ++half) {
    for (std::size_t i = first; i + 2 * half <= last; ++i) {
      if (s.compare(i, half, s, i + half, half) == 0) out.insert(text.substr(i, 2 * half));
    }
  }
}

}  // namespace

SquareSet distinct_squares(const Word& w) {
  require_nonempty(w, "distinct_squares");
  SquareSet out;
  collect_squares(w, 0, w.size(), w.size(), out.squares);
  return out;
}

SquareSet distinct_squares_circular(const CircularWord& cw) {
  const Word& w = cw.canonical();
  require_nonempty(w, "distinct_squares_circular");
  SquareSet out;
  for (const Word& conjugate : rotations(w)) {
    collect_squares(conjugate, 0, conjugate.size(), conjugate.size(), out.squares);
  }
  return out;
}

SquareSet distinct_squares_circular_via_doubling(const CircularWord& cw) {
  const Word& w = cw.canonical();
  require_nonempty(w, "distinct_squares_circular_via_doubling");
  const Word doubled = w + w;
  SquareSet out;
  collect_squares(doubled, 0, doubled.size(), w.size(), out.squares);
  return out;
}

WordSet power_factors(const Word& w) {
  require_nonempty(w, "power_factors");
  WordSet out;
  const std::string& s = w.ids();
  const std::size_t n = s.size();
  std::vector<std::size_t> border(n);
  for (std::size_t start = 0; start < n; ++start) {
    // Prefix function of w[start..), so each prefix's least period is known.
    border[0] = 0;
    for (std::size_t j = 1; start + j < n; ++j) {
      std::size_t k = border[j - 1];
      while (k > 0 && s[start + j] != s[start + k]) k = border[k - 1];
      if (s[start + j] == s[start + k]) ++k;
      border[j] = k;
      const std::size_t len = j + 1;
      const std::size_t period = len - k;
      if (period < len && len % period == 0) out.insert(w.substr(start, len));
    }
  }
  return out;
}

WordSet power_factors_circular(const CircularWord& cw) {
  WordSet out;
  for (const Word& conjugate : rotations(cw.canonical())) {
    out.merge(power_factors(conjugate));
  }
  return out;
}

ClassDecomposition class_decomposition(const Word& w) {
  std::map<Word, PowerClass> by_root;
  for (const Word& power : power_factors(w)) {
    const PrimitiveRoot pr = primitive_root(power);
    Word key = canonical_rotation(pr.root);
    PowerClass& pc = by_root[key];
    if (pc.root_length == 0) {
      pc.root = key;
      pc.root_length = key.size();
    }
    pc.members.insert(power);
    (pr.exponent % 2 == 0 ? pc.even : pc.odd).insert(power);
  }
  ClassDecomposition out{w, {}};
  out.classes.reserve(by_root.size());
  for (auto& [root, pc] : by_root) out.classes.push_back(std::move(pc));
  return out;
}

ParityCounts odd_even_formula(std::size_t t, std::size_t l) {
  if (l == 0) throw InvalidArgument("odd_even_formula: root length must be positive");
  const std::size_t r = t / l;
  const std::size_t s = t % l;
  if (r % 2 == 0) return {r / 2 * l, r / 2 * l + s};
  return {(r - 1) / 2 * l + s, (r + 1) / 2 * l};
}

bool has_downward_closed_structure(const PowerClass& pc) {
  const std::size_t l = pc.root_length;
  if (l == 0) return pc.members.empty();
  const std::size_t r = pc.t() / l;
  const std::size_t s = pc.t() % l;
  std::map<std::size_t, std::size_t> per_exponent;
  for (const Word& m : pc.members) ++per_exponent[m.size() / l];
  for (const auto& [exponent, count] : per_exponent) {
    if (exponent >= 2 && exponent <= r + 1) {
      if (count != l) return false;
    } else if (exponent == r + 2) {
      if (count != s) return false;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace circsq
