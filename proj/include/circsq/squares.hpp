#pragma once

#include <cstddef>
#include <vector>

#include "circsq/word.hpp"

namespace circsq {

struct SquareSet {
  WordSet squares;  // each member is uu with u nonempty
  std::size_t count() const noexcept { return squares.size(); }
};

// Powers q^k (k >= 2) of the conjugates q of one primitive root inside a host.
struct PowerClass {
  Word root;                 // least rotation of the primitive root
  std::size_t root_length = 0;
  WordSet members;           // Class_p(w)
  WordSet even;              // E_p(w): even exponent
  WordSet odd;               // O_p(w): odd exponent
  std::size_t t() const noexcept { return members.size(); }
};

struct ClassDecomposition {
  Word host;
  std::vector<PowerClass> classes;  // ordered by root
};

struct ParityCounts {
  std::size_t odd = 0;
  std::size_t even = 0;
  friend bool operator==(const ParityCounts&, const ParityCounts&) = default;
};

// Sq(w) by the cubic scan over (start, half-length).
SquareSet distinct_squares(const Word& w);

// Sq([w]): union of the squares of every conjugate.
SquareSet distinct_squares_circular(const CircularWord& cw);

// Squares of w^2 of length at most n. Independent route to Sq([w]).
SquareSet distinct_squares_circular_via_doubling(const CircularWord& cw);

// Power(w): factors p^k with k >= 2.
WordSet power_factors(const Word& w);
WordSet power_factors_circular(const CircularWord& cw);

ClassDecomposition class_decomposition(const Word& w);

// Parity split predicted for a class of size t and root length l when the
// class holds all q^i (2 <= i <= r+1) plus s of the (r+2)-powers, t = r*l + s.
ParityCounts odd_even_formula(std::size_t t, std::size_t l);

// True when the class has exactly the exponent profile assumed by
// odd_even_formula: every exponent 2..r+1 on all l conjugates, s at r+2.
bool has_downward_closed_structure(const PowerClass& pc);

}  // namespace circsq
