#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circsq/word.hpp"

namespace circsq {

// Exact non-negative fraction, used for Sq([w]) / n.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Ratio reduced(std::uint64_t num, std::uint64_t den);
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return a.num * b.den == b.num * a.den;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept {
    return a.num * b.den <=> b.num * a.den;
  }
};

namespace checks {
inline constexpr const char* kMainBound = "main-bound";
inline constexpr const char* kNonprimitiveBound = "nonprimitive-bound";
inline constexpr const char* kSquareOracle = "square-oracle";
inline constexpr const char* kClassParity = "class-parity";
inline constexpr const char* kIndependence = "independence";
inline constexpr const char* kClassCircuit = "class-circuit";
inline constexpr const char* kSplitObservations = "split-observations";
inline constexpr const char* kLargeCircuit = "large-circuit";
inline constexpr const char* kCaseBounds = "case-bounds";
inline constexpr const char* kEq1Chain = "eq1-chain";
inline constexpr const char* kSearch = "search";

// Every sweep check, in the order `all` runs them.
const std::vector<std::string>& all();
}  // namespace checks

struct SweepConfig {
  std::size_t alphabet_size = 2;
  std::size_t max_length = 8;
  std::vector<std::string> checks;
  // Test one word per rotation x renaming class (circular checks) or per
  // renaming class (linear checks) instead of every word.
  bool canonicalize = true;
  std::optional<std::string> checkpoint_path;
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
  std::size_t circuit_cap = 1'000'000;
  // Words per work unit; a checkpoint is written after each one.
  std::size_t chunk_size = 4096;
  // Receives non-fatal problems such as checkpoint I/O failures.
  std::function<void(const std::string&)> warn;
};

struct Violation {
  std::string word;
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CheckReport {
  std::string check_id;
  std::size_t alphabet_size = 0;
  std::size_t max_length = 0;
  std::uint64_t words_tested = 0;
  std::uint64_t skipped = 0;
  std::vector<Violation> violations;
  std::optional<Ratio> max_ratio;
  std::string witness;
  std::map<std::string, std::uint64_t> tallies;

  bool passed() const noexcept { return violations.empty(); }
};

void validate(const SweepConfig& cfg);

// 3 Sq([w]) <= 5 |w| over every canonical word; also logs words above 3/2
// and spot-checks that Sq([w]) is constant on canonical classes.
CheckReport check_main_bound(const SweepConfig& cfg);

// 2 Sq([w]) <= 3 |w| for every non-primitive w = u^k.
CheckReport check_nonprimitive_bound(const SweepConfig& cfg);

// Sq([w]) via conjugates equals the squares of w^2 of length <= n.
CheckReport check_square_oracle(const SweepConfig& cfg);

// Per class: |O| <= |E| <= |O| + l, 2|O| >= t - l, the parity formula when
// the class is downward closed, and Sq(w) = sum |E_p|.
CheckReport check_class_parity(const SweepConfig& cfg);

// Small circuits of each Gamma_i(w) are independent, and sc(w) <= |w| - |Alph(w)|.
CheckReport check_independence(const SweepConfig& cfg);

// Each class (root p, size t) yields small circuits C(p, l .. l+t-1), and
// these are exactly the small class circuits counted in Gamma(w).
CheckReport check_class_circuit_bijection(const SweepConfig& cfg);

// Split decompositions cover |p| with edge-disjoint elementary circuits, and
// no small circuit C(q, m) has |[q]_{m-1}| < |q|.
CheckReport check_split_observations(const SweepConfig& cfg);

// For w, p, k with k >= 4, 0 < n - kl < l, p^k in Power([w]) and w primitive:
// on W = w^2 and every order n-l+1..n, the circuits of length <= n/2 span
// less than the cyclomatic number. Throws PreconditionError naming the
// failed hypothesis.
CheckReport check_large_circuit_conclusion(const Word& w, const Word& p, std::size_t k,
                                           std::size_t circuit_cap = 1'000'000);

// The previous check over every instance p^k s with |p^k s| <= max_length.
CheckReport check_large_circuit_instances(const SweepConfig& cfg);

// Classifies each primitive w by the proof's case split and asserts the
// matching bound: 3/2 (case 1), 13/8 (case 2), 5/3 (case 3).
CheckReport check_case_bounds(const SweepConfig& cfg);

// On W = w^2 for primitive w: |Power'(W)| = |sc'(W)| <= |sc(W)| <= Indep <= 2n.
CheckReport check_eq1_chain(const SweepConfig& cfg);

// Best Sq([w]) / n over words of length n: exhaustive when k^n <= budget,
// otherwise hill climbing with random restarts.
CheckReport search_extremal(std::size_t n, std::size_t k, std::uint64_t budget, std::uint64_t seed);

CheckReport run_check(const std::string& check_id, const SweepConfig& cfg);
std::vector<CheckReport> run_checks(const SweepConfig& cfg);

}  // namespace circsq
