#include "circsq/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "circsq/enumerate.hpp"
#include "circsq/errors.hpp"
#include "circsq/rauzy.hpp"
#include "circsq/report.hpp"
#include "circsq/squares.hpp"

namespace circsq {

Ratio Ratio::reduced(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw InvalidArgument("Ratio: zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Ratio{0, 1} : Ratio{num / g, den / g};
}

namespace checks {
const std::vector<std::string>& all() {
  static const std::vector<std::string> ids{
      kMainBound,    kNonprimitiveBound, kSquareOracle,      kClassParity,
      kIndependence, kClassCircuit,      kSplitObservations, kLargeCircuit,
      kCaseBounds,   kEq1Chain};
  return ids;
}
}  // namespace checks

namespace {

constexpr std::size_t kMaxStoredViolations = 200;
constexpr const char* kCheckpointHeader = "circsq-checkpoint 1";

using nlohmann::json;

struct WordOutcome {
  bool skipped = false;
  std::vector<std::string> violations;
  std::optional<Ratio> ratio;
  std::vector<std::string> tallies;
};

using Source = std::function<std::optional<Word>()>;
using Evaluator = std::function<WordOutcome(const Word&)>;

std::size_t sq_circular(const Word& w) {
  return distinct_squares_circular(CircularWord(w)).count();
}

void add_violation(CheckReport& report, std::string word, std::string detail) {
  ++report.tallies["violations"];
  if (report.violations.size() < kMaxStoredViolations) {
    report.violations.push_back({std::move(word), std::move(detail)});
  }
}

void merge_outcome(CheckReport& report, const Word& w, const WordOutcome& outcome) {
  if (outcome.skipped) {
    ++report.skipped;
  } else {
    ++report.words_tested;
  }
  for (const auto& v : outcome.violations) add_violation(report, w.str(), v);
  if (outcome.ratio) {
    if (!report.max_ratio || report.witness.empty() || *outcome.ratio > *report.max_ratio) {
      report.max_ratio = *outcome.ratio;
      report.witness = w.str();
    }
  }
  for (const auto& t : outcome.tallies) ++report.tallies[t];
}

CheckReport fresh_report(const std::string& id, const SweepConfig& cfg, bool with_ratio) {
  CheckReport r;
  r.check_id = id;
  r.alphabet_size = cfg.alphabet_size;
  r.max_length = cfg.max_length;
  if (with_ratio) r.max_ratio = Ratio{0, 1};
  return r;
}

void warn(const SweepConfig& cfg, const std::string& message) {
  if (cfg.warn) cfg.warn(message);
}

// --- checkpoints -----------------------------------------------------------
//
// A checkpoint file is a version line followed by one JSON record per line,
// one record per check: alphabet size k, current length n, the last completed
// word, the running max ratio and the partial report.

std::map<std::string, json> read_checkpoint(const std::string& path) {
  std::map<std::string, json> records;
  std::ifstream in(path);
  if (!in) return records;
  std::string line;
  if (!std::getline(in, line) || line != kCheckpointHeader) {
    throw std::runtime_error("unrecognised checkpoint header in " + path);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json rec = json::parse(line);
    const auto id = rec.at("check").get<std::string>();
    records[id] = std::move(rec);
  }
  return records;
}

void write_checkpoint(const SweepConfig& cfg, const json& record) {
  const std::string& path = *cfg.checkpoint_path;
  try {
    std::map<std::string, json> records;
    try {
      records = read_checkpoint(path);
    } catch (const std::exception& e) {
      warn(cfg, std::string("discarding unreadable checkpoint: ") + e.what());
    }
    const auto id = record.at("check").get<std::string>();
    records[id] = record;
    const std::string tmp = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
      out << kCheckpointHeader << '\n';
      for (const auto& [id, rec] : records) out << rec.dump() << '\n';
      if (!out) throw std::runtime_error("write to " + tmp + " failed");
    }
    std::filesystem::rename(tmp, path);
  } catch (const std::exception& e) {
    warn(cfg, std::string("checkpoint not saved: ") + e.what());
  }
}

json make_record(const SweepConfig& cfg, const CheckReport& report, const Word* last, bool complete) {
  json rec = {{"check", report.check_id},
              {"k", cfg.alphabet_size},
              {"max_len", cfg.max_length},
              {"canonicalize", cfg.canonicalize},
              {"complete", complete},
              {"report", to_json(report)}};
  rec["n"] = last ? last->size() : 0;
  rec["word"] = last ? last->str() : "";
  std::vector<int> ids;
  if (last) {
    for (char c : last->ids()) ids.push_back(static_cast<Symbol>(c));
  }
  rec["ids"] = ids;
  rec["max_ratio"] = report.max_ratio ? to_string(*report.max_ratio) : "";
  return rec;
}

struct ResumePoint {
  CheckReport report;
  std::optional<std::string> last_ids;
  bool complete = false;
};

std::optional<ResumePoint> load_resume(const std::string& id, const SweepConfig& cfg) {
  if (!cfg.checkpoint_path) return std::nullopt;
  try {
    auto records = read_checkpoint(*cfg.checkpoint_path);
    auto it = records.find(id);
    if (it == records.end()) return std::nullopt;
    const json& rec = it->second;
    if (rec.at("k").get<std::size_t>() != cfg.alphabet_size ||
        rec.at("max_len").get<std::size_t>() != cfg.max_length ||
        rec.at("canonicalize").get<bool>() != cfg.canonicalize) {
      return std::nullopt;
    }
    ResumePoint rp;
    rp.report = check_report_from_json(rec.at("report"));
    rp.complete = rec.at("complete").get<bool>();
    const auto ids = rec.at("ids").get<std::vector<int>>();
    if (!ids.empty()) rp.last_ids = Word::from_ids(ids).ids();
    return rp;
  } catch (const std::exception& e) {
    warn(cfg, std::string("ignoring checkpoint: ") + e.what());
    return std::nullopt;
  }
}

// Stream order is by length, then lexicographic.
bool at_or_before(const Word& w, const std::string& last) {
  if (w.size() != last.size()) return w.size() < last.size();
  return w.ids() <= last;
}

std::vector<WordOutcome> evaluate_chunk(const std::vector<Word>& chunk, const Evaluator& eval,
                                        std::size_t jobs) {
  std::vector<WordOutcome> outcomes(chunk.size());
  const std::size_t workers = std::min<std::size_t>(std::max<std::size_t>(jobs, 1), chunk.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < chunk.size(); ++i) outcomes[i] = eval(chunk[i]);
    return outcomes;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const std::size_t per = (chunk.size() + workers - 1) / workers;
  for (std::size_t t = 0; t < workers; ++t) {
    threads.emplace_back([&, t] {
      try {
        const std::size_t end = std::min(chunk.size(), (t + 1) * per);
        for (std::size_t i = t * per; i < end; ++i) outcomes[i] = eval(chunk[i]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return outcomes;
}

// Runs eval over the source in chunks, merging in stream order and
// checkpointing after each chunk. finish() runs once after the stream.
CheckReport sweep(const std::string& id, const SweepConfig& cfg, bool with_ratio, Source source,
                  const Evaluator& eval, const std::function<void(CheckReport&)>& finish = {}) {
  CheckReport report = fresh_report(id, cfg, with_ratio);
  std::optional<std::string> resume_after;
  if (auto rp = load_resume(id, cfg)) {
    if (rp->complete) return rp->report;
    report = std::move(rp->report);
    resume_after = rp->last_ids;
  }
  std::vector<Word> chunk;
  const std::size_t chunk_size = std::max<std::size_t>(cfg.chunk_size, 1);
  bool exhausted = false;
  while (!exhausted) {
    chunk.clear();
    while (chunk.size() < chunk_size) {
      auto w = source();
      if (!w) {
        exhausted = true;
        break;
      }
      if (resume_after && at_or_before(*w, *resume_after)) continue;
      chunk.push_back(std::move(*w));
    }
    if (chunk.empty()) break;
    const auto outcomes = evaluate_chunk(chunk, eval, cfg.jobs);
    for (std::size_t i = 0; i < chunk.size(); ++i) merge_outcome(report, chunk[i], outcomes[i]);
    if (cfg.checkpoint_path) write_checkpoint(cfg, make_record(cfg, report, &chunk.back(), false));
  }
  if (finish) finish(report);
  if (cfg.checkpoint_path) write_checkpoint(cfg, make_record(cfg, report, nullptr, true));
  return report;
}

Source stream_source(std::size_t k, std::size_t min_len, std::size_t max_len, WordFamily family,
                     bool primitive_only = false) {
  auto stream = std::make_shared<WordStream>(k, min_len, max_len, family, primitive_only);
  return [stream] { return stream->next(); };
}

Source linear_words(const SweepConfig& cfg, std::size_t min_len = 1) {
  return stream_source(cfg.alphabet_size, min_len, cfg.max_length,
                       cfg.canonicalize ? WordFamily::kRenaming : WordFamily::kAll);
}

Source circular_words(const SweepConfig& cfg, bool primitive_only = false) {
  return stream_source(cfg.alphabet_size, 1, cfg.max_length,
                       cfg.canonicalize ? WordFamily::kNecklaces : WordFamily::kAll, primitive_only);
}

std::string order_tag(std::size_t order) { return "order " + std::to_string(order) + ": "; }

// Small circuits of Gamma_order(w).
std::vector<Circuit> small_circuits(const Word& w, std::size_t order, std::size_t cap) {
  CircuitOptions opts;
  opts.cap = cap;
  opts.max_length = order;
  return enumerate_elementary_circuits(build_rauzy_graph(w, order), opts);
}

std::uint64_t saturating_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

// Canonical-class soundness: Sq([w]) agrees across rotation, renaming and
// reversal on random pairs.
void spot_check_canonicalization(const SweepConfig& cfg, CheckReport& report) {
  constexpr std::size_t kPairs = 1000;
  std::mt19937_64 rng(cfg.seed);
  const std::size_t k = cfg.alphabet_size;
  for (std::size_t trial = 0; trial < kPairs; ++trial) {
    const std::size_t n = 1 + rng() % cfg.max_length;
    std::string ids(n, '\0');
    for (auto& c : ids) c = static_cast<char>(rng() % k);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::size_t shift = rng() % n;
    const bool reverse = rng() % 2 == 1;
    std::string image(n, '\0');
    for (std::size_t i = 0; i < n; ++i) {
      image[i] = static_cast<char>(perm[static_cast<Symbol>(ids[(i + shift) % n])]);
    }
    if (reverse) std::reverse(image.begin(), image.end());
    const Word a = k <= 26 ? Word::over_letters(ids) : Word::from_ids(ids);
    const Word b = k <= 26 ? Word::over_letters(image) : Word::from_ids(image);
    const std::size_t sa = sq_circular(a);
    const std::size_t sb = sq_circular(b);
    const std::size_t sc = sq_circular(rotation_renaming_canonical(a));
    if (sa != sb || sa != sc) {
      add_violation(report, a.str(),
                    "canonical class disagreement with " + b.str() + ": " + std::to_string(sa) +
                        " vs " + std::to_string(sb) + " vs canonical " + std::to_string(sc));
    }
    ++report.tallies["spot_checks"];
  }
}

// Outcome of one (w, p, k) instance of the large-circuit statement.
void large_circuit_orders(const Word& w, const Word& p, std::size_t cap, WordOutcome& out) {
  const std::size_t n = w.size();
  const std::size_t l = p.size();
  const Word doubled = w + w;
  for (std::size_t i = n - l + 1; i <= n; ++i) {
    const RauzyGraph g = build_rauzy_graph(doubled, i);
    CircuitOptions opts;
    opts.cap = cap;
    const auto circuits = enumerate_elementary_circuits(g, opts);
    std::vector<CycleVector> short_vectors;
    for (const auto& c : circuits) {
      if (2 * c.length() <= n) short_vectors.push_back(vector_cycle(c, g));
    }
    const auto chi = cyclomatic_number(g);
    const auto rank = static_cast<std::int64_t>(independent_rank(short_vectors));
    if (rank >= chi) {
      out.violations.push_back(order_tag(i) + "circuits of length <= n/2 reach rank " +
                               std::to_string(rank) + " = cyclomatic number " + std::to_string(chi));
    }
    out.tallies.push_back("orders_checked");
  }
}

enum class ProofCase { kOne, kTwo, kThree, kUnclassified };

struct Classification {
  ProofCase route = ProofCase::kUnclassified;
  std::string trace;
};

ProofCase case_for_short_circuit(std::size_t shortest, std::size_t n) {
  if (4 * shortest <= n) return ProofCase::kTwo;
  if (3 * shortest <= n) return ProofCase::kThree;
  return ProofCase::kUnclassified;
}

Classification classify(const Word& w) {
  const std::size_t n = w.size();
  Classification c;
  const auto m = split_point(w);
  if (!m || 2 * *m < n) {
    c.route = ProofCase::kOne;
    c.trace = m ? "splits at " + std::to_string(*m) + " < n/2" : "never splits";
    return c;
  }
  const auto parts = decompose_split(w, *m);
  c.trace = "splits at " + std::to_string(*m) + " into " + std::to_string(parts.size());
  if (parts.size() > 2) {
    std::size_t shortest = n;
    for (const auto& part : parts) shortest = std::min(shortest, part.length());
    c.route = case_for_short_circuit(shortest, n);
    return c;
  }
  if (parts.size() != 2) return c;
  const Circuit& big = parts[0].length() >= parts[1].length() ? parts[0] : parts[1];
  const Circuit& little = parts[0].length() >= parts[1].length() ? parts[1] : parts[0];
  const Word q1 = circuit_root(big);
  const auto m1 = split_point(q1);
  if (!m1 || 2 * *m1 < n) {
    c.route = ProofCase::kOne;
    c.trace += m1 ? "; large part splits at " + std::to_string(*m1) + " < n/2"
                  : "; large part never splits";
    return c;
  }
  std::size_t shortest = little.length();
  for (const auto& part : decompose_split(q1, *m1)) shortest = std::min(shortest, part.length());
  c.trace += "; large part splits at " + std::to_string(*m1);
  c.route = case_for_short_circuit(shortest, n);
  return c;
}

std::vector<Word> nonprimitive_words(const SweepConfig& cfg, std::size_t n) {
  std::vector<Word> out;
  if (!cfg.canonicalize) {
    auto all = collect_words(cfg.alphabet_size, n, n, WordFamily::kAll);
    for (auto& w : all) {
      if (!is_primitive(w)) out.push_back(std::move(w));
    }
    return out;
  }
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    for (const Word& u : collect_words(cfg.alphabet_size, d, d, WordFamily::kNecklaces, true)) {
      out.push_back(u.power(n / d));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void validate(const SweepConfig& cfg) {
  if (cfg.alphabet_size == 0 || cfg.alphabet_size > 256) {
    throw InvalidArgument("alphabet size must be in 1..256");
  }
  if (cfg.max_length == 0) throw InvalidArgument("maximum length must be at least 1");
  if (cfg.checks.empty()) throw InvalidArgument("no checks selected");
  for (const auto& id : cfg.checks) {
    const auto& ids = checks::all();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
      throw InvalidArgument("unknown check '" + id + "'");
    }
  }
}

CheckReport check_main_bound(const SweepConfig& cfg) {
  Evaluator eval = [](const Word& w) {
    WordOutcome out;
    const std::size_t sq = sq_circular(w);
    const std::size_t n = w.size();
    out.ratio = Ratio::reduced(sq, n);
    if (3 * sq > 5 * n) {
      out.violations.push_back("3 Sq([w]) = " + std::to_string(3 * sq) + " > 5n = " +
                               std::to_string(5 * n));
    }
    if (2 * sq > 3 * n) out.tallies.push_back("exceeds_3_2");
    return out;
  };
  return sweep(checks::kMainBound, cfg, true, circular_words(cfg), eval, [&](CheckReport& r) {
    r.tallies["exceeds_3_2"] += 0;
    if (cfg.canonicalize) spot_check_canonicalization(cfg, r);
  });
}

CheckReport check_nonprimitive_bound(const SweepConfig& cfg) {
  auto n = std::make_shared<std::size_t>(1);
  auto pending = std::make_shared<std::vector<Word>>();
  auto pos = std::make_shared<std::size_t>(0);
  Source source = [=, &cfg]() -> std::optional<Word> {
    while (*pos >= pending->size()) {
      if (++*n > cfg.max_length) return std::nullopt;
      *pending = nonprimitive_words(cfg, *n);
      *pos = 0;
    }
    return (*pending)[(*pos)++];
  };
  Evaluator eval = [](const Word& w) {
    WordOutcome out;
    const std::size_t sq = sq_circular(w);
    out.ratio = Ratio::reduced(sq, w.size());
    if (2 * sq > 3 * w.size()) {
      out.violations.push_back("2 Sq([w]) = " + std::to_string(2 * sq) + " > 3n = " +
                               std::to_string(3 * w.size()));
    }
    return out;
  };
  return sweep(checks::kNonprimitiveBound, cfg, true, source, eval);
}

CheckReport check_square_oracle(const SweepConfig& cfg) {
  Evaluator eval = [](const Word& w) {
    WordOutcome out;
    const CircularWord cw(w);
    const auto direct = distinct_squares_circular(cw);
    const auto doubled = distinct_squares_circular_via_doubling(cw);
    if (direct.squares != doubled.squares) {
      out.violations.push_back("conjugate union has " + std::to_string(direct.count()) +
                               " squares, w^2 restriction has " + std::to_string(doubled.count()));
    }
    return out;
  };
  return sweep(checks::kSquareOracle, cfg, false, circular_words(cfg), eval);
}

CheckReport check_class_parity(const SweepConfig& cfg) {
  Evaluator eval = [](const Word& w) {
    WordOutcome out;
    const auto dec = class_decomposition(w);
    std::size_t even_total = 0;
    for (const PowerClass& pc : dec.classes) {
      const std::size_t odd = pc.odd.size();
      const std::size_t even = pc.even.size();
      const std::size_t l = pc.root_length;
      const std::size_t t = pc.t();
      const std::string tag = "class " + pc.root.str() + ": ";
      even_total += even;
      if (odd > even || even > odd + l) {
        out.violations.push_back(tag + "|O| = " + std::to_string(odd) + ", |E| = " +
                                 std::to_string(even) + ", l = " + std::to_string(l));
      }
      if (2 * odd + l < t) {
        out.violations.push_back(tag + "|O| = " + std::to_string(odd) + " < (t - l)/2 with t = " +
                                 std::to_string(t));
      }
      if (has_downward_closed_structure(pc)) {
        const ParityCounts predicted = odd_even_formula(t, l);
        if (predicted != ParityCounts{odd, even}) {
          out.violations.push_back(tag + "parity formula predicts (" +
                                   std::to_string(predicted.odd) + ", " +
                                   std::to_string(predicted.even) + ")");
        }
        out.tallies.push_back("downward_closed_classes");
      } else {
        out.tallies.push_back("non_downward_closed_classes");
      }
      out.tallies.push_back("classes");
    }
    const std::size_t sq = distinct_squares(w).count();
    if (sq != even_total) {
      out.violations.push_back("Sq(w) = " + std::to_string(sq) + " but sum |E_p| = " +
                               std::to_string(even_total));
    }
    return out;
  };
  return sweep(checks::kClassParity, cfg, false, linear_words(cfg), eval, [](CheckReport& r) {
    r.tallies["non_downward_closed_classes"] += 0;
  });
}

CheckReport check_independence(const SweepConfig& cfg) {
  const std::size_t cap = cfg.circuit_cap;
  Evaluator eval = [cap](const Word& w) {
    WordOutcome out;
    std::size_t sc = 0;
    try {
      for (std::size_t i = 1; i < w.size(); ++i) {
        const RauzyGraph g = build_rauzy_graph(w, i);
        CircuitOptions opts;
        opts.cap = cap;
        opts.max_length = i;
        const auto circuits = enumerate_elementary_circuits(g, opts);
        std::vector<CycleVector> vectors;
        for (const auto& c : circuits) vectors.push_back(vector_cycle(c, g));
        const std::size_t rank = independent_rank(vectors);
        if (rank != circuits.size()) {
          out.violations.push_back(order_tag(i) + std::to_string(circuits.size()) +
                                   " small circuits have rank " + std::to_string(rank));
        }
        sc += circuits.size();
      }
    } catch (const SizeExceeded&) {
      out = WordOutcome{};
      out.skipped = true;
      return out;
    }
    const std::size_t bound = w.size() - w.alphabet_size();
    if (sc > bound) {
      out.violations.push_back("sc(w) = " + std::to_string(sc) + " > |w| - |Alph(w)| = " +
                               std::to_string(bound));
    }
    return out;
  };
  return sweep(checks::kIndependence, cfg, false, linear_words(cfg), eval);
}

CheckReport check_class_circuit_bijection(const SweepConfig& cfg) {
  const std::size_t cap = cfg.circuit_cap;
  Evaluator eval = [cap](const Word& w) {
    WordOutcome out;
    const std::size_t n = w.size();
    const auto dec = class_decomposition(w);
    std::map<Word, std::size_t> class_size;
    std::size_t power_count = 0;
    for (const PowerClass& pc : dec.classes) {
      class_size[pc.root] = pc.t();
      power_count += pc.t();
      for (std::size_t i = 1; i <= pc.t(); ++i) {
        const std::size_t order = i + pc.root_length - 1;
        const std::string tag = "class " + pc.root.str() + ", " + order_tag(order);
        if (order + 1 > n) {
          out.violations.push_back(tag + "order beyond the last Rauzy graph");
          continue;
        }
        const ClassCircuit cc = class_circuit(pc.root, order);
        if (!cc.is_small || !cc.is_elementary) {
          out.violations.push_back(tag + "C(p, order) is not a small elementary circuit");
        }
        if (!contains_class_circuit(w, pc.root, order)) {
          out.violations.push_back(tag + "C(p, order) is missing from the Rauzy graph");
        }
      }
    }
    // Small circuits of Gamma(w) that belong to a nonempty class within range.
    std::size_t matched = 0;
    try {
      for (std::size_t order = 1; order < n; ++order) {
        for (const Circuit& c : small_circuits(w, order, cap)) {
          const Word root = canonical_rotation(circuit_root(c));
          auto it = class_size.find(root);
          if (it != class_size.end() && order + 1 <= it->second + root.size()) ++matched;
        }
      }
    } catch (const SizeExceeded&) {
      out = WordOutcome{};
      out.skipped = true;
      return out;
    }
    if (matched != power_count) {
      out.violations.push_back("|Power(w)| = " + std::to_string(power_count) + " but " +
                               std::to_string(matched) + " small class circuits");
    }
    return out;
  };
  return sweep(checks::kClassCircuit, cfg, false, linear_words(cfg), eval);
}

CheckReport check_split_observations(const SweepConfig& cfg) {
  const std::size_t cap = cfg.circuit_cap;
  const bool canonical = cfg.canonicalize;
  Evaluator eval = [cap, canonical](const Word& w) {
    WordOutcome out;
    // No small circuit C(q, m) may sit one order above a split of q.
    try {
      for (std::size_t m = 2; m < w.size(); ++m) {
        for (const Circuit& c : small_circuits(w, m, cap)) {
          const Word q = circuit_root(c);
          if (circular_factor_count(q, m - 1) != q.size()) {
            out.violations.push_back(order_tag(m) + "small circuit C(" + q.str() +
                                     ", m) but |[q]_{m-1}| < |q|");
          }
        }
      }
    } catch (const SizeExceeded&) {
      out.tallies.push_back("hosts_skipped");
    }
    // Split decomposition of w itself, once per canonical primitive class.
    if (!is_primitive(w) || (canonical && rotation_renaming_canonical(w) != w)) return out;
    const auto m = split_point(w);
    if (!m) {
      out.tallies.push_back("never_splits");
      return out;
    }
    out.tallies.push_back("splits");
    const auto parts = decompose_split(w, *m);
    const WordSet edge_set = circular_factors(w, *m + 1);
    const RauzyGraph g = RauzyGraph::from_factor_sets(*m, circular_factors(w, *m), edge_set);
    const auto circuits = enumerate_elementary_circuits(g, CircuitOptions{cap, std::nullopt});
    std::size_t total = 0;
    WordSet used;
    for (const Circuit& part : parts) {
      total += part.length();
      const auto verts = part.vertices();
      if (WordSet(verts.begin(), verts.end()).size() != verts.size()) {
        out.violations.push_back("split part repeats a vertex");
      }
      if (!std::binary_search(circuits.begin(), circuits.end(), part)) {
        out.violations.push_back("split part is not an elementary circuit of C(p, m)");
      }
      for (const Word& e : part.edges) {
        if (!used.insert(e).second) out.violations.push_back("split parts share edge " + e.str());
      }
    }
    if (total != w.size()) {
      out.violations.push_back("split part lengths sum to " + std::to_string(total) + " != |p|");
    }
    if (used != edge_set) out.violations.push_back("split parts do not cover [p]_{m+1}");
    out.tallies.push_back("parts_" + std::to_string(parts.size()));
    return out;
  };
  return sweep(checks::kSplitObservations, cfg, false, linear_words(cfg), eval, [](CheckReport& r) {
    r.tallies["splits"] += 0;
  });
}

CheckReport check_large_circuit_conclusion(const Word& w, const Word& p, std::size_t k,
                                           std::size_t circuit_cap) {
  if (w.empty()) throw InvalidInput("large-circuit: empty word");
  if (p.empty()) throw InvalidInput("large-circuit: empty root");
  const std::size_t n = w.size();
  const std::size_t l = p.size();
  if (!is_primitive(p)) throw PreconditionError("p primitive", p.str() + " is a proper power");
  if (k < 4) throw PreconditionError("k >= 4", "k = " + std::to_string(k));
  if (!(k * l < n && n - k * l < l)) {
    throw PreconditionError("0 < n - kl < l", "n = " + std::to_string(n) + ", k = " +
                                                  std::to_string(k) + ", l = " + std::to_string(l));
  }
  if ((w + w).ids().find(p.power(k).ids()) == std::string::npos) {
    throw PreconditionError("p^k in Power([w])", p.str() + "^" + std::to_string(k) +
                                                     " is not a factor of any conjugate");
  }
  if (!is_primitive(w)) throw PreconditionError("w primitive", w.str() + " is a proper power");

  CheckReport report;
  report.check_id = checks::kLargeCircuit;
  report.alphabet_size = w.alphabet_size();
  report.max_length = n;
  WordOutcome out;
  large_circuit_orders(w, p, circuit_cap, out);
  merge_outcome(report, w, out);
  return report;
}

CheckReport check_large_circuit_instances(const SweepConfig& cfg) {
  CheckReport report = fresh_report(checks::kLargeCircuit, cfg, false);
  const std::size_t k_letters = cfg.alphabet_size;
  for (std::size_t l = 2; 4 * l + 1 <= cfg.max_length; ++l) {
    const auto roots = collect_words(k_letters, l, l,
                                     cfg.canonicalize ? WordFamily::kNecklaces : WordFamily::kAll, true);
    for (const Word& p : roots) {
      for (std::size_t k = 4; k * l + 1 <= cfg.max_length; ++k) {
        for (std::size_t r = 1; r < l && k * l + r <= cfg.max_length; ++r) {
          for (const Word& s : collect_words(k_letters, r, r, WordFamily::kAll)) {
            const Word w = p.power(k) + s;
            try {
              const CheckReport one = check_large_circuit_conclusion(w, p, k, cfg.circuit_cap);
              ++report.words_tested;
              for (const auto& v : one.violations) {
                add_violation(report, w.str(), "p = " + p.str() + ", k = " + std::to_string(k) +
                                                   ": " + v.detail);
              }
              for (const auto& [key, count] : one.tallies) report.tallies[key] += count;
            } catch (const PreconditionError& e) {
              ++report.skipped;
              ++report.tallies["hypothesis_unmet:" + e.clause()];
            } catch (const SizeExceeded&) {
              ++report.skipped;
              ++report.tallies["circuit_cap"];
            }
          }
        }
      }
    }
  }
  return report;
}

CheckReport check_case_bounds(const SweepConfig& cfg) {
  Evaluator eval = [](const Word& w) {
    WordOutcome out;
    const std::size_t n = w.size();
    const std::size_t sq = sq_circular(w);
    out.ratio = Ratio::reduced(sq, n);
    const Classification c = classify(w);
    switch (c.route) {
      case ProofCase::kOne:
        out.tallies.push_back("case1");
        if (2 * sq > 3 * n) out.violations.push_back("case 1 (" + c.trace + "): 2 Sq > 3n");
        break;
      case ProofCase::kTwo:
        out.tallies.push_back("case2");
        if (8 * sq > 13 * n) out.violations.push_back("case 2 (" + c.trace + "): 8 Sq > 13n");
        break;
      case ProofCase::kThree:
        out.tallies.push_back("case3");
        if (3 * sq > 5 * n) out.violations.push_back("case 3 (" + c.trace + "): 3 Sq > 5n");
        break;
      case ProofCase::kUnclassified:
        out.tallies.push_back("unclassified");
        out.violations.push_back("unclassifiable (" + c.trace + "), needs manual inspection");
        break;
    }
    return out;
  };
  return sweep(checks::kCaseBounds, cfg, true, circular_words(cfg, true), eval, [](CheckReport& r) {
    for (const char* key : {"case1", "case2", "case3", "unclassified"}) r.tallies[key] += 0;
  });
}

CheckReport check_eq1_chain(const SweepConfig& cfg) {
  const std::size_t cap = cfg.circuit_cap;
  Evaluator eval = [cap](const Word& w) {
    WordOutcome out;
    const std::size_t n = w.size();
    const Word doubled = w + w;
    std::map<Word, std::size_t> class_size;
    std::size_t power_prime = 0;
    for (const PowerClass& pc : class_decomposition(doubled).classes) {
      class_size[pc.root] = pc.t();
      if (2 * pc.root_length < n) power_prime += pc.t();
    }
    std::size_t sc_prime = 0;
    std::size_t sc = 0;
    std::int64_t indep = 0;
    try {
      for (std::size_t order = 1; order <= n; ++order) {
        const RauzyGraph g = build_rauzy_graph(doubled, order);
        indep += cyclomatic_number(g);
        CircuitOptions opts;
        opts.cap = cap;
        opts.max_length = order;
        for (const Circuit& c : enumerate_elementary_circuits(g, opts)) {
          const Word root = canonical_rotation(circuit_root(c));
          if (2 * root.size() >= n) continue;
          ++sc;
          auto it = class_size.find(root);
          if (it != class_size.end() && order + 1 <= it->second + root.size()) ++sc_prime;
        }
      }
      for (std::size_t order = n + 1; order < 2 * n; ++order) {
        if (cyclomatic_number(build_rauzy_graph(doubled, order)) != 0) {
          out.violations.push_back(order_tag(order) + "Gamma(W) above n still has a cycle");
        }
      }
    } catch (const SizeExceeded&) {
      out = WordOutcome{};
      out.skipped = true;
      return out;
    }
    const std::string values = " (Power' = " + std::to_string(power_prime) + ", sc' = " +
                               std::to_string(sc_prime) + ", sc = " + std::to_string(sc) +
                               ", Indep = " + std::to_string(indep) + ")";
    if (power_prime != sc_prime) out.violations.push_back("|Power'(W)| != |sc'(W)|" + values);
    if (sc_prime > sc) out.violations.push_back("|sc'(W)| > |sc(W)|" + values);
    if (static_cast<std::int64_t>(sc) > indep) out.violations.push_back("|sc(W)| > Indep" + values);
    if (indep > static_cast<std::int64_t>(2 * n)) out.violations.push_back("Indep > 2n" + values);
    return out;
  };
  return sweep(checks::kEq1Chain, cfg, false, circular_words(cfg, true), eval);
}

CheckReport search_extremal(std::size_t n, std::size_t k, std::uint64_t budget, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("search: length must be at least 1");
  if (k == 0 || k > 256) throw InvalidArgument("search: alphabet size must be in 1..256");
  if (budget == 0) throw InvalidArgument("search: budget must be positive");
  CheckReport report;
  report.check_id = checks::kSearch;
  report.alphabet_size = k;
  report.max_length = n;
  report.max_ratio = Ratio{0, 1};
  std::size_t best = 0;
  auto consider = [&](const Word& w, std::size_t sq) {
    ++report.words_tested;
    if (report.witness.empty() || sq > best) {
      best = sq;
      report.max_ratio = Ratio::reduced(sq, n);
      report.witness = w.str();
    }
  };
  auto make = [k](std::string ids) {
    return k <= 26 ? Word::over_letters(std::move(ids)) : Word::from_ids(std::move(ids));
  };

  if (saturating_power(k, n) <= budget) {
    report.tallies["exhaustive"] = 1;
    WordStream stream(k, n, n, WordFamily::kNecklaces);
    while (auto w = stream.next()) consider(*w, sq_circular(*w));
  } else {
    report.tallies["exhaustive"] = 0;
    std::mt19937_64 rng(seed);
    const std::uint64_t patience = 2 * n * (k - 1);
    std::uint64_t evaluations = 0;
    while (evaluations < budget) {
      std::string ids(n, '\0');
      for (auto& c : ids) c = static_cast<char>(rng() % k);
      std::size_t score = sq_circular(make(ids));
      ++evaluations;
      consider(make(ids), score);
      ++report.tallies["restarts"];
      std::uint64_t stale = 0;
      while (evaluations < budget && stale < patience) {
        std::string trial = ids;
        const std::size_t pos = rng() % n;
        const auto old = static_cast<std::size_t>(static_cast<Symbol>(trial[pos]));
        trial[pos] = static_cast<char>((old + 1 + rng() % (k - 1)) % k);
        const std::size_t s = sq_circular(make(trial));
        ++evaluations;
        if (s > best) consider(make(trial), s);
        else ++report.words_tested;
        if (s >= score) {
          stale = s > score ? 0 : stale + 1;
          ids = std::move(trial);
          score = s;
        } else {
          ++stale;
        }
      }
    }
  }
  if (3 * best > 5 * n) {
    add_violation(report, report.witness, "Sq([w]) = " + std::to_string(best) + " exceeds 5n/3");
  }
  report.tallies["exceeds_1_25"] = 4 * best > 5 * n ? 1 : 0;
  report.tallies["exceeds_1_5"] = 2 * best > 3 * n ? 1 : 0;
  return report;
}

CheckReport run_check(const std::string& id, const SweepConfig& cfg) {
  if (id == checks::kMainBound) return check_main_bound(cfg);
  if (id == checks::kNonprimitiveBound) return check_nonprimitive_bound(cfg);
  if (id == checks::kSquareOracle) return check_square_oracle(cfg);
  if (id == checks::kClassParity) return check_class_parity(cfg);
  if (id == checks::kIndependence) return check_independence(cfg);
  if (id == checks::kClassCircuit) return check_class_circuit_bijection(cfg);
  if (id == checks::kSplitObservations) return check_split_observations(cfg);
  if (id == checks::kLargeCircuit) return check_large_circuit_instances(cfg);
  if (id == checks::kCaseBounds) return check_case_bounds(cfg);
  if (id == checks::kEq1Chain) return check_eq1_chain(cfg);
  throw InvalidArgument("unknown check '" + id + "'");
}

std::vector<CheckReport> run_checks(const SweepConfig& cfg) {
  validate(cfg);
  std::vector<CheckReport> out;
  for (const auto& id : cfg.checks) out.push_back(run_check(id, cfg));
  return out;
}

}  // namespace circsq
