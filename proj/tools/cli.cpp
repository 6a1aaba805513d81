#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "circsq/errors.hpp"
#include "circsq/rauzy.hpp"
#include "circsq/report.hpp"
#include "circsq/squares.hpp"
#include "circsq/verify.hpp"
#include "json.hpp"

namespace circsq::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string word;
  bool circular = false;
  std::size_t order = 1;
  std::size_t alphabet = 2;
  std::size_t max_len = 8;
  std::string check = "all";
  std::uint64_t budget = 100000;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string checkpoint;
  std::size_t jobs = 1;
  bool no_canonical = false;
};

Word parse_word(const std::string& text) {
  if (text.empty()) throw UsageError("word argument must be nonempty");
  try {
    return Word::parse(text);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

// Host whose Rauzy graphs are inspected: w itself, or w^2 for the circular view.
Word host(const Options& o) {
  const Word w = parse_word(o.word);
  return o.circular ? w + w : w;
}

std::string join_set(const WordSet& words) {
  std::string out = "{";
  bool first = true;
  for (const Word& w : words) {
    if (!first) out += ", ";
    out += w.str();
    first = false;
  }
  return out + "}";
}

int cmd_count(const Options& o, std::ostream& out) {
  const Word w = parse_word(o.word);
  const SquareSet squares =
      o.circular ? distinct_squares_circular(CircularWord(w)) : distinct_squares(w);
  const std::string name = o.circular ? "Sq([" + w.str() + "])" : "Sq(" + w.str() + ")";
  if (o.format == "json") {
    json j = word_report(w);
    j["circular"] = o.circular;
    json list = json::array();
    for (const Word& s : squares.squares) list.push_back(s.str());
    j["squares"] = std::move(list);
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "word,n,circular,sq\n" << w.str() << ',' << w.size() << ','
        << (o.circular ? "true" : "false") << ',' << squares.count() << '\n';
  } else {
    out << name << " = " << squares.count() << '\n';
    out << "squares: " << join_set(squares.squares) << '\n';
  }
  return kExitOk;
}

int cmd_classes(const Options& o, std::ostream& out) {
  const Word w = parse_word(o.word);
  const ClassDecomposition dec = class_decomposition(w);
  if (o.format == "json") {
    out << word_report(w).dump(2) << '\n';
    return kExitOk;
  }
  if (o.format == "csv") {
    out << "root,l,t,E,O\n";
    for (const auto& pc : dec.classes) {
      out << pc.root.str() << ',' << pc.root_length << ',' << pc.t() << ',' << pc.even.size()
          << ',' << pc.odd.size() << '\n';
    }
    return kExitOk;
  }
  out << "word " << w.str() << " (n = " << w.size() << "), Sq = " << distinct_squares(w).count()
      << ", " << dec.classes.size() << " classes\n";
  for (const auto& pc : dec.classes) {
    const ParityCounts predicted = odd_even_formula(pc.t(), pc.root_length);
    out << "  [" << pc.root.str() << "] l=" << pc.root_length << " t=" << pc.t()
        << " |E|=" << pc.even.size() << " |O|=" << pc.odd.size()
        << (has_downward_closed_structure(pc) ? " downward-closed" : " irregular")
        << " formula(|O|,|E|)=(" << predicted.odd << "," << predicted.even << ")\n";
    out << "    E = " << join_set(pc.even) << "\n    O = " << join_set(pc.odd) << '\n';
  }
  return kExitOk;
}

RauzyGraph graph_for(const Options& o) {
  const Word h = host(o);
  if (o.order == 0 || o.order + 1 > h.size()) {
    throw UsageError("order " + std::to_string(o.order) + " outside 1.." +
                     std::to_string(h.size() >= 2 ? h.size() - 1 : 0));
  }
  return build_rauzy_graph(h, o.order);
}

int cmd_rauzy(const Options& o, std::ostream& out) {
  const RauzyGraph g = graph_for(o);
  if (o.format == "dot") {
    out << to_dot(g, "Gamma_" + std::to_string(o.order));
  } else if (o.format == "json") {
    out << to_json(g).dump(2) << '\n';
  } else {
    out << "Gamma_" << g.order() << ": " << g.vertices().size() << " vertices, "
        << g.edges().size() << " edges";
    if (is_weakly_connected(g)) out << ", cyclomatic number " << cyclomatic_number(g);
    out << '\n';
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      out << "  " << g.vertices()[g.head(e)].str() << " -> " << g.vertices()[g.tail(e)].str()
          << "  [" << g.edges()[e].str() << "]\n";
    }
  }
  return kExitOk;
}

int cmd_circuits(const Options& o, std::ostream& out) {
  const RauzyGraph g = graph_for(o);
  const auto circuits = enumerate_elementary_circuits(g);
  std::vector<CycleVector> all_vectors;
  std::vector<CycleVector> small_vectors;
  for (const auto& c : circuits) {
    all_vectors.push_back(vector_cycle(c, g));
    if (c.length() <= g.order()) small_vectors.push_back(all_vectors.back());
  }
  const std::size_t rank = independent_rank(all_vectors);
  const std::size_t small_rank = independent_rank(small_vectors);
  const auto chi = cyclomatic_number(g);
  if (o.format == "json") {
    json list = json::array();
    for (std::size_t i = 0; i < circuits.size(); ++i) {
      json c = to_json(circuits[i]);
      c["small"] = circuits[i].length() <= g.order();
      c["vector_cycle"] = all_vectors[i];
      list.push_back(std::move(c));
    }
    out << json{{"order", g.order()},
                {"cyclomatic_number", chi},
                {"rank", rank},
                {"small_count", small_vectors.size()},
                {"small_rank", small_rank},
                {"circuits", std::move(list)}}
               .dump(2)
        << '\n';
  } else if (o.format == "csv") {
    out << "length,small,root,edges\n";
    for (const auto& c : circuits) {
      out << c.length() << ',' << (c.length() <= g.order() ? "true" : "false") << ','
          << circuit_root(c).str() << ',';
      for (std::size_t i = 0; i < c.edges.size(); ++i) out << (i ? " " : "") << c.edges[i].str();
      out << '\n';
    }
  } else {
    out << "Gamma_" << g.order() << ": " << circuits.size() << " elementary circuits, rank "
        << rank << ", cyclomatic number " << chi << "; " << small_vectors.size()
        << " small (rank " << small_rank << ")\n";
    for (const auto& c : circuits) {
      out << "  ";
      for (const Word& v : c.vertices()) out << v.str() << " -> ";
      out << c.vertices().front().str() << "  (length " << c.length()
          << (c.length() <= g.order() ? ", small" : "") << ")\n";
    }
  }
  return kExitOk;
}

int cmd_split(const Options& o, std::ostream& out) {
  const Word p = parse_word(o.word);
  if (!is_primitive(p)) throw UsageError(p.str() + " is not primitive");
  const auto m = split_point(p);
  std::vector<Circuit> parts;
  if (m) parts = decompose_split(p, *m);
  if (o.format == "json") {
    json list = json::array();
    for (const auto& c : parts) list.push_back(to_json(c));
    out << json{{"word", p.str()},
                {"split_point", m ? json(*m) : json(nullptr)},
                {"components", std::move(list)}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << p.str() << ": ";
  if (!m) {
    out << "never splits\n";
    return kExitOk;
  }
  std::size_t total = 0;
  std::string sum;
  for (const auto& c : parts) {
    if (!sum.empty()) sum += "+";
    sum += std::to_string(c.length());
    total += c.length();
  }
  out << "splits at " << *m << "; components of lengths " << sum << "=" << total << '\n';
  for (const auto& c : parts) {
    out << "  ";
    for (const Word& v : c.vertices()) out << v.str() << " -> ";
    out << c.vertices().front().str() << '\n';
  }
  return kExitOk;
}

void write_reports(const std::vector<CheckReport>& reports, const std::string& format,
                   std::ostream& out) {
  if (format == "json") {
    out << to_json(reports).dump(2) << '\n';
  } else if (format == "csv") {
    out << format_csv(reports);
  } else {
    out << format_text(reports);
  }
}

int status_of(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed()) return kExitViolations;
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  cfg.alphabet_size = o.alphabet;
  cfg.max_length = o.max_len;
  cfg.canonicalize = !o.no_canonical;
  cfg.jobs = o.jobs;
  cfg.seed = o.seed;
  if (o.check == "all") {
    cfg.checks = checks::all();
  } else {
    cfg.checks = {o.check};
  }
  if (const char* env = std::getenv("CIRCSQ_CHECKPOINT"); env && *env) {
    cfg.checkpoint_path = env;
  } else if (!o.checkpoint.empty()) {
    cfg.checkpoint_path = o.checkpoint;
  }
  cfg.warn = [&err](const std::string& message) { err << "warning: " << message << '\n'; };
  try {
    validate(cfg);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  const auto reports = run_checks(cfg);
  write_reports(reports, o.format, out);
  return status_of(reports);
}

int cmd_search(const Options& o, std::ostream& out) {
  if (o.max_len == 0) throw UsageError("length must be at least 1");
  const auto report = search_extremal(o.max_len, o.alphabet, o.budget, o.seed);
  write_reports({report}, o.format, out);
  return status_of({report});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distinct squares in circular words: counting, Rauzy graphs, verification sweeps", "circsq"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&o](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember(std::move(allowed)))
        ->capture_default_str();
  };
  auto add_word = [&o](CLI::App* sub) {
    sub->add_option("word", o.word, "Word, one ASCII character per symbol")->required();
  };

  auto* count = app.add_subcommand("count", "Count distinct squares of w or of [w]");
  add_word(count);
  count->add_flag("--circular", o.circular, "Count squares of the circular word [w]");
  add_format(count, {"text", "json", "csv"});

  auto* classes = app.add_subcommand("classes", "Power classes Class_p(w) with even/odd split");
  add_word(classes);
  add_format(classes, {"text", "json", "csv"});

  auto* rauzy = app.add_subcommand("rauzy", "Rauzy graph of order i");
  add_word(rauzy);
  rauzy->add_option("--order", o.order, "Graph order i")->required();
  rauzy->add_flag("--circular", o.circular, "Use w^2 as host");
  add_format(rauzy, {"text", "json", "dot"});

  auto* circuits = app.add_subcommand("circuits", "Elementary circuits of a Rauzy graph");
  add_word(circuits);
  circuits->add_option("--order", o.order, "Graph order i")->required();
  circuits->add_flag("--circular", o.circular, "Use w^2 as host");
  add_format(circuits, {"text", "json", "csv"});

  auto* split = app.add_subcommand("split", "Split point and decomposition of C(p, .)");
  add_word(split);
  add_format(split, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "Exhaustive verification sweeps");
  verify->add_option("--check", o.check, "Check id or 'all'")->capture_default_str();
  verify->add_option("--alphabet", o.alphabet, "Alphabet size k")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  verify->add_option("--max-len", o.max_len, "Maximum word length")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  verify->add_option("--seed", o.seed, "Seed for randomized spot checks")->capture_default_str();
  verify->add_option("--checkpoint", o.checkpoint,
                     "Checkpoint file (CIRCSQ_CHECKPOINT overrides)");
  verify->add_option("--jobs", o.jobs, "Worker threads")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();
  verify->add_flag("--no-canonical", o.no_canonical, "Test every word, not one per class");
  add_format(verify, {"text", "json", "csv"});

  auto* search = app.add_subcommand("search", "Search for words with many circular squares");
  search->add_option("--length,--max-len", o.max_len, "Word length n")->required();
  search->add_option("--alphabet", o.alphabet, "Alphabet size k")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  search->add_option("--budget", o.budget, "Evaluation budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  search->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  add_format(search, {"text", "json", "csv"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(o, out);
    if (classes->parsed()) return cmd_classes(o, out);
    if (rauzy->parsed()) return cmd_rauzy(o, out);
    if (circuits->parsed()) return cmd_circuits(o, out);
    if (split->parsed()) return cmd_split(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (search->parsed()) return cmd_search(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace circsq::cli
