#include <doctest.h>

#include <regex>
#include <sstream>

#include "circsq/errors.hpp"
#include "circsq/rauzy.hpp"
#include "circsq/squares.hpp"
#include "oracles.hpp"

using namespace circsq;
using oracle::L;
using oracle::text;
using oracle::texts;

namespace {

const Word kP3 = L("abacabacabac");

std::vector<std::string> edge_texts(const Circuit& c) {
  std::vector<std::string> out;
  for (const auto& e : c.edges) out.push_back(text(e));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> edge_list(const RauzyGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t e = 0; e < g.edges().size(); ++e) out.emplace_back(g.head(e), g.tail(e));
  return out;
}

// Circuits from the DFS oracle, in the library's representation.
std::set<std::vector<std::string>> oracle_circuits(const RauzyGraph& g) {
  std::set<std::vector<std::string>> out;
  for (const auto& ids : oracle::circuits(g.vertices().size(), edge_list(g))) {
    std::vector<std::string> edges;
    for (std::size_t e : ids) edges.push_back(text(g.edges()[e]));
    out.insert(edges);
  }
  return out;
}

}  // namespace

TEST_CASE("Rauzy graph of the worked example") {
  const RauzyGraph g1 = build_rauzy_graph(kP3, 1);
  CHECK(g1.vertices().size() == 3);
  CHECK(g1.edges().size() == 4);
  CHECK(texts(WordSet(g1.edges().begin(), g1.edges().end())) ==
        std::set<std::string>{"ab", "ba", "ac", "ca"});
  CHECK(is_weakly_connected(g1));
  CHECK(cyclomatic_number(g1) == 2);

  const auto c1 = enumerate_elementary_circuits(g1);
  REQUIRE(c1.size() == 2);
  CHECK(edge_texts(c1[0]) == std::vector<std::string>{"ab", "ba"});
  CHECK(edge_texts(c1[1]) == std::vector<std::string>{"ac", "ca"});
  // Edge order is lexicographic: ab, ac, ba, ca.
  CHECK(vector_cycle(c1[0], g1) == CycleVector{1, 0, 1, 0});
  CHECK(vector_cycle(c1[1], g1) == CycleVector{0, 1, 0, 1});
  CHECK(independent_rank({vector_cycle(c1[0], g1), vector_cycle(c1[1], g1)}) == 2);

  const RauzyGraph g2 = build_rauzy_graph(kP3, 2);
  CHECK(g2.vertices().size() == 4);
  CHECK(g2.edges().size() == 4);
  CHECK(cyclomatic_number(g2) == 1);
  const auto c2 = enumerate_elementary_circuits(g2);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].length() == 4);
  CHECK(vector_cycle(c2[0], g2) == CycleVector{1, 1, 1, 1});
  std::vector<std::string> cycle_vertices;
  for (const auto& v : c2[0].vertices()) cycle_vertices.push_back(text(v));
  CHECK(cycle_vertices == std::vector<std::string>{"ab", "ba", "ac", "ca"});

  const RauzyGraph gab = build_rauzy_graph(L("ab"), 1);
  CHECK(gab.vertices().size() == 2);
  CHECK(gab.edges().size() == 1);
  CHECK(enumerate_elementary_circuits(gab).empty());
  CHECK(cyclomatic_number(gab) == 0);

  const auto cabab = enumerate_elementary_circuits(build_rauzy_graph(L("abab"), 1));
  REQUIRE(cabab.size() == 1);
  CHECK(edge_texts(cabab[0]) == std::vector<std::string>{"ab", "ba"});
}

TEST_CASE("graph construction errors") {
  CHECK_THROWS_AS(build_rauzy_graph(L("ab"), 0), InvalidArgument);
  CHECK_THROWS_AS(build_rauzy_graph(L("ab"), 2), InvalidArgument);
  CHECK_THROWS_AS(RauzyGraph::from_factor_sets(1, {L("a")}, {L("ab")}), InvalidArgument);
  CHECK_THROWS_AS(RauzyGraph::from_factor_sets(1, {L("a"), L("b")}, {L("abb")}), InvalidArgument);

  const RauzyGraph lonely = RauzyGraph::from_factor_sets(1, {L("a")}, {});
  CHECK(is_weakly_connected(lonely));
  CHECK(cyclomatic_number(lonely) == 0);

  const RauzyGraph split = RauzyGraph::from_factor_sets(1, {L("a"), L("b")}, {});
  CHECK_FALSE(is_weakly_connected(split));
  CHECK_THROWS_AS(cyclomatic_number(split), InvalidState);

  // Path a -> b -> c: n vertices, n - 1 edges.
  const RauzyGraph path = RauzyGraph::from_factor_sets(1, {L("a"), L("b"), L("c")}, {L("ab"), L("bc")});
  CHECK(cyclomatic_number(path) == 0);

  Circuit foreign{{L("cc")}};
  CHECK_THROWS_AS(vector_cycle(foreign, build_rauzy_graph(kP3, 1)), InvalidArgument);
  CHECK_THROWS_AS(independent_rank({{1, 0}, {1}}), InvalidArgument);
}

TEST_CASE("independent_rank") {
  CHECK(independent_rank({{1, 0, 1, 0}, {0, 1, 0, 1}}) == 2);
  CHECK(independent_rank({{1, 1}, {2, 2}}) == 1);
  CHECK(independent_rank({}) == 0);
  CHECK(independent_rank({{0, 0, 0}}) == 0);
  CHECK(independent_rank({{1, 1, 0}, {0, 1, 1}, {1, 0, -1}}) == 2);
  CHECK(independent_rank({{3, 5, 7}, {2, 4, 6}, {1, 1, 2}}) == 3);
}

TEST_CASE("Rauzy graph properties over short words") {
  std::size_t graphs = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    for (const auto& s : oracle::all_words(3, n)) {
      const Word w = L(s);
      for (std::size_t i = 1; i < n; ++i) {
        const RauzyGraph g = build_rauzy_graph(w, i);
        ++graphs;
        REQUIRE(texts(WordSet(g.vertices().begin(), g.vertices().end())) ==
                oracle::substrings(s, i));
        REQUIRE(texts(WordSet(g.edges().begin(), g.edges().end())) ==
                oracle::substrings(s, i + 1));
        for (std::size_t e = 0; e < g.edges().size(); ++e) {
          REQUIRE(g.vertices()[g.head(e)] == g.edges()[e].substr(0, i));
          REQUIRE(g.vertices()[g.tail(e)] == g.edges()[e].substr(1, i));
        }
        REQUIRE(is_weakly_connected(g));

        const auto circuits = enumerate_elementary_circuits(g);
        std::set<std::vector<std::string>> got;
        std::vector<CycleVector> vectors;
        for (const auto& c : circuits) {
          got.insert(edge_texts(c));
          vectors.push_back(vector_cycle(c, g));
          // Spelled root is primitive and the circuit is exactly C(root, i).
          const Word root = circuit_root(c);
          REQUIRE(is_primitive(root));
          REQUIRE(root.size() == c.length());
          const ClassCircuit cc = class_circuit(root, i);
          REQUIRE(cc.is_elementary);
          REQUIRE(WordSet(c.edges.begin(), c.edges.end()) == cc.edge_set);
        }
        REQUIRE(got.size() == circuits.size());
        REQUIRE(got == oracle_circuits(g));

        std::vector<std::vector<std::int64_t>> rows(vectors.begin(), vectors.end());
        const std::size_t rank = independent_rank(vectors);
        REQUIRE(rank == oracle::rational_rank(rows));
        REQUIRE(static_cast<std::int64_t>(rank) <= cyclomatic_number(g));
      }
    }
  }
  CHECK(graphs > 10000);
}

TEST_CASE("bounded search equals filtered Johnson output") {
  for (const char* s : {"abacabacabac", "aabaabbabbab", "abcabcaabbcc", "aaabaaabab"}) {
    const Word w = L(s);
    for (std::size_t i = 1; i < w.size(); ++i) {
      const RauzyGraph g = build_rauzy_graph(w, i);
      std::vector<Circuit> filtered;
      for (const auto& c : enumerate_elementary_circuits(g)) {
        if (c.length() <= i) filtered.push_back(c);
      }
      CircuitOptions opts;
      opts.max_length = i;
      REQUIRE(enumerate_elementary_circuits(g, opts) == filtered);
    }
  }
}

TEST_CASE("circuit cap") {
  // Complete graph on three letters: Gamma_1 of a de Bruijn-like word.
  const RauzyGraph g = build_rauzy_graph(L("aabbccacbab"), 1);
  CircuitOptions opts;
  opts.cap = 2;
  CHECK_THROWS_AS(enumerate_elementary_circuits(g, opts), SizeExceeded);
  opts.cap = 100;
  CHECK(enumerate_elementary_circuits(g, opts).size() == 8);
}

TEST_CASE("class_circuit") {
  const ClassCircuit c2 = class_circuit(L("abac"), 2);
  CHECK(c2.is_elementary);
  CHECK_FALSE(c2.is_small);
  CHECK(c2.vertex_set.size() == 4);
  const ClassCircuit c1 = class_circuit(L("abac"), 1);
  CHECK_FALSE(c1.is_elementary);
  const ClassCircuit loop = class_circuit(L("a"), 1);
  CHECK(loop.is_elementary);
  CHECK(loop.is_small);
  CHECK_THROWS_AS(class_circuit(L("abab"), 2), InvalidArgument);

  SUBCASE("elementary exactly when the vertex set has |p| words") {
    for (std::size_t n = 1; n <= 8; ++n) {
      for (const auto& s : oracle::all_words(2, n)) {
        if (!oracle::primitive(s)) continue;
        for (std::size_t m = 1; m <= n + 2; ++m) {
          const ClassCircuit cc = class_circuit(L(s), m);
          REQUIRE(cc.is_elementary == (oracle::periodic_windows(s, m).size() == n));
          REQUIRE(cc.is_small == (n <= m));
        }
      }
    }
  }
}

TEST_CASE("contains_class_circuit") {
  CHECK(contains_class_circuit(kP3, L("abac"), 4));
  CHECK_FALSE(contains_class_circuit(kP3, L("abac"), 9));
  CHECK(factors(kP3, 10).size() == 3);
  CHECK(contains_class_circuit(L("abab"), L("ab"), 2));
  CHECK_THROWS_AS(contains_class_circuit(L("abab"), L("ab"), 4), InvalidArgument);
}

TEST_CASE("small_circuit_profile") {
  const auto p3 = small_circuit_profile(kP3);
  CHECK(p3.total >= 5);
  for (std::size_t l = 4; l <= 8; ++l) CHECK(p3.per_order.at(l) >= 1);

  CHECK(small_circuit_profile(L("ab")).total == 0);

  const auto a3 = small_circuit_profile(L("aaa"));
  CHECK(a3.per_order.at(1) == 1);
  CHECK(a3.per_order.at(2) == 1);
  CHECK(a3.total == 2);
  CHECK_THROWS_AS(small_circuit_profile(L("a")), InvalidInput);

  SUBCASE("small circuits are independent and bounded by |w| - |Alph(w)|") {
    for (std::size_t n = 2; n <= 9; ++n) {
      for (const auto& s : oracle::all_words(3, n)) {
        const Word w = L(s);
        const auto profile = small_circuit_profile(w);
        std::size_t sum = 0;
        for (const auto& [order, count] : profile.per_order) {
          sum += count;
          const RauzyGraph g = build_rauzy_graph(w, order);
          CircuitOptions opts;
          opts.max_length = order;
          std::vector<CycleVector> vectors;
          for (const auto& c : enumerate_elementary_circuits(g, opts)) {
            vectors.push_back(vector_cycle(c, g));
          }
          REQUIRE(vectors.size() == count);
          REQUIRE(independent_rank(vectors) == count);
        }
        REQUIRE(sum == profile.total);
        REQUIRE(profile.total + w.alphabet_size() <= n);
      }
    }
  }
}

TEST_CASE("split_point") {
  CHECK(split_point(L("abac")) == 1u);
  CHECK_FALSE(split_point(L("ab")).has_value());
  CHECK(split_point(L("aab")) == 1u);
  CHECK_THROWS_AS(split_point(L("abab")), InvalidArgument);
  CHECK_THROWS_AS(split_point(Word{}), InvalidInput);

  SUBCASE("C(p, l) is elementary above the split point and not at it") {
    for (std::size_t n = 1; n <= 8; ++n) {
      for (const auto& s : oracle::all_words(3, n)) {
        if (!oracle::primitive(s)) continue;
        const auto m = split_point(L(s));
        for (std::size_t l = 1; l <= n + 1; ++l) {
          const bool elementary = oracle::periodic_windows(s, l).size() == n;
          if (m && l == *m) REQUIRE_FALSE(elementary);
          if (!m || l > *m) REQUIRE(elementary);
        }
      }
    }
  }
}

TEST_CASE("decompose_split") {
  const auto abac = decompose_split(L("abac"), 1);
  REQUIRE(abac.size() == 2);
  CHECK(abac[0].length() == 2);
  CHECK(abac[1].length() == 2);

  const auto aab = decompose_split(L("aab"), 1);
  std::set<std::vector<std::string>> got;
  for (const auto& c : aab) got.insert(edge_texts(c));
  // Gamma on {a, b} with edges aa, ab, ba: the loop at a and a -> b -> a.
  CHECK(got == std::set<std::vector<std::string>>{{"aa"}, {"ab", "ba"}});

  const auto m = split_point(L("aabab"));
  REQUIRE(m.has_value());
  std::size_t total = 0;
  for (const auto& c : decompose_split(L("aabab"), *m)) total += c.length();
  CHECK(total == 5);

  CHECK_THROWS_AS(decompose_split(L("abac"), 2), InvalidArgument);
  CHECK_THROWS_AS(decompose_split(L("ab"), 1), InvalidArgument);

  SUBCASE("edge-disjoint elementary circuits of C(p, m) covering |p|") {
    for (std::size_t n = 1; n <= 8; ++n) {
      for (const auto& s : oracle::all_words(3, n)) {
        if (!oracle::primitive(s)) continue;
        const auto split = split_point(L(s));
        if (!split) continue;
        const std::size_t sm = *split;
        const auto parts = decompose_split(L(s), sm);
        REQUIRE(parts.size() >= 2);
        const auto vertices = oracle::periodic_windows(s, sm);
        const auto edges = oracle::periodic_windows(s, sm + 1);
        std::set<std::string> used;
        std::size_t total_len = 0;
        for (const auto& c : parts) {
          total_len += c.length();
          std::set<std::string> seen_vertices;
          for (std::size_t j = 0; j < c.length(); ++j) {
            const std::string e = text(c.edges[j]);
            REQUIRE(edges.count(e) == 1);
            REQUIRE(used.insert(e).second);
            REQUIRE(seen_vertices.insert(e.substr(0, sm)).second);
            REQUIRE(e.substr(1) == text(c.edges[(j + 1) % c.length()]).substr(0, sm));
          }
          for (const auto& v : seen_vertices) REQUIRE(vertices.count(v) == 1);
        }
        REQUIRE(total_len == n);
        REQUIRE(used == edges);
      }
    }
  }
}

TEST_CASE("Gamma_n(w^2) is a single elementary circuit for primitive w") {
  for (std::size_t n = 2; n <= 9; ++n) {
    for (const auto& s : oracle::all_words(2, n)) {
      if (!oracle::primitive(s)) continue;
      const Word ww = L(s + s);
      const auto circuits = enumerate_elementary_circuits(build_rauzy_graph(ww, n));
      REQUIRE(circuits.size() == 1);
      REQUIRE(circuits[0].length() == n);
      for (std::size_t l = n + 1; l < 2 * n; ++l) {
        REQUIRE(enumerate_elementary_circuits(build_rauzy_graph(ww, l)).empty());
      }
    }
  }
}

TEST_CASE("DOT export") {
  const std::string dot = to_dot(build_rauzy_graph(kP3, 1), "gamma1");
  CHECK(dot.rfind("digraph \"gamma1\" {\n", 0) == 0);
  CHECK(dot.back() == '\n');
  const std::regex vertex(R"(^  v\d+ \[label="[^"]*"\];$)");
  const std::regex edge(R"(^  v\d+ -> v\d+ \[label="[^"]*"\];$)");
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::istringstream in(dot);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line) && line != "}") {
    if (std::regex_match(line, vertex)) {
      ++vertices;
    } else {
      REQUIRE(std::regex_match(line, edge));
      ++edges;
    }
  }
  CHECK(line == "}");
  CHECK(vertices == 3);
  CHECK(edges == 4);
  CHECK(dot.find("[label=\"ab\"]") != std::string::npos);

  const std::string quoted = to_dot(build_rauzy_graph(Word::parse("a\"a\""), 1), "q\"");
  CHECK(quoted.find("\\\"") != std::string::npos);
}
