#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circsq/word.hpp"

namespace circsq {

// Directed graph on length-i factors with length-(i+1) factors as edges; an
// edge runs from its length-i prefix to its length-i suffix. Vertices and
// edges are kept in lexicographic order; the edge order fixes the coordinates
// of vector-cycles.
class RauzyGraph {
 public:
  // Builds the graph from explicit factor sets. Every edge must have length
  // order+1 and its prefix and suffix must be vertices.
  static RauzyGraph from_factor_sets(std::size_t order, const WordSet& vertices,
                                     const WordSet& edges);

  std::size_t order() const noexcept { return order_; }
  const std::vector<Word>& vertices() const noexcept { return vertices_; }
  const std::vector<Word>& edges() const noexcept { return edges_; }
  std::size_t head(std::size_t edge) const { return head_[edge]; }
  std::size_t tail(std::size_t edge) const { return tail_[edge]; }

  // Outgoing (edge, target) pairs of a vertex, by edge order.
  const std::vector<std::pair<std::size_t, std::size_t>>& out(std::size_t vertex) const {
    return out_[vertex];
  }

  std::optional<std::size_t> vertex_index(const Word& v) const;
  std::optional<std::size_t> edge_index(const Word& e) const;

 private:
  std::size_t order_ = 0;
  std::vector<Word> vertices_;
  std::vector<Word> edges_;
  std::vector<std::size_t> head_;
  std::vector<std::size_t> tail_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out_;
};

// Elementary directed circuit, stored as its edge words starting from the
// edge that leaves the least vertex.
struct Circuit {
  std::vector<Word> edges;

  std::size_t length() const noexcept { return edges.size(); }
  // Start vertices of the edges, in path order.
  std::vector<Word> vertices() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
  friend auto operator<=>(const Circuit& a, const Circuit& b) { return a.edges <=> b.edges; }
};

// C(p, l) = ([p]_l, [p]_{l+1}) for a primitive p.
struct ClassCircuit {
  Word root;
  std::size_t order = 0;
  WordSet vertex_set;
  WordSet edge_set;
  bool is_elementary = false;
  bool is_small = false;
};

struct SmallCircuitProfile {
  std::map<std::size_t, std::size_t> per_order;  // sc_i(w), orders with no small circuit omitted
  std::size_t total = 0;                         // sc(w)
};

struct CircuitOptions {
  std::size_t cap = 1'000'000;
  // Only report circuits of at most this many edges.
  std::optional<std::size_t> max_length;
};

using CycleVector = std::vector<std::int64_t>;

// Gamma_i(w); requires 1 <= i <= |w| - 1.
RauzyGraph build_rauzy_graph(const Word& w, std::size_t order);

bool is_weakly_connected(const RauzyGraph& g);

// |E| - |V| + 1; throws InvalidState on a disconnected graph.
std::int64_t cyclomatic_number(const RauzyGraph& g);

// All elementary circuits, each once, sorted. Johnson's algorithm when the
// length is unbounded, a depth-bounded search otherwise. Throws SizeExceeded
// past options.cap.
std::vector<Circuit> enumerate_elementary_circuits(const RauzyGraph& g,
                                                   const CircuitOptions& options = {});

CycleVector vector_cycle(const Circuit& c, const RauzyGraph& g);

// Rank over the rationals with exact integer elimination.
std::size_t independent_rank(const std::vector<CycleVector>& vectors);

// The word spelled by a circuit: first symbol of each edge, in path order.
// For a circuit of a Rauzy graph of order l this is a primitive q with
// circuit = C(q, l).
Word circuit_root(const Circuit& c);

ClassCircuit class_circuit(const Word& p, std::size_t order);

// [p]_l within Fac_l(w) and [p]_{l+1} within Fac_{l+1}(w).
bool contains_class_circuit(const Word& w, const Word& p, std::size_t order);

SmallCircuitProfile small_circuit_profile(const Word& w, const CircuitOptions& options = {});

// Largest m with |[p]_m| < |p|; nullopt when |[p]_1| = |p|.
std::optional<std::size_t> split_point(const Word& p);

// Edge-disjoint elementary circuits covering C(p, m) where m is the split point.
std::vector<Circuit> decompose_split(const Word& p, std::size_t m);

// Graphviz rendering with factor labels on vertices and edges.
std::string to_dot(const RauzyGraph& g, const std::string& name = "rauzy");

}  // namespace circsq
