#include "circsq/rauzy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "circsq/errors.hpp"

namespace circsq {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("independent_rank: overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("independent_rank: overflow");
  return out;
}

void normalize_row(CycleVector& row) {
  std::int64_t g = 0;
  for (auto x : row) g = std::gcd(g, x);
  if (g > 1) {
    for (auto& x : row) x /= g;
  }
}

Circuit rotate_to_least_vertex(std::vector<Word> edges, std::size_t order) {
  auto least = std::min_element(edges.begin(), edges.end(), [order](const Word& a, const Word& b) {
    return a.ids().compare(0, order, b.ids(), 0, order) < 0;
  });
  std::rotate(edges.begin(), least, edges.end());
  return Circuit{std::move(edges)};
}

class CircuitCollector {
 public:
  CircuitCollector(const RauzyGraph& g, const CircuitOptions& options) : g_(g), options_(options) {}

  void emit(const std::vector<std::size_t>& edge_path) {
    if (out_.size() >= options_.cap) {
      throw SizeExceeded("circuit enumeration exceeded cap of " + std::to_string(options_.cap));
    }
    std::vector<Word> edges;
    edges.reserve(edge_path.size());
    for (std::size_t e : edge_path) edges.push_back(g_.edges()[e]);
    out_.push_back(Circuit{std::move(edges)});
  }

  std::vector<Circuit> take() {
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  const RauzyGraph& g_;
  const CircuitOptions& options_;
  std::vector<Circuit> out_;
};

// Johnson (1975): circuits through the least vertex s of each strongly
// connected piece of the subgraph induced by vertices >= s.
class Johnson {
 public:
  Johnson(const RauzyGraph& g, CircuitCollector& sink)
      : g_(g), sink_(sink), blocked_(g.vertices().size()), blocked_by_(g.vertices().size()) {}

  void run() {
    const std::size_t n = g_.vertices().size();
    for (start_ = 0; start_ < n; ++start_) {
      component_ = component_of(start_);
      for (std::size_t v = start_; v < n; ++v) {
        blocked_[v] = false;
        blocked_by_[v].clear();
      }
      circuit(start_);
    }
  }

 private:
  // Vertices >= start_ that are strongly connected to start_.
  std::vector<bool> component_of(std::size_t s) const {
    const std::size_t n = g_.vertices().size();
    std::vector<bool> forward(n, false);
    std::vector<bool> backward(n, false);
    std::vector<std::size_t> work{s};
    forward[s] = true;
    while (!work.empty()) {
      std::size_t v = work.back();
      work.pop_back();
      for (auto [e, t] : g_.out(v)) {
        if (t >= s && !forward[t]) {
          forward[t] = true;
          work.push_back(t);
        }
      }
    }
    backward[s] = true;
    work.push_back(s);
    while (!work.empty()) {
      std::size_t v = work.back();
      work.pop_back();
      for (std::size_t e = 0; e < g_.edges().size(); ++e) {
        if (g_.tail(e) == v && g_.head(e) >= s && !backward[g_.head(e)]) {
          backward[g_.head(e)] = true;
          work.push_back(g_.head(e));
        }
      }
    }
    std::vector<bool> both(n);
    for (std::size_t v = 0; v < n; ++v) both[v] = forward[v] && backward[v];
    return both;
  }

  void unblock(std::size_t u) {
    blocked_[u] = false;
    auto pending = std::move(blocked_by_[u]);
    blocked_by_[u].clear();
    for (std::size_t w : pending) {
      if (blocked_[w]) unblock(w);
    }
  }

  bool circuit(std::size_t v) {
    bool found = false;
    blocked_[v] = true;
    for (auto [e, t] : g_.out(v)) {
      if (!component_[t]) continue;
      if (t == start_) {
        path_.push_back(e);
        sink_.emit(path_);
        path_.pop_back();
        found = true;
      } else if (!blocked_[t]) {
        path_.push_back(e);
        if (circuit(t)) found = true;
        path_.pop_back();
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (auto [e, t] : g_.out(v)) {
        if (component_[t]) blocked_by_[t].insert(v);
      }
    }
    return found;
  }

  const RauzyGraph& g_;
  CircuitCollector& sink_;
  std::vector<bool> blocked_;
  std::vector<std::set<std::size_t>> blocked_by_;
  std::vector<bool> component_;
  std::vector<std::size_t> path_;
  std::size_t start_ = 0;
};

// Elementary circuits of at most max_length edges, each found from its least vertex.
void bounded_search(const RauzyGraph& g, std::size_t max_length, CircuitCollector& sink) {
  const std::size_t n = g.vertices().size();
  std::vector<bool> on_path(n, false);
  std::vector<std::size_t> path;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t s, std::size_t v) {
    for (auto [e, t] : g.out(v)) {
      if (t == s) {
        path.push_back(e);
        sink.emit(path);
        path.pop_back();
      } else if (t > s && !on_path[t] && path.size() + 1 < max_length) {
        on_path[t] = true;
        path.push_back(e);
        extend(s, t);
        path.pop_back();
        on_path[t] = false;
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    on_path[s] = true;
    extend(s, s);
    on_path[s] = false;
  }
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

RauzyGraph RauzyGraph::from_factor_sets(std::size_t order, const WordSet& vertices,
                                        const WordSet& edges) {
  RauzyGraph g;
  g.order_ = order;
  g.vertices_.assign(vertices.begin(), vertices.end());
  g.edges_.assign(edges.begin(), edges.end());
  g.out_.resize(g.vertices_.size());
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    const Word& edge = g.edges_[e];
    if (edge.size() != order + 1) {
      throw InvalidArgument("edge " + edge.str() + " does not have length " +
                            std::to_string(order + 1));
    }
    auto h = g.vertex_index(edge.substr(0, order));
    auto t = g.vertex_index(edge.substr(1, order));
    if (!h || !t) throw InvalidArgument("edge " + edge.str() + " has an endpoint outside the vertex set");
    g.head_.push_back(*h);
    g.tail_.push_back(*t);
    g.out_[*h].emplace_back(e, *t);
  }
  return g;
}

std::optional<std::size_t> RauzyGraph::vertex_index(const Word& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> RauzyGraph::edge_index(const Word& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<Word> Circuit::vertices() const {
  std::vector<Word> out;
  out.reserve(edges.size());
  for (const Word& e : edges) out.push_back(e.substr(0, e.size() - 1));
  return out;
}

RauzyGraph build_rauzy_graph(const Word& w, std::size_t order) {
  if (order == 0 || order + 1 > w.size()) {
    throw InvalidArgument("Rauzy graph order " + std::to_string(order) + " outside 1.." +
                          std::to_string(w.size() >= 2 ? w.size() - 1 : 0));
  }
  return RauzyGraph::from_factor_sets(order, factors(w, order), factors(w, order + 1));
}

bool is_weakly_connected(const RauzyGraph& g) {
  const std::size_t n = g.vertices().size();
  if (n <= 1) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t components = n;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    auto a = find(g.head(e));
    auto b = find(g.tail(e));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::int64_t cyclomatic_number(const RauzyGraph& g) {
  if (!is_weakly_connected(g)) throw InvalidState("cyclomatic number of a disconnected graph");
  return static_cast<std::int64_t>(g.edges().size()) -
         static_cast<std::int64_t>(g.vertices().size()) + 1;
}

std::vector<Circuit> enumerate_elementary_circuits(const RauzyGraph& g,
                                                   const CircuitOptions& options) {
  CircuitCollector sink(g, options);
  if (options.max_length) {
    if (*options.max_length > 0) bounded_search(g, *options.max_length, sink);
  } else {
    Johnson(g, sink).run();
  }
  return sink.take();
}

CycleVector vector_cycle(const Circuit& c, const RauzyGraph& g) {
  CycleVector mu(g.edges().size(), 0);
  for (const Word& e : c.edges) {
    auto idx = g.edge_index(e);
    if (!idx) throw InvalidArgument("vector_cycle: edge " + e.str() + " is not in the graph");
    ++mu[*idx];
  }
  return mu;
}

std::size_t independent_rank(const std::vector<CycleVector>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t dim = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != dim) throw InvalidArgument("independent_rank: dimension mismatch");
  }
  std::vector<CycleVector> rows = vectors;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const CycleVector& p = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const std::int64_t g = std::gcd(p[col], rows[r][col]);
      const std::int64_t scale_row = p[col] / g;
      const std::int64_t scale_pivot = rows[r][col] / g;
      for (std::size_t k = col; k < dim; ++k) {
        rows[r][k] = checked_sub(checked_mul(rows[r][k], scale_row), checked_mul(p[k], scale_pivot));
      }
      normalize_row(rows[r]);
    }
    ++rank;
  }
  return rank;
}

Word circuit_root(const Circuit& c) {
  if (c.edges.empty()) throw InvalidArgument("circuit_root: empty circuit");
  std::string ids;
  for (const Word& e : c.edges) ids.push_back(static_cast<char>(e[0]));
  return Word::from_ids(std::move(ids), c.edges.front().labels());
}

ClassCircuit class_circuit(const Word& p, std::size_t order) {
  if (p.empty()) throw InvalidInput("class_circuit: empty root");
  if (!is_primitive(p)) throw InvalidArgument("class_circuit: root " + p.str() + " is not primitive");
  if (order == 0) throw InvalidArgument("class_circuit: order must be positive");
  ClassCircuit cc;
  cc.root = p;
  cc.order = order;
  cc.vertex_set = circular_factors(p, order);
  cc.edge_set = circular_factors(p, order + 1);
  cc.is_elementary = cc.vertex_set.size() == p.size();
  cc.is_small = p.size() <= order;
  return cc;
}

bool contains_class_circuit(const Word& w, const Word& p, std::size_t order) {
  if (order == 0 || order + 1 > w.size()) {
    throw InvalidArgument("contains_class_circuit: order " + std::to_string(order) +
                          " outside 1.." + std::to_string(w.size() >= 2 ? w.size() - 1 : 0));
  }
  const ClassCircuit cc = class_circuit(p, order);
  const WordSet vertices = factors(w, order);
  const WordSet edges = factors(w, order + 1);
  return std::includes(vertices.begin(), vertices.end(), cc.vertex_set.begin(), cc.vertex_set.end()) &&
         std::includes(edges.begin(), edges.end(), cc.edge_set.begin(), cc.edge_set.end());
}

SmallCircuitProfile small_circuit_profile(const Word& w, const CircuitOptions& options) {
  if (w.size() < 2) throw InvalidInput("small_circuit_profile: word shorter than 2");
  SmallCircuitProfile profile;
  for (std::size_t i = 1; i < w.size(); ++i) {
    CircuitOptions bounded = options;
    bounded.max_length = options.max_length ? std::min(*options.max_length, i) : i;
    const auto circuits = enumerate_elementary_circuits(build_rauzy_graph(w, i), bounded);
    if (!circuits.empty()) {
      profile.per_order[i] = circuits.size();
      profile.total += circuits.size();
    }
  }
  return profile;
}

std::optional<std::size_t> split_point(const Word& p) {
  if (p.empty()) throw InvalidInput("split_point: empty word");
  if (!is_primitive(p)) throw InvalidArgument("split_point: " + p.str() + " is not primitive");
  std::optional<std::size_t> split;
  for (std::size_t m = 1; m <= p.size(); ++m) {
    if (circular_factor_count(p, m) < p.size()) split = m;
  }
  return split;
}

std::vector<Circuit> decompose_split(const Word& p, std::size_t m) {
  const auto split = split_point(p);
  if (!split || *split != m) {
    throw InvalidArgument("decompose_split: C(" + p.str() + ", .) does not split at " +
                          std::to_string(m));
  }
  // Walk p^infinity once around; the closed walk uses every edge of C(p, m)
  // exactly once, and peeling off each revisited vertex yields elementary circuits.
  const std::size_t len = p.size();
  const Word ext = p.power(m / len + 3);
  std::vector<Word> path_vertices{ext.substr(0, m)};
  std::vector<Word> path_edges;
  std::vector<Circuit> out;
  for (std::size_t j = 0; j < len; ++j) {
    path_edges.push_back(ext.substr(j, m + 1));
    Word next = ext.substr(j + 1, m);
    auto seen = std::find(path_vertices.begin(), path_vertices.end(), next);
    if (seen != path_vertices.end()) {
      const auto k = static_cast<std::size_t>(seen - path_vertices.begin());
      std::vector<Word> cycle(path_edges.begin() + static_cast<std::ptrdiff_t>(k), path_edges.end());
      path_edges.resize(k);
      path_vertices.resize(k + 1);
      out.push_back(rotate_to_least_vertex(std::move(cycle), m));
    } else {
      path_vertices.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_dot(const RauzyGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(name) << "\" {\n";
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    os << "  v" << v << " [label=\"" << dot_escape(g.vertices()[v].str()) << "\"];\n";
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    os << "  v" << g.head(e) << " -> v" << g.tail(e) << " [label=\""
       << dot_escape(g.edges()[e].str()) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace circsq
