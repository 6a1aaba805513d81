#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>

#include "circsq/errors.hpp"
#include "circsq/rauzy.hpp"
#include "circsq/report.hpp"
#include "circsq/squares.hpp"
#include "circsq/verify.hpp"

namespace py = pybind11;
using namespace circsq;

namespace {

std::vector<std::string> strs(const WordSet& ws) {
  std::vector<std::string> out;
  for (const Word& w : ws) out.push_back(w.str());
  return out;
}

std::vector<std::string> strs(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const Word& w : ws) out.push_back(w.str());
  return out;
}

// Words sharing one alphabet, so that comparisons between them are meaningful.
std::pair<Word, Word> parse_pair(const std::string& a, const std::string& b) {
  auto ws = Word::parse_many({a, b});
  return {ws[0], ws[1]};
}

py::dict class_dict(const PowerClass& pc) {
  py::dict d;
  d["root"] = pc.root.str();
  d["l"] = pc.root_length;
  d["t"] = pc.t();
  d["members"] = strs(pc.members);
  d["even"] = strs(pc.even);
  d["odd"] = strs(pc.odd);
  d["downward_closed"] = has_downward_closed_structure(pc);
  return d;
}

std::vector<std::vector<std::string>> circuit_edges(const std::vector<Circuit>& cs) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : cs) out.push_back(strs(c.edges));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Distinct squares in circular words: core operations";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<SizeExceeded>(m, "SizeExceeded", PyExc_RuntimeError);
  py::register_exception<InvalidState>(m, "InvalidState", PyExc_RuntimeError);

  // words
  m.def("rotations", [](const std::string& w) { return strs(rotations(Word::parse(w))); });
  m.def("canonical_rotation", [](const std::string& w) { return canonical_rotation(Word::parse(w)).str(); });
  m.def("is_primitive", [](const std::string& w) { return is_primitive(Word::parse(w)); });
  m.def("primitive_root", [](const std::string& w) {
    const auto r = primitive_root(Word::parse(w));
    return py::make_tuple(r.root.str(), r.exponent);
  });
  m.def("factors", [](const std::string& w, std::size_t k) { return strs(factors(Word::parse(w), k)); },
        py::arg("w"), py::arg("m"));
  m.def("circular_factors",
        [](const std::string& w, std::size_t k) { return strs(circular_factors(Word::parse(w), k)); },
        py::arg("w"), py::arg("m"));
  m.def("smallest_period", [](const std::string& w) { return smallest_period(Word::parse(w)); });
  m.def("fine_wilf_check", [](const std::string& w, std::size_t p, std::size_t q) {
    return fine_wilf_check(Word::parse(w), p, q);
  });
  m.def("rational_power",
        [](const std::string& u, std::size_t num) { return rational_power(Word::parse(u), num).str(); });

  // squares
  m.def("distinct_squares", [](const std::string& w) { return strs(distinct_squares(Word::parse(w)).squares); });
  m.def("distinct_squares_circular", [](const std::string& w) {
    return strs(distinct_squares_circular(CircularWord(Word::parse(w))).squares);
  });
  m.def("distinct_squares_circular_via_doubling", [](const std::string& w) {
    return strs(distinct_squares_circular_via_doubling(CircularWord(Word::parse(w))).squares);
  });
  m.def("power_factors", [](const std::string& w) { return strs(power_factors(Word::parse(w))); });
  m.def("class_decomposition", [](const std::string& w) {
    py::list out;
    for (const auto& pc : class_decomposition(Word::parse(w)).classes) out.append(class_dict(pc));
    return out;
  });
  m.def("odd_even_formula", [](std::size_t t, std::size_t l) {
    const auto c = odd_even_formula(t, l);
    return py::make_tuple(c.odd, c.even);
  });
  m.def("word_report", [](const std::string& w) { return word_report(Word::parse(w)).dump(); },
        "JSON text: word, n, Sq, Sq_circular and per-class counts");

  // rauzy
  py::class_<RauzyGraph>(m, "RauzyGraph")
      .def_property_readonly("order", &RauzyGraph::order)
      .def_property_readonly("vertices", [](const RauzyGraph& g) { return strs(g.vertices()); })
      .def_property_readonly("edges", [](const RauzyGraph& g) { return strs(g.edges()); })
      .def("is_weakly_connected", &is_weakly_connected)
      .def("cyclomatic_number", &cyclomatic_number)
      .def(
          "circuits",
          [](const RauzyGraph& g, std::optional<std::size_t> max_length, std::size_t cap) {
            CircuitOptions opts;
            opts.cap = cap;
            opts.max_length = max_length;
            return circuit_edges(enumerate_elementary_circuits(g, opts));
          },
          py::arg("max_length") = py::none(), py::arg("cap") = 1'000'000,
          "Elementary circuits as lists of edge words")
      .def(
          "vector_cycle",
          [](const RauzyGraph& g, const std::vector<std::string>& edges) {
            Circuit c;
            for (const auto& e : edges) {
              const auto idx = std::find_if(g.edges().begin(), g.edges().end(),
                                            [&](const Word& x) { return x.str() == e; });
              if (idx == g.edges().end()) throw InvalidArgument("edge " + e + " is not in the graph");
              c.edges.push_back(*idx);
            }
            return vector_cycle(c, g);
          },
          py::arg("edges"))
      .def("to_dot", &to_dot, py::arg("name") = "rauzy")
      .def("__repr__", [](const RauzyGraph& g) {
        return "<RauzyGraph order=" + std::to_string(g.order()) + " |V|=" +
               std::to_string(g.vertices().size()) + " |E|=" + std::to_string(g.edges().size()) + ">";
      });

  m.def("build_rauzy_graph",
        [](const std::string& w, std::size_t order) { return build_rauzy_graph(Word::parse(w), order); },
        py::arg("w"), py::arg("order"));
  m.def("independent_rank", &independent_rank);
  m.def("class_circuit", [](const std::string& p, std::size_t order) {
    const auto cc = class_circuit(Word::parse(p), order);
    py::dict d;
    d["root"] = cc.root.str();
    d["order"] = cc.order;
    d["vertices"] = strs(cc.vertex_set);
    d["edges"] = strs(cc.edge_set);
    d["is_elementary"] = cc.is_elementary;
    d["is_small"] = cc.is_small;
    return d;
  });
  m.def("contains_class_circuit", [](const std::string& w, const std::string& p, std::size_t order) {
    const auto [ww, pp] = parse_pair(w, p);
    return contains_class_circuit(ww, pp, order);
  });
  m.def("small_circuit_profile", [](const std::string& w) {
    const auto profile = small_circuit_profile(Word::parse(w));
    return py::make_tuple(profile.per_order, profile.total);
  });
  m.def("split_point", [](const std::string& p) { return split_point(Word::parse(p)); });
  m.def("decompose_split", [](const std::string& p, std::size_t split) {
    return circuit_edges(decompose_split(Word::parse(p), split));
  });

  // verify
  m.def(
      "run_checks_json",
      [](const std::vector<std::string>& ids, std::size_t alphabet, std::size_t max_len,
         bool canonicalize, std::size_t jobs, std::uint64_t seed,
         std::optional<std::string> checkpoint) {
        SweepConfig cfg;
        cfg.checks = ids;
        cfg.alphabet_size = alphabet;
        cfg.max_length = max_len;
        cfg.canonicalize = canonicalize;
        cfg.jobs = jobs;
        cfg.seed = seed;
        cfg.checkpoint_path = std::move(checkpoint);
        validate(cfg);
        std::vector<CheckReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_checks(cfg);
        }
        return to_json(reports).dump();
      },
      py::arg("checks"), py::arg("alphabet"), py::arg("max_len"), py::arg("canonicalize") = true,
      py::arg("jobs") = 1, py::arg("seed") = 0, py::arg("checkpoint") = py::none());
  m.def(
      "search_extremal_json",
      [](std::size_t n, std::size_t k, std::uint64_t budget, std::uint64_t seed) {
        return to_json(search_extremal(n, k, budget, seed)).dump();
      },
      py::arg("n"), py::arg("k"), py::arg("budget") = 100000, py::arg("seed") = 0);
  m.attr("CHECKS") = checks::all();
}
