#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "mcolour/cli.hpp"
#include "mcolour/error.hpp"
#include "mcolour/generators.hpp"
#include "mcolour/hypergraph.hpp"
#include "mcolour/io.hpp"
#include "mcolour/linear.hpp"
#include "mcolour/lll.hpp"
#include "mcolour/partition.hpp"
#include "mcolour/rational.hpp"
#include "mcolour/rounder.hpp"
#include "mcolour/verify.hpp"

namespace py = pybind11;
using namespace mcolour;

namespace {

// Rationals cross the boundary as fractions.Fraction; inputs may be anything
// whose str() parses (Fraction, int, decimal string).
py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(q.get_num().get_str())),
                  py::int_(py::str(q.get_den().get_str())));
}

Rational from_py(const py::handle& obj) {
  return parse_rational(py::str(obj).cast<std::string>());
}

Colouring make_colouring(std::vector<ColourId> colours, ColourId palette) {
  Colouring c{std::move(colours), palette};
  if (palette == 0) c.palette = c.max_used();
  return c;
}

py::dict colouring_dict(const Colouring& c) {
  py::dict d;
  d["colours"] = c.colours;
  d["palette"] = c.palette;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Majority edge-colourings of hypergraphs";

  static py::exception<Error> base(m, "McolourError");
  static py::exception<ParseError> parse_exc(m, "ParseError", base.ptr());
  static py::exception<PreconditionError> pre_exc(m, "PreconditionError", base.ptr());
  static py::exception<InvariantBreach> inv_exc(m, "InvariantBreach", base.ptr());
  static py::exception<SearchTooLarge> big_exc(m, "SearchTooLarge", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_exc, e.what());
    } catch (const PreconditionError& e) {
      py::set_error(pre_exc, e.what());
    } catch (const InvariantBreach& e) {
      py::set_error(inv_exc, e.what());
    } catch (const SearchTooLarge& e) {
      py::set_error(big_exc, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<std::size_t, std::vector<std::vector<VertexId>>>(), py::arg("num_vertices"),
           py::arg("edges"))
      .def_property_readonly("num_vertices", &Hypergraph::num_vertices)
      .def_property_readonly("num_edges", &Hypergraph::num_edges)
      .def_property_readonly("rank", &Hypergraph::rank)
      .def_property_readonly("min_degree", &Hypergraph::min_degree)
      .def_property_readonly("max_degree", &Hypergraph::max_degree)
      .def("is_linear", &Hypergraph::is_linear)
      .def("degree", &Hypergraph::degree)
      .def("edge", [](const Hypergraph& h, EdgeId e) {
        auto s = h.edge(e);
        return std::vector<VertexId>(s.begin(), s.end());
      })
      .def("edges", [](const Hypergraph& h) {
        std::vector<std::vector<VertexId>> out;
        for (EdgeId e = 0; e < h.num_edges(); ++e) {
          auto s = h.edge(e);
          out.emplace_back(s.begin(), s.end());
        }
        return out;
      })
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__repr__", [](const Hypergraph& h) {
        return "Hypergraph(n=" + std::to_string(h.num_vertices()) +
               ", m=" + std::to_string(h.num_edges()) + ")";
      });

  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("parse_hypergraph", [](const std::string& text) { return parse_hypergraph(text); },
        py::arg("text"));
  m.def("format_hypergraph", [](const Hypergraph& h) {
    std::ostringstream out;
    write_hypergraph(out, h);
    return out.str();
  });

  m.def(
      "round_weights",
      [](const Hypergraph& h, const py::iterable& z) {
        Weighting w;
        for (auto item : z) w.push_back(from_py(item));
        RoundingResult res = round_weights(h, w);
        py::list x, trace;
        for (const auto& q : res.x) x.append(to_fraction(q));
        for (const auto& it : res.trace.iterations) {
          py::dict d;
          d["constrained"] = it.constrained;
          d["fractional"] = it.fractional;
          d["step"] = to_fraction(it.step);
          d["fixed"] = it.fixed;
          trace.append(d);
        }
        return py::make_tuple(x, trace);
      },
      py::arg("hypergraph"), py::arg("weights"),
      "Round fractional edge weights to 0/1; returns (x, trace).");

  m.def(
      "alpha", [](unsigned i, std::size_t delta, unsigned k, std::size_t r) {
        return to_fraction(alpha(i, delta, k, r));
      },
      py::arg("i"), py::arg("delta"), py::arg("k"), py::arg("r"));

  m.def(
      "colour_partition",
      [](const Hypergraph& h, unsigned k) {
        PartitionResult res = colour_partition(h, k);
        py::dict d = colouring_dict(res.colouring);
        py::list rounds;
        for (const auto& rd : res.rounds)
          rounds.append(py::make_tuple(rd.round, to_fraction(rd.alpha), rd.class_size));
        d["rounds"] = rounds;
        d["delta"] = res.delta;
        d["rank"] = res.rank;
        return d;
      },
      py::arg("hypergraph"), py::arg("k"));

  m.def(
      "colour_linear",
      [](const Hypergraph& h, unsigned k) {
        LinearResult res = colour_linear(h, k);
        py::dict d = colouring_dict(res.colouring);
        d["split_max_degree"] = res.split_max_degree;
        d["line_graph_max_degree"] = res.line_graph_max_degree;
        d["colours_used"] = res.colours_used;
        return d;
      },
      py::arg("hypergraph"), py::arg("k"));

  m.def(
      "split_degrees",
      [](std::size_t d, unsigned k) {
        SplitDegrees s = split_degrees(d, k);
        return py::make_tuple(s.m, s.t);
      },
      py::arg("d"), py::arg("k"));

  m.def("threshold", &threshold, py::arg("k"), py::arg("r"));
  m.def("inequalities_hold", &inequalities_hold, py::arg("k"), py::arg("r"), py::arg("delta"));
  m.def(
      "threshold_terms",
      [](unsigned k, unsigned r, std::uint64_t delta) {
        ThresholdTerms t = threshold_terms(k, r, delta);
        return py::make_tuple(static_cast<double>(t.lhs1), static_cast<double>(t.lhs2));
      },
      py::arg("k"), py::arg("r"), py::arg("delta"));

  m.def(
      "random_colouring",
      [](const Hypergraph& h, unsigned k, std::uint64_t seed) {
        return random_colouring(h, k, seed).colours;
      },
      py::arg("hypergraph"), py::arg("k"), py::arg("seed"));
  m.def(
      "bad_vertices",
      [](const Hypergraph& h, const std::vector<ColourId>& colours, unsigned k) {
        return bad_vertices(h, Colouring{colours, static_cast<ColourId>(k + 1)}, k);
      },
      py::arg("hypergraph"), py::arg("colours"), py::arg("k"));
  m.def(
      "resample_colour",
      [](const Hypergraph& h, unsigned k, std::uint64_t seed, std::uint64_t max_rounds)
          -> py::object {
        if (max_rounds == 0) max_rounds = default_max_rounds(h);
        ResampleRun run = resample_colour(h, k, seed, max_rounds);
        py::dict d;
        d["rounds_used"] = run.rounds_used;
        d["max_rounds"] = run.max_rounds;
        d["colours"] = run.succeeded() ? py::cast(run.colouring->colours) : py::none();
        return d;
      },
      py::arg("hypergraph"), py::arg("k"), py::arg("seed"), py::arg("max_rounds") = 0);

  m.def(
      "verify",
      [](const Hypergraph& h, unsigned k, std::vector<ColourId> colours, ColourId palette) {
        VerifyReport rep = verify(h, k, make_colouring(std::move(colours), palette));
        py::list violations;
        for (const auto& v : rep.violations)
          violations.append(py::make_tuple(v.vertex, v.colour, v.count, v.bound));
        return py::make_tuple(rep.valid, violations);
      },
      py::arg("hypergraph"), py::arg("k"), py::arg("colours"), py::arg("palette") = 0,
      "Returns (valid, [(vertex, colour, count, bound), ...]).");

  m.def(
      "brute_force",
      [](const Hypergraph& h, unsigned k, ColourId palette) -> py::object {
        auto c = brute_force(h, k, palette);
        if (!c) return py::none();
        return py::cast(c->colours);
      },
      py::arg("hypergraph"), py::arg("k"), py::arg("palette"));

  m.def(
      "generate",
      [](const std::string& model, std::size_t n, std::size_t r, std::size_t min_degree,
         std::uint64_t seed) {
        return generate(GenSpec{parse_model(model), n, r, min_degree, seed});
      },
      py::arg("model"), py::arg("n"), py::arg("r"), py::arg("min_degree"), py::arg("seed") = 0);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"mcolour"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in-process; returns (code, stdout, stderr).");
}
