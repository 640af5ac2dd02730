#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monkey/alphabet.hpp"
#include "monkey/error.hpp"
#include "monkey/fit.hpp"
#include "monkey/gamma.hpp"
#include "monkey/pyramid.hpp"
#include "monkey/rank_frequency.hpp"
#include "monkey/simulate.hpp"

namespace py = pybind11;
using namespace monkey;

// Arbitrary-precision counts cross the boundary as Python ints.
namespace pybind11::detail {
template <>
struct type_caster<Count> {
  PYBIND11_TYPE_CASTER(Count, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = Count(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const Count& c, return_value_policy, handle) {
    return PyLong_FromString(c.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

WeightVector weights_of(const Alphabet& a, bool rescaled) {
  return rescaled ? rescale_weights(a, solve_gamma(a)) : WeightVector::from_alphabet(a);
}

RankFrequency to_rank_frequency(const std::vector<std::pair<std::uint64_t, double>>& points) {
  RankFrequency rf;
  rf.points.reserve(points.size());
  for (const auto& [r, f] : points) rf.points.push_back({r, f});
  validate(rf);
  return rf;
}

}  // namespace

PYBIND11_MODULE(_monkeyzipf, m) {
  m.doc() = "Random-typing word model core";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<Alphabet>(m, "Alphabet")
      .def(py::init<std::vector<double>, double, std::vector<std::string>>(), py::arg("letter_probs"),
           py::arg("space_prob"), py::arg("labels") = std::vector<std::string>{})
      .def_static("uniform", &make_uniform, py::arg("n"), py::arg("p0"))
      .def_static("gusein_zade", &make_gusein_zade, py::arg("n"), py::arg("p0"))
      .def_static("from_file", &load_alphabet_file, py::arg("path"))
      .def_static("from_json", [](const std::string& s) { return alphabet_from_json(s); })
      .def_static(
          "from_text", [](const std::string& text) { return estimate_from_corpus(std::string_view(text)); },
          py::arg("text"))
      .def("to_json", &alphabet_to_json)
      .def_property_readonly("size", &Alphabet::size)
      .def_property_readonly("space_prob", &Alphabet::space_prob)
      .def_property_readonly("letter_probs",
                             [](const Alphabet& a) {
                               return std::vector<double>(a.letter_probs().begin(), a.letter_probs().end());
                             })
      .def_property_readonly("labels",
                             [](const Alphabet& a) {
                               return std::vector<std::string>(a.labels().begin(), a.labels().end());
                             })
      .def("__len__", &Alphabet::size)
      .def("__repr__", [](const Alphabet& a) {
        return "<Alphabet n=" + std::to_string(a.size()) + " p0=" + std::to_string(a.space_prob()) + ">";
      });

  py::class_<GammaSolution>(m, "GammaSolution")
      .def_readonly("gamma", &GammaSolution::gamma)
      .def_readonly("residual", &GammaSolution::residual)
      .def_readonly("iterations", &GammaSolution::iterations);
  m.def("solve_gamma", [](const Alphabet& a, double tol) { return solve_gamma(a, tol); }, py::arg("alphabet"),
        py::arg("tol") = 1e-14);

  m.def(
      "q_tilde",
      [](const Alphabet& a, double x, bool rescaled, std::size_t budget) {
        return q_tilde_direct(weights_of(a, rescaled), x, budget);
      },
      py::arg("alphabet"), py::arg("x"), py::arg("rescaled") = false,
      py::arg("node_budget") = kDefaultNodeBudget, "Number of words with weight sum <= x.");
  m.def(
      "q_tilde_recursive",
      [](const Alphabet& a, double x, bool rescaled, std::size_t budget) {
        return q_tilde_recursive(weights_of(a, rescaled), x, budget);
      },
      py::arg("alphabet"), py::arg("x"), py::arg("rescaled") = false,
      py::arg("node_budget") = kDefaultNodeBudget);
  m.def("rank_of_probability", &rank_of_probability, py::arg("alphabet"), py::arg("f"),
        py::arg("node_budget") = kDefaultNodeBudget);

  py::class_<Level>(m, "Level")
      .def_readonly("weight", &Level::weight)
      .def_readonly("word_count", &Level::word_count)
      .def_readonly("rank_lo", &Level::rank_lo)
      .def_readonly("rank_hi", &Level::rank_hi)
      .def_readonly("log_prob", &Level::log_prob);
  m.def(
      "levels",
      [](const Alphabet& a, std::optional<Count> max_rank, std::optional<double> max_weight,
         std::size_t budget) {
        const LevelTable t = enumerate_levels(a, LevelLimit{max_rank, max_weight, budget});
        return py::make_tuple(t.levels, t.truncated);
      },
      py::arg("alphabet"), py::arg("max_rank") = py::none(), py::arg("max_weight") = py::none(),
      py::arg("node_budget") = kDefaultNodeBudget,
      "(levels, truncated): probability classes in increasing weight order.");

  py::class_<BoundCertificate>(m, "BoundCertificate")
      .def_readonly("c1", &BoundCertificate::c1)
      .def_readonly("c2", &BoundCertificate::c2)
      .def_readonly("base_inf", &BoundCertificate::base_inf)
      .def_readonly("base_sup", &BoundCertificate::base_sup)
      .def_readonly("verified_up_to", &BoundCertificate::verified_up_to)
      .def_readonly("event_count", &BoundCertificate::event_count)
      .def_readonly("holds", &BoundCertificate::holds)
      .def_readonly("min_q", &BoundCertificate::min_q)
      .def_readonly("max_q", &BoundCertificate::max_q);
  m.def(
      "certify",
      [](const Alphabet& a, double x_max, std::size_t budget) {
        return verify_bounds(rescale_weights(a, solve_gamma(a)), x_max, budget);
      },
      py::arg("alphabet"), py::arg("x_max") = 25.0, py::arg("node_budget") = kDefaultNodeBudget);

  m.def(
      "simulate",
      [](const Alphabet& a, std::uint64_t word_count, std::uint64_t seed, unsigned streams,
         unsigned threads) {
        FrequencyTable t;
        {
          py::gil_scoped_release release;
          t = generate_words(a, word_count, seed, streams, threads);
        }
        py::dict out;
        for (const auto& [word, n] : t.entries) out[py::str(render_word(word, a))] = n;
        return out;
      },
      py::arg("alphabet"), py::arg("word_count"), py::arg("seed"), py::arg("streams") = 16,
      py::arg("threads") = 1, "Word counts keyed by rendered word ('<EPS>' is the empty word).");

  py::class_<FitResult>(m, "FitResult")
      .def_readonly("intercept", &FitResult::intercept)
      .def_readonly("slope", &FitResult::slope)
      .def_readonly("r_squared", &FitResult::r_squared)
      .def_readonly("n_points", &FitResult::n_points)
      .def_readonly("r_min", &FitResult::r_min)
      .def_readonly("r_max", &FitResult::r_max);
  m.def(
      "fit",
      [](const std::vector<std::pair<std::uint64_t, double>>& points, std::uint64_t r_min,
         std::uint64_t r_max) { return ols_loglog(to_rank_frequency(points), r_min, r_max); },
      py::arg("points"), py::arg("r_min"), py::arg("r_max"),
      "Log-log OLS over (rank, freq) pairs with rank in [r_min, r_max].");
  m.def("predicted_exponent", &predicted_exponent, py::arg("alphabet"));
}
