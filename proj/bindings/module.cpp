#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "aucprobe/auc.hpp"
#include "aucprobe/construction.hpp"
#include "aucprobe/errors.hpp"
#include "aucprobe/oracle.hpp"
#include "aucprobe/posterior.hpp"
#include "aucprobe/rank_certainty.hpp"
#include "aucprobe/rational.hpp"
#include "aucprobe/simulate.hpp"

namespace py = pybind11;
using namespace aucprobe;

namespace {

RationalScore score_from_str(const std::string& text) {
    auto parsed = RationalScore::parse(text);
    if (!parsed) {
        throw std::invalid_argument("expected an exact fraction like '3/4', got: " + text);
    }
    return *parsed;
}

py::int_ count_to_int(const ExactCount& count) {
    return py::int_(py::str(count.str()));
}

std::optional<ClassCounts> make_counts(std::optional<std::size_t> n0,
                                       std::optional<std::size_t> n1) {
    if (n0.has_value() != n1.has_value()) {
        throw std::invalid_argument("n0 and n1 must be given together");
    }
    if (!n0) return std::nullopt;
    return ClassCounts{*n0, *n1};
}

std::vector<int> labels_to_ints(const Labeling& labeling) {
    return std::vector<int>(labeling.labels().begin(), labeling.labels().end());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact AUC scoring, a simulated contest oracle, and the label-leakage "
              "attacks a reported AUC makes possible.";

    py::register_exception<UndefinedAucError>(m, "UndefinedAucError");
    py::register_exception<TiedGuessesError>(m, "TiedGuessesError");
    py::register_exception<BudgetExhaustedError>(m, "BudgetExhaustedError");
    py::register_exception<NoSatisfyingLabelingError>(m, "NoSatisfyingLabelingError");
    py::register_exception<CountOverflowError>(m, "CountOverflowError");

    py::class_<RationalScore>(m, "RationalScore")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("numerator"),
             py::arg("denominator"))
        .def_static("parse", &score_from_str, py::arg("text"))
        .def_property_readonly("numerator", &RationalScore::numerator)
        .def_property_readonly("denominator", &RationalScore::denominator)
        .def("reduced", &RationalScore::reduced)
        .def("value", &RationalScore::value)
        .def("__float__", &RationalScore::value)
        .def("__str__", &RationalScore::str)
        .def("__repr__",
             [](const RationalScore& s) { return "RationalScore(" + s.str() + ")"; })
        .def("__eq__", &RationalScore::operator==, py::is_operator())
        .def("__lt__", &RationalScore::operator<, py::is_operator());

    m.def(
        "auc_exact",
        [](const std::vector<std::uint8_t>& labels, const std::vector<double>& guesses) {
            return auc_exact(Labeling(labels), Guesses(guesses));
        },
        py::arg("labels"), py::arg("guesses"));
    m.def(
        "auc_with_ties",
        [](const std::vector<std::uint8_t>& labels, const std::vector<double>& guesses) {
            return auc_with_ties(Labeling(labels), Guesses(guesses));
        },
        py::arg("labels"), py::arg("guesses"));
    m.def(
        "rank_order",
        [](const std::vector<double>& guesses) { return rank_order(Guesses(guesses)); },
        py::arg("guesses"));

    py::class_<CertaintyResult>(m, "CertaintyResult")
        .def_readonly("k_neg", &CertaintyResult::k_neg)
        .def_readonly("k_pos", &CertaintyResult::k_pos)
        .def_readonly("neg_indices", &CertaintyResult::neg_indices)
        .def_readonly("pos_indices", &CertaintyResult::pos_indices);

    m.def(
        "deduce_certain_labels",
        [](const RationalScore& c, std::size_t n0, std::size_t n1,
           const std::vector<double>& guesses) {
            return deduce_certain_labels(c, n0, n1, Guesses(guesses));
        },
        py::arg("c"), py::arg("n0"), py::arg("n1"), py::arg("guesses"));
    m.def(
        "perfect_auc_shortcut",
        [](const RationalScore& c, std::size_t n0, std::size_t n1,
           const std::vector<double>& guesses) -> std::optional<std::vector<int>> {
            auto labeling = perfect_auc_shortcut(c, n0, n1, Guesses(guesses));
            if (!labeling) return std::nullopt;
            return labels_to_ints(*labeling);
        },
        py::arg("c"), py::arg("n0"), py::arg("n1"), py::arg("guesses"));

    py::class_<PosteriorResult>(m, "PosteriorResult")
        .def_readonly("posterior", &PosteriorResult::posterior)
        .def_property_readonly(
            "satisfying_count",
            [](const PosteriorResult& r) { return count_to_int(r.satisfying_count); })
        .def_readonly("total_weight", &PosteriorResult::total_weight)
        .def_property_readonly("method", [](const PosteriorResult& r) {
            return r.method == PosteriorMethod::dp ? "dp" : "brute_force";
        });

    m.def(
        "posterior_brute_force",
        [](const std::vector<double>& probs, const RationalScore& c,
           std::optional<std::size_t> n0, std::optional<std::size_t> n1) {
            return posterior_brute_force(ProbGuesses(probs), c, make_counts(n0, n1));
        },
        py::arg("probs"), py::arg("c"), py::arg("n0") = std::nullopt,
        py::arg("n1") = std::nullopt);
    m.def(
        "posterior_dp",
        [](const std::vector<double>& probs, const RationalScore& c,
           std::optional<std::size_t> n0, std::optional<std::size_t> n1) {
            return posterior_dp(ProbGuesses(probs), c, make_counts(n0, n1));
        },
        py::arg("probs"), py::arg("c"), py::arg("n0") = std::nullopt,
        py::arg("n1") = std::nullopt);
    m.def(
        "count_satisfying",
        [](std::size_t n, const RationalScore& c) { return count_to_int(count_satisfying(n, c)); },
        py::arg("n"), py::arg("c"));

    m.def(
        "construct_labeling",
        [](std::uint64_t p, std::uint64_t q,
           std::optional<std::vector<std::size_t>> half_choice) {
            return labels_to_ints(construct_labeling(p, q, std::move(half_choice)));
        },
        py::arg("p"), py::arg("q"), py::arg("half_choice") = std::nullopt);
    m.def(
        "enumerate_variants",
        [](std::uint64_t p, std::uint64_t q, std::optional<std::uint64_t> limit) {
            std::vector<std::vector<int>> out;
            for (const auto& labeling : enumerate_variants(p, q, limit)) {
                out.push_back(labels_to_ints(labeling));
            }
            return out;
        },
        py::arg("p"), py::arg("q"), py::arg("limit") = std::nullopt);
    m.def(
        "variant_count",
        [](std::uint64_t p, std::uint64_t q) {
            return count_to_int(VariantEnumerator(p, q).total());
        },
        py::arg("p"), py::arg("q"));
    m.def("lower_bound", &lower_bound, py::arg("c"), py::arg("n"));
    m.def("lemma_ratio_check", &lemma_ratio_check, py::arg("a"), py::arg("b"), py::arg("c"));

    py::class_<OracleResponse>(m, "OracleResponse")
        .def_readonly("score_float", &OracleResponse::score_float)
        .def_readonly("score_fraction", &OracleResponse::score_fraction)
        .def_readonly("queries_remaining", &OracleResponse::queries_remaining);

    py::class_<Oracle>(m, "Oracle")
        .def(py::init([](const std::vector<std::uint8_t>& labels,
                         std::optional<std::uint64_t> budget, double noise_stddev,
                         std::optional<unsigned> round_decimals, bool report_exact_fraction,
                         std::uint64_t seed) {
                 OracleConfig config;
                 config.budget = budget;
                 config.noise_stddev = noise_stddev;
                 config.round_decimals = round_decimals;
                 config.report_exact_fraction = report_exact_fraction;
                 return Oracle(Labeling(labels), config, seed);
             }),
             py::arg("labels"), py::arg("budget") = std::nullopt,
             py::arg("noise_stddev") = 0.0, py::arg("round_decimals") = std::nullopt,
             py::arg("report_exact_fraction") = true, py::arg("seed") = 0)
        .def("query",
             [](Oracle& oracle, const std::vector<double>& guesses) {
                 return oracle.query(Guesses(guesses));
             })
        .def_property_readonly("queries_remaining", &Oracle::queries_remaining);

    py::class_<SimRunRecord>(m, "SimRunRecord")
        .def_readonly("m", &SimRunRecord::m)
        .def_readonly("k", &SimRunRecord::k)
        .def_readonly("run", &SimRunRecord::run)
        .def_readonly("initial_auc", &SimRunRecord::initial_auc)
        .def_readonly("post_auc", &SimRunRecord::post_auc)
        .def_readonly("delta", &SimRunRecord::delta)
        .def_property_readonly(
            "satisfying_count",
            [](const SimRunRecord& r) { return count_to_int(r.satisfying_count); })
        .def_readonly("degenerate", &SimRunRecord::degenerate);

    py::class_<BinStat>(m, "BinStat")
        .def_readonly("lo", &BinStat::lo)
        .def_readonly("hi", &BinStat::hi)
        .def_readonly("count", &BinStat::count)
        .def_readonly("mean_delta", &BinStat::mean_delta)
        .def_readonly("stderr_delta", &BinStat::stderr_delta);

    auto make_config = [](std::size_t n_test, std::vector<std::size_t> m_values,
                          std::vector<std::size_t> k_values, std::size_t runs_per_cell,
                          double l2_reg, std::uint64_t seed) {
        SimConfig config;
        config.n_test = n_test;
        if (!m_values.empty()) config.m_values = std::move(m_values);
        if (!k_values.empty()) config.k_values = std::move(k_values);
        config.runs_per_cell = runs_per_cell;
        config.l2_reg = l2_reg;
        config.seed = seed;
        config.validate();
        return config;
    };

    m.def(
        "run_attack2_trial",
        [make_config](std::size_t m_dim, std::size_t k, std::size_t run, std::size_t n_test,
                      double l2_reg, std::uint64_t seed) {
            auto config = make_config(n_test, {m_dim}, {k}, run + 1, l2_reg, seed);
            return run_attack2_trial(m_dim, k, run, config);
        },
        py::arg("m"), py::arg("k"), py::arg("run") = 0, py::arg("n_test") = 16,
        py::arg("l2_reg") = 1.0, py::arg("seed") = 0);
    m.def(
        "run_sweep",
        [make_config](std::vector<std::size_t> m_values, std::vector<std::size_t> k_values,
                      std::size_t runs_per_cell, std::size_t n_test, double l2_reg,
                      std::uint64_t seed) {
            return run_sweep(
                make_config(n_test, std::move(m_values), std::move(k_values), runs_per_cell,
                            l2_reg, seed));
        },
        py::arg("m_values") = std::vector<std::size_t>{}, py::arg("k_values") = std::vector<std::size_t>{},
        py::arg("runs_per_cell") = 50, py::arg("n_test") = 16, py::arg("l2_reg") = 1.0,
        py::arg("seed") = 0);
    m.def(
        "aggregate",
        [](const std::vector<SimRunRecord>& records, std::optional<std::vector<double>> edges) {
            return aggregate(records, edges ? *edges : SimConfig::default_bin_edges());
        },
        py::arg("records"), py::arg("edges") = std::nullopt);
    m.def("records_to_csv", &records_to_csv, py::arg("records"));
    m.def("jitter_for_resubmission", &jitter_for_resubmission, py::arg("posterior"));
}
