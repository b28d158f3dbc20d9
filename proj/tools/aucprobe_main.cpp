// aucprobe: simulate an AUC-reporting contest oracle and probe it.
//
// Exit codes: 0 success, 1 unexpected error, 2 bad arguments or config,
// 3 file/schema error, 4 undefined AUC, 5 no satisfying labeling,
// 6 oracle budget exhausted, 7 tied guesses.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aucprobe/auc.hpp"
#include "aucprobe/construction.hpp"
#include "aucprobe/dataset.hpp"
#include "aucprobe/errors.hpp"
#include "aucprobe/format.hpp"
#include "aucprobe/oracle.hpp"
#include "aucprobe/posterior.hpp"
#include "aucprobe/rank_certainty.hpp"
#include "aucprobe/rational.hpp"
#include "aucprobe/simulate.hpp"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSchema = 3;
constexpr int kExitUndefinedAuc = 4;
constexpr int kExitNoSatisfier = 5;
constexpr int kExitBudget = 6;
constexpr int kExitTiedGuesses = 7;

struct CliError : std::runtime_error {
    CliError(std::string message, int code) : std::runtime_error(std::move(message)), code(code) {}
    int code;
};

// Scores must arrive as exact fractions where exactness matters; decimal
// notation is refused outright rather than silently approximated.
aucprobe::RationalScore parse_exact_auc(const std::string& text) {
    auto parsed = aucprobe::RationalScore::parse(text);
    if (!parsed) {
        throw CliError("--auc must be an exact fraction like 197/200 (floats carry no "
                       "certainty; a rounded score is not the true AUC)",
                       kExitUsage);
    }
    return *parsed;
}

std::string join_doubles(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += " ";
        out += aucprobe::format_double(values[i]);
    }
    return out;
}

std::string join_indices(const std::vector<std::size_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += " ";
        out += std::to_string(values[i]);
    }
    return out;
}

std::string join_labels(const aucprobe::Labeling& labeling) {
    std::string out;
    for (std::size_t i = 0; i < labeling.size(); ++i) {
        if (i > 0) out += " ";
        out += labeling.labels()[i] ? "1" : "0";
    }
    return out;
}

aucprobe::DatasetFile load_dataset(const std::string& path) {
    return aucprobe::DatasetFile::load(path);
}

struct SimulateArgs {
    std::string config_path;
    std::optional<std::size_t> n_test;
    std::vector<std::size_t> m_values;
    std::vector<std::size_t> k_values;
    std::optional<std::size_t> runs;
    std::optional<double> l2_reg;
    std::optional<std::uint64_t> seed;
    std::vector<double> bin_edges;
    std::string out_csv;
    std::string curve_json;
};

aucprobe::SimConfig build_sim_config(const SimulateArgs& args) {
    aucprobe::SimConfig config;
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in) throw aucprobe::SchemaError("cannot open config file: " + args.config_path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw aucprobe::SchemaError(std::string("invalid config JSON: ") + e.what());
        }
        if (!j.is_object() || !j.contains("version") || j["version"] != 1) {
            throw aucprobe::SchemaError("config must declare \"version\": 1");
        }
        try {
            if (j.contains("n_test")) config.n_test = j["n_test"].get<std::size_t>();
            if (j.contains("m_values")) config.m_values = j["m_values"].get<std::vector<std::size_t>>();
            if (j.contains("k_values")) config.k_values = j["k_values"].get<std::vector<std::size_t>>();
            if (j.contains("runs_per_cell")) config.runs_per_cell = j["runs_per_cell"].get<std::size_t>();
            if (j.contains("l2_reg")) config.l2_reg = j["l2_reg"].get<double>();
            if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
            if (j.contains("bin_edges")) config.bin_edges = j["bin_edges"].get<std::vector<double>>();
        } catch (const nlohmann::json::exception& e) {
            throw aucprobe::SchemaError(std::string("bad config field: ") + e.what());
        }
    }
    if (args.n_test) config.n_test = *args.n_test;
    if (!args.m_values.empty()) config.m_values = args.m_values;
    if (!args.k_values.empty()) config.k_values = args.k_values;
    if (args.runs) config.runs_per_cell = *args.runs;
    if (args.l2_reg) config.l2_reg = *args.l2_reg;
    if (args.seed) config.seed = *args.seed;
    if (!args.bin_edges.empty()) config.bin_edges = args.bin_edges;
    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        throw CliError(e.what(), kExitUsage);
    }
    return config;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw aucprobe::SchemaError("cannot write file: " + path);
    out << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Contest AUC oracle simulator and probing toolkit"};
    app.require_subcommand(1);

    // --- auc ---
    std::string auc_dataset;
    bool auc_ties = false;
    auto* cmd_auc = app.add_subcommand("auc", "Exact AUC of guesses against labels");
    cmd_auc->add_option("dataset", auc_dataset, "dataset JSON with labels and guesses")->required();
    cmd_auc->add_flag("--ties", auc_ties, "tie-aware scoring (ties count one half)");

    // --- attack1 ---
    std::string a1_auc;
    std::size_t a1_n0 = 0, a1_n1 = 0;
    std::string a1_dataset;
    auto* cmd_attack1 =
        app.add_subcommand("attack1", "Deduce extreme-ranked labels certain from an exact AUC");
    cmd_attack1->add_option("--auc", a1_auc, "exact AUC as p/q")->required();
    cmd_attack1->add_option("--n0", a1_n0, "number of negative examples")->required();
    cmd_attack1->add_option("--n1", a1_n1, "number of positive examples")->required();
    cmd_attack1->add_option("dataset", a1_dataset, "optional dataset JSON with guesses");

    // --- attack2 ---
    std::string a2_dataset;
    std::string a2_auc;
    std::string a2_method = "dp";
    std::optional<std::size_t> a2_n0, a2_n1;
    auto* cmd_attack2 =
        app.add_subcommand("attack2", "Posterior over labels from one exact AUC report");
    cmd_attack2->add_option("dataset", a2_dataset, "dataset JSON with probs")->required();
    cmd_attack2->add_option("--auc", a2_auc, "exact AUC as p/q")->required();
    cmd_attack2->add_option("--method", a2_method, "bf or dp")
        ->check(CLI::IsMember({"bf", "dp"}));
    cmd_attack2->add_option("--n0", a2_n0, "restrict to known negative count");
    cmd_attack2->add_option("--n1", a2_n1, "restrict to known positive count");

    // --- construct ---
    std::uint64_t co_p = 0, co_q = 0;
    std::optional<std::uint64_t> co_variants;
    bool co_count = false, co_bound = false;
    std::string co_emit;
    auto* cmd_construct =
        app.add_subcommand("construct", "Labelings of size 4q with AUC exactly p/q");
    cmd_construct->add_option("--p", co_p, "numerator")->required();
    cmd_construct->add_option("--q", co_q, "denominator")->required();
    cmd_construct->add_option("--variants", co_variants, "emit the first N symmetric variants");
    cmd_construct->add_flag("--count", co_count, "print the variant count");
    cmd_construct->add_flag("--bound", co_bound, "print the exponential lower bound");
    cmd_construct->add_option("--emit-dataset", co_emit,
                              "write the default labeling as a dataset JSON");

    // --- simulate ---
    SimulateArgs sim;
    auto* cmd_simulate = app.add_subcommand("simulate", "Single-query posterior-refinement sweep");
    cmd_simulate->add_option("--config", sim.config_path, "config JSON path");
    cmd_simulate->add_option("--n-test", sim.n_test, "test set size");
    cmd_simulate->add_option("--m", sim.m_values, "feature dimensions to sweep");
    cmd_simulate->add_option("--k", sim.k_values, "training set sizes to sweep");
    cmd_simulate->add_option("--runs", sim.runs, "runs per (m, k) cell");
    cmd_simulate->add_option("--l2", sim.l2_reg, "L2 regularization strength");
    cmd_simulate->add_option("--seed", sim.seed, "master seed");
    cmd_simulate->add_option("--bins", sim.bin_edges, "bin edges for the gain curve");
    cmd_simulate->add_option("--out", sim.out_csv, "write per-run records CSV here");
    cmd_simulate->add_option("--curve", sim.curve_json, "write binned gain curve JSON here");

    // --- oracle ---
    std::string or_labels;
    std::vector<std::string> or_queries;
    std::optional<std::uint64_t> or_budget;
    double or_noise = 0.0;
    std::optional<unsigned> or_round;
    std::uint64_t or_seed = 0;
    bool or_no_exact = false;
    auto* cmd_oracle = app.add_subcommand("oracle", "Answer AUC queries against hidden labels");
    cmd_oracle->add_option("--labels", or_labels, "dataset JSON with hidden labels")->required();
    cmd_oracle->add_option("--budget", or_budget, "maximum number of queries");
    cmd_oracle->add_option("--noise", or_noise, "stddev of Gaussian noise on the float score");
    cmd_oracle->add_option("--round-decimals", or_round, "round-half-up to this many decimals");
    cmd_oracle->add_option("--seed", or_seed, "noise stream seed");
    cmd_oracle->add_flag("--no-exact", or_no_exact, "suppress the exact fraction in responses");
    cmd_oracle->add_option("queries", or_queries, "dataset JSON files with guesses")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_auc->parsed()) {
            const auto data = load_dataset(auc_dataset);
            if (!data.labels || !data.guesses) {
                throw aucprobe::SchemaError("auc needs a dataset with labels and guesses");
            }
            const aucprobe::Labeling labels(*data.labels);
            const aucprobe::Guesses guesses(*data.guesses);
            const auto score = auc_ties ? aucprobe::auc_with_ties(labels, guesses)
                                        : aucprobe::auc_exact(labels, guesses);
            std::cout << score.str() << " " << aucprobe::format_double(score.value()) << "\n";
        } else if (cmd_attack1->parsed()) {
            const auto c = parse_exact_auc(a1_auc);
            std::optional<aucprobe::DatasetFile> data;
            std::vector<double> guess_values;
            if (!a1_dataset.empty()) {
                data = load_dataset(a1_dataset);
                if (!data->guesses) {
                    throw aucprobe::SchemaError("attack1 dataset needs guesses");
                }
                guess_values = *data->guesses;
            } else {
                // Rank order is all that matters; identity guesses stand in
                // when no dataset is supplied.
                guess_values.resize(a1_n0 + a1_n1);
                for (std::size_t i = 0; i < guess_values.size(); ++i) {
                    guess_values[i] = static_cast<double>(i + 1);
                }
            }
            const auto result = aucprobe::deduce_certain_labels(c, a1_n0, a1_n1,
                                                                aucprobe::Guesses(guess_values));
            std::cout << "k_neg=" << result.k_neg << " k_pos=" << result.k_pos << "\n";
            if (data) {
                std::cout << "neg_indices=" << join_indices(result.neg_indices) << "\n";
                std::cout << "pos_indices=" << join_indices(result.pos_indices) << "\n";
            }
        } else if (cmd_attack2->parsed()) {
            const auto c = parse_exact_auc(a2_auc);
            const auto data = load_dataset(a2_dataset);
            if (!data.probs) throw aucprobe::SchemaError("attack2 dataset needs probs");
            if (a2_n0.has_value() != a2_n1.has_value()) {
                throw CliError("--n0 and --n1 must be given together", kExitUsage);
            }
            std::optional<aucprobe::ClassCounts> counts;
            if (a2_n0) counts = aucprobe::ClassCounts{*a2_n0, *a2_n1};
            const aucprobe::ProbGuesses probs(*data.probs);
            const auto result = a2_method == "bf"
                                    ? aucprobe::posterior_brute_force(probs, c, counts)
                                    : aucprobe::posterior_dp(probs, c, counts);
            std::cout << join_doubles(result.posterior) << "\n";
            std::cout << "count=" << result.satisfying_count.str() << "\n";
        } else if (cmd_construct->parsed()) {
            if (co_count || co_bound) {
                std::string line;
                if (co_count) {
                    aucprobe::VariantEnumerator stream(co_p, co_q);
                    line += "variants=" + stream.total().str();
                }
                if (co_bound) {
                    if (!line.empty()) line += " ";
                    const auto c = aucprobe::RationalScore(co_p, co_q);
                    line += "bound=" +
                            aucprobe::format_double(aucprobe::lower_bound(c, 4 * co_q));
                }
                std::cout << line << "\n";
            }
            if (co_variants) {
                aucprobe::VariantEnumerator stream(co_p, co_q);
                for (std::uint64_t i = 0; i < *co_variants; ++i) {
                    auto labeling = stream.next();
                    if (!labeling) break;
                    std::cout << join_labels(*labeling) << "\n";
                }
            } else if (!co_count && !co_bound) {
                std::cout << join_labels(aucprobe::construct_labeling(co_p, co_q)) << "\n";
            }
            if (!co_emit.empty()) {
                const auto labeling = aucprobe::construct_labeling(co_p, co_q);
                aucprobe::DatasetFile out;
                out.labels = labeling.labels();
                std::vector<double> guesses(labeling.size());
                for (std::size_t i = 0; i < guesses.size(); ++i) {
                    guesses[i] = static_cast<double>(i + 1);
                }
                out.guesses = std::move(guesses);
                out.save(co_emit);
            }
        } else if (cmd_simulate->parsed()) {
            const auto config = build_sim_config(sim);
            const auto records = aucprobe::run_sweep(config);
            const auto curve = aucprobe::aggregate(records, config.bin_edges);
            if (!sim.out_csv.empty()) {
                write_file(sim.out_csv, aucprobe::records_to_csv(records));
            }
            if (!sim.curve_json.empty()) {
                write_file(sim.curve_json, aucprobe::curve_to_json(curve));
            }
            std::cout << "records=" << records.size() << "\n";
            for (const auto& bin : curve) {
                if (bin.count == 0) continue;
                std::cout << "bin " << aucprobe::format_double(bin.lo) << " "
                          << aucprobe::format_double(bin.hi) << " count=" << bin.count
                          << " mean_delta=" << aucprobe::format_double(bin.mean_delta) << "\n";
            }
        } else if (cmd_oracle->parsed()) {
            const auto hidden = load_dataset(or_labels);
            if (!hidden.labels) throw aucprobe::SchemaError("oracle needs a dataset with labels");
            aucprobe::OracleConfig config;
            config.budget = or_budget;
            config.noise_stddev = or_noise;
            config.round_decimals = or_round;
            config.report_exact_fraction = !or_no_exact && or_noise == 0.0 && !or_round;
            aucprobe::Oracle oracle(aucprobe::Labeling(*hidden.labels), config, or_seed);
            for (const auto& path : or_queries) {
                const auto query = load_dataset(path);
                if (!query.guesses) {
                    throw aucprobe::SchemaError("query dataset needs guesses: " + path);
                }
                const auto response = oracle.query(aucprobe::Guesses(*query.guesses));
                if (response.score_fraction) {
                    std::cout << response.score_fraction->str() << " "
                              << aucprobe::format_double(response.score_float) << "\n";
                } else {
                    std::cout << aucprobe::format_double(response.score_float) << "\n";
                }
            }
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const aucprobe::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const aucprobe::UndefinedAucError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUndefinedAuc;
    } catch (const aucprobe::NoSatisfyingLabelingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoSatisfier;
    } catch (const aucprobe::BudgetExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const aucprobe::TiedGuessesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTiedGuesses;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
