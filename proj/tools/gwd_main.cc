// Copyright 2026 The gwd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gwd/acceptance.h"
#include "gwd/classical.h"
#include "gwd/counting.h"
#include "gwd/errors.h"
#include "gwd/montecarlo.h"
#include "gwd/oracle.h"
#include "gwd/report.h"
#include "gwd/rng.h"
#include "gwd/statevector.h"
#include "gwd/sure_success.h"
#include "gwd/tables.h"
#include "gwd/weight_decision.h"

using namespace gwd;

namespace {

enum Exit { OK = 0, BAD_PARAMETER = 1, PROMISE = 2, CHECK_FAILED = 3 };

// Seed streams, so that adding a new random stage never shifts older ones.
constexpr uint64_t ORACLE_STREAM = 1'000'000;
constexpr uint64_t TRIAL_STREAM = 2'000'000;

struct Common {
    std::string format = "csv";
    std::string output;
    uint64_t seed = 1;
    std::string verify;
};

struct Weight {
    uint64_t num;
    uint64_t den;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string text() const { return std::to_string(num) + "/" + std::to_string(den); }
};

Weight parse_weight(const std::string &s) {
    size_t slash = s.find('/');
    auto parse = [&](std::string_view part) {
        uint64_t v = 0;
        auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || end != part.data() + part.size()) {
            throw ParameterError("expected a fraction p/q, got '" + s + "'");
        }
        return v;
    };
    if (slash == std::string::npos) {
        throw ParameterError("expected a fraction p/q, got '" + s + "'");
    }
    std::string_view v(s);
    Weight w{parse(v.substr(0, slash)), parse(v.substr(slash + 1))};
    if (w.den == 0 || w.num == 0 || w.num >= w.den) {
        throw ParameterError("weight fraction " + s + " must lie strictly between 0 and 1");
    }
    return w;
}

std::vector<int> k_range(int k, int k_max) {
    std::vector<int> ks;
    if (k_max > 0) {
        for (int i = 1; i <= k_max; i++) {
            ks.push_back(i);
        }
    } else {
        ks.push_back(k);
    }
    return ks;
}

void require(bool condition, const std::string &message) {
    if (!condition) {
        throw ParameterError(message);
    }
}

uint64_t domain(unsigned n) {
    require(n >= 1 && n <= MAX_VARIABLES, "n must lie in [1, " + std::to_string(MAX_VARIABLES) + "]");
    return uint64_t{1} << n;
}

void emit(const Report &report, const Common &common) {
    std::string text;
    if (common.format == "json") {
        text = report.to_json();
    } else if (common.format == "table") {
        text = report.to_text();
    } else {
        text = report.to_csv();
    }
    if (common.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(common.output, std::ios::binary);
        if (!out) {
            throw ParameterError("cannot write " + common.output);
        }
        out << text;
    }
}

int verify_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return BAD_PARAMETER;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    VerifyResult r = verify_report(buf.str());
    if (!r.ok) {
        std::cerr << "invalid report " << path << ": " << r.message << "\n";
        return CHECK_FAILED;
    }
    std::cout << "ok: " << r.tables << " table(s), " << r.rows << " row(s)\n";
    return OK;
}

// Smaller of the two k-iteration weights as an angle fraction pair, if the
// plan is exactly that pair.
std::optional<int> comparison_k(const CountingPlan &plan) {
    if (plan.hypotheses.size() != 2) {
        return std::nullopt;
    }
    AngleFraction a = plan.hypotheses[0].angle;
    AngleFraction b = plan.hypotheses[1].angle;
    if (a.num * b.den > b.num * a.den) {
        std::swap(a, b);
    }
    // k / (4k + 2) = a  <=>  k = 2 a.num / (a.den - 4 a.num).
    if (a.den <= 4 * a.num || (2 * a.num) % (a.den - 4 * a.num) != 0) {
        return std::nullopt;
    }
    int k = static_cast<int>(2 * a.num / (a.den - 4 * a.num));
    if (AngleFraction::make(k + 1, 4 * static_cast<uint64_t>(k) + 2) != b) {
        return std::nullopt;
    }
    return k;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Grover-based weight decision experiments"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    Common common;
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json", "table"}));
    app.add_option("--output,-o", common.output, "Write the report here instead of stdout");
    app.add_option("--seed", common.seed, "Base seed for oracles and trials");
    app.add_option("--verify", common.verify, "Check that FILE is a well-formed report and exit");

    int k = 1;
    int k_max = 0;
    unsigned n = 0;
    uint64_t t = 0;
    bool t_given = false;
    uint64_t dist_trials = 1000;
    uint64_t rand_trials = 1000;
    uint64_t sure_trials = 0;
    uint64_t classical_trials = 0;
    unsigned classical_n = 20;
    std::string hex;
    std::string w_text;
    bool all = false;
    uint64_t g = 0;
    bool scaling = false;
    std::vector<int> k_list{11, 51, 101, 201};
    std::vector<double> exponents{1, 1.5, 2, 2.5};
    uint64_t P = 0;
    std::vector<std::string> weights;
    std::vector<int> criteria;

    auto *roots_cmd = app.add_subcommand("roots", "Zeros of the amplitude polynomials a_k and b_k");
    roots_cmd->add_option("--k", k, "Iteration count")->check(CLI::Range(1, 100000));
    roots_cmd->add_option("--k-max", k_max, "Emit k = 1..K")->check(CLI::Range(1, 10000));

    auto *mu_cmd = app.add_subcommand("mu", "mu_k and the promised weights");
    mu_cmd->add_option("--k-max", k_max, "Largest k")->check(CLI::Range(1, 1000000));
    mu_cmd->add_option("--n", n, "Also list round(N mu_k) and round(N (1 - mu_k))");

    auto *dist_cmd = app.add_subcommand("distinguish", "One iteration: N/4 versus 3N/4");
    dist_cmd->add_option("--n", n, "Variables")->required();
    auto *dist_t = dist_cmd->add_option("--t", t, "Oracle weight (default N/4)");
    dist_cmd->add_option("--hex", hex, "Truth table in hex instead of a random oracle");
    dist_cmd->add_option("--trials", dist_trials, "Runs")->capture_default_str();

    auto *rand_cmd = app.add_subcommand("randomized", "k standard iterations against the promised pair");
    rand_cmd->add_option("--n", n, "Variables")->required();
    rand_cmd->add_option("--k", k, "Iteration count")->check(CLI::Range(1, 100000));
    rand_cmd->add_option("--k-max", k_max, "Run k = 1..K")->check(CLI::Range(1, 10000));
    auto *rand_t = rand_cmd->add_option("--t", t, "Oracle weight (default: both promised weights)");
    rand_cmd->add_option("--trials", rand_trials, "Runs per weight")->capture_default_str();

    auto *sure_cmd = app.add_subcommand("sure-success", "Phase-modified plan that decides w against 1-w");
    sure_cmd->add_option("--n", n, "Variables")->required();
    sure_cmd->add_option("--w", w_text, "Weight fraction p/q");
    sure_cmd->add_flag("--all", all, "Every t = 1..N/2-1");
    sure_cmd->add_option("--trials", sure_trials, "Runs per weight")->capture_default_str();

    auto *classical_cmd = app.add_subcommand("classical", "Majority vote over g random queries");
    classical_cmd->add_option("--k", k, "Promise index")->check(CLI::Range(1, 1000000));
    classical_cmd->add_option("--g", g, "Queries (odd; default k)");
    classical_cmd->add_option("--trials", classical_trials, "Simulated runs")->capture_default_str();
    classical_cmd->add_option("--n", classical_n, "Variables of the simulated oracle")->capture_default_str();
    classical_cmd->add_flag("--scaling", scaling, "Tabulate E(k, nearest_odd(k^s))");
    classical_cmd->add_option("--k-list", k_list, "k values for --scaling")->delimiter(',');
    classical_cmd->add_option("--exponents", exponents, "s values for --scaling")->delimiter(',');

    auto *counting_cmd = app.add_subcommand("counting", "Quantum counting register distribution");
    counting_cmd->add_option("--t", t, "Weight");
    counting_cmd->add_option("--n", n, "Variables");
    counting_cmd->add_option("--P", P, "Register size");
    auto *plan_cmd = counting_cmd->add_subcommand("plan", "Register size and outcomes for a list of weights");
    plan_cmd->add_option("--weights", weights, "Angle fractions p/q with w = sin^2(pi p/q)")
        ->required()
        ->delimiter(',');

    auto *compare_cmd = app.add_subcommand("compare", "Oracle calls: weight decision versus counting");
    compare_cmd->add_option("--k", k, "Iteration count")->check(CLI::Range(1, 1000000));
    compare_cmd->add_option("--k-max", k_max, "Rows k = 1..K")->check(CLI::Range(1, 1000000));

    auto *selftest_cmd = app.add_subcommand("selftest", "Run the acceptance criteria");
    selftest_cmd->add_option("--criteria", criteria, "Subset of criteria")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? OK : BAD_PARAMETER;
    }

    if (!common.verify.empty()) {
        return verify_file(common.verify);
    }

    try {
        Report report(app.get_subcommands().empty() ? "" : app.get_subcommands()[0]->get_name(), common.seed);
        auto param = [&](const std::string &key, const auto &value) {
            std::ostringstream s;
            s << value;
            report.set(key, s.str());
        };

        if (app.got_subcommand(roots_cmd)) {
            param(k_max > 0 ? "k_max" : "k", k_max > 0 ? k_max : k);
            report.tables.push_back(roots_table(k_range(k, k_max)));

        } else if (app.got_subcommand(mu_cmd)) {
            if (k_max == 0) {
                k_max = 10;
            }
            param("k_max", k_max);
            uint64_t N = 0;
            if (n > 0) {
                N = domain(n);
                param("n", n);
            }
            report.tables.push_back(mu_table(k_max, N));

        } else if (app.got_subcommand(dist_cmd)) {
            uint64_t trials = dist_trials;
            uint64_t N = domain(n);
            require(N % 4 == 0, "distinguish needs n >= 2");
            t_given = dist_t->count() > 0;
            BooleanOracle oracle = hex.empty() ? make_random_oracle(n, t_given ? t : N / 4,
                                                                    derive_seed(common.seed, ORACLE_STREAM))
                                               : BooleanOracle::from_hex(n, hex);
            param("n", n);
            param("t", oracle.weight());
            param("trials", trials);
            ScheduledDecision run(oracle, PhaseSchedule::standard(1), 1, N / 4, 3 * N / 4);
            uint64_t successes = count_successes(trials, derive_seed(common.seed, TRIAL_STREAM), [&](auto &rng) {
                return run.sample(rng).correct;
            });
            // Support on both classes is impossible under either hypothesis, so
            // every run on such an oracle is flagged.
            double p_sol = run.solution_probability();
            uint64_t flagged = (p_sol > 1e-12 && p_sol < 1 - 1e-12) ? trials : 0;
            Table &tab = report.table(
                "distinguish", {"n", "true_t", "trials", "successes", "flagged", "exact_p", "solution_p"});
            tab.add({uint64_t{n}, oracle.weight(), trials, successes, flagged, run.success_probability(),
                     run.solution_probability()});

        } else if (app.got_subcommand(rand_cmd)) {
            uint64_t trials = rand_trials;
            uint64_t N = domain(n);
            t_given = rand_t->count() > 0;
            param("n", n);
            param(k_max > 0 ? "k_max" : "k", k_max > 0 ? k_max : k);
            if (t_given) {
                param("t", t);
            }
            param("trials", trials);
            Table tab{"randomized", {"n", "k", "true_t", "trials", "successes", "exact_p", "bound_p"}, {}};
            for (int kk : k_range(k, k_max)) {
                PromisePair pair = PromisePair::for_iterations(kk, N);
                std::vector<uint64_t> ts = t_given ? std::vector<uint64_t>{t}
                                                   : std::vector<uint64_t>{pair.t_small, pair.t_big};
                for (uint64_t tt : ts) {
                    uint64_t stream = static_cast<uint64_t>(kk) * (N + 1) + tt;
                    BooleanOracle oracle = make_random_oracle(n, tt, derive_seed(common.seed, ORACLE_STREAM + stream));
                    ScheduledDecision run(oracle, PhaseSchedule::standard(kk), kk, pair.t_small, pair.t_big);
                    uint64_t successes = count_successes(
                        trials, derive_seed(common.seed, TRIAL_STREAM + stream),
                        [&](auto &rng) { return run.sample(rng).correct; });
                    tab.add({uint64_t{n}, int64_t{kk}, tt, trials, successes, run.success_probability(),
                             success_lower_bound(kk, N)});
                }
            }
            report.tables.push_back(std::move(tab));

        } else if (app.got_subcommand(sure_cmd)) {
            uint64_t trials = sure_trials;
            uint64_t N = domain(n);
            require(all != !w_text.empty(), "sure-success needs exactly one of --w or --all");
            param("n", n);
            std::vector<Weight> ws;
            if (all) {
                param("all", "true");
                for (uint64_t tt = 1; 2 * tt < N; tt++) {
                    ws.push_back({tt, N});
                }
            } else {
                Weight w = parse_weight(w_text);
                param("w", w.text());
                ws.push_back(w);
            }
            param("trials", trials);
            Table tab{"sure_success",
                      {"n", "w", "k", "t_small", "t_big", "theta1", "theta2", "z_small", "z_big", "p_success_small",
                       "p_success_big", "trials", "successes_small", "successes_big"},
                      {}};
            for (const Weight &w : ws) {
                SureSuccessPlan plan = plan_sure_success(w.value());
                PlanEvaluation e = evaluate_plan(plan, plan.w_small);
                uint64_t t_small = static_cast<uint64_t>(std::llround(plan.w_small * static_cast<double>(N)));
                uint64_t t_big = N - t_small;
                uint64_t hits[2] = {0, 0};
                if (trials > 0) {
                    uint64_t i = 0;
                    for (uint64_t tt : {t_small, t_big}) {
                        uint64_t stream = w.num * 7919 + w.den * 2 + i;
                        BooleanOracle oracle =
                            make_random_oracle(n, tt, derive_seed(common.seed, ORACLE_STREAM + stream));
                        ScheduledDecision run(oracle, plan.schedule(), plan.k, t_small, t_big);
                        hits[i] = count_successes(trials, derive_seed(common.seed, TRIAL_STREAM + stream),
                                                  [&](auto &rng) { return run.sample(rng).correct; });
                        i++;
                    }
                }
                tab.add({uint64_t{n}, w.text(), int64_t{plan.k}, t_small, t_big, plan.theta1, plan.theta2,
                         e.z_small, e.z_big, e.p_success_small, e.p_success_big, trials, hits[0], hits[1]});
            }
            report.tables.push_back(std::move(tab));

        } else if (app.got_subcommand(classical_cmd)) {
            uint64_t trials = classical_trials;
            n = classical_n;
            if (scaling) {
                std::string ks;
                for (int kk : k_list) {
                    ks += (ks.empty() ? "" : ",") + std::to_string(kk);
                }
                std::string ss;
                for (double s : exponents) {
                    ss += (ss.empty() ? "" : ",") + format_real(s);
                }
                param("k_list", ks);
                param("exponents", ss);
                Table tab{"scaling", {"k", "s", "g", "E"}, {}};
                for (const ScalingRow &r : scaling_table(k_list, exponents)) {
                    tab.add({int64_t{r.k}, r.s, r.g, r.E});
                }
                report.tables.push_back(std::move(tab));
            } else {
                if (g == 0) {
                    g = static_cast<uint64_t>(k);
                }
                require(g % 2 == 1, "g must be odd");
                param("k", k);
                param("g", g);
                param("trials", trials);
                MajorityExperiment ex = MajorityExperiment::exact(k, g);
                Cell empirical = std::string("NA");
                if (trials > 0) {
                    uint64_t N = domain(n);
                    param("n", n);
                    PromisePair pair = PromisePair::for_iterations(k, N);
                    BooleanOracle oracle =
                        make_random_oracle(n, pair.t_small, derive_seed(common.seed, ORACLE_STREAM));
                    uint64_t errors = count_successes(trials, derive_seed(common.seed, TRIAL_STREAM), [&](auto &rng) {
                        return majority_vote_trial(oracle, g, rng, pair) != pair.t_small;
                    });
                    empirical = static_cast<double>(errors) / static_cast<double>(trials);
                }
                Table tab{"classical", {"k", "g", "p", "E_exact", "E_empirical", "trials"}, {}};
                tab.add({int64_t{k}, g, ex.p, ex.E, empirical, trials});
                report.tables.push_back(std::move(tab));
            }

        } else if (app.got_subcommand(counting_cmd)) {
            if (counting_cmd->got_subcommand(plan_cmd)) {
                report.set("command", "counting plan");
                std::vector<AngleFraction> angles;
                std::string listed;
                for (const std::string &s : weights) {
                    angles.push_back(AngleFraction::parse(s));
                    listed += (listed.empty() ? "" : ",") + s;
                }
                param("weights", listed);
                CountingPlan plan = plan_n_weights(angles);
                report.tables.push_back(plan_table(plan));
                Table cost{"cost", {"method", "oracle_calls"}, {}};
                cost.add({std::string("counting"), plan.total_oracle_calls});
                if (auto kk = comparison_k(plan)) {
                    cost.add({std::string("weight_decision"), static_cast<uint64_t>(*kk) + 1});
                    cost.add({std::string("weight_decision_phase_only"), static_cast<uint64_t>(*kk)});
                }
                report.tables.push_back(std::move(cost));
            } else {
                require(n > 0 && P > 0, "counting needs --t, --n and --P");
                uint64_t N = domain(n);
                require(t <= N, "t must lie in [0, N]");
                param("t", t);
                param("n", n);
                param("P", P);
                report.tables.push_back(counting_table(t, N, P));
            }

        } else if (app.got_subcommand(compare_cmd)) {
            param(k_max > 0 ? "k_max" : "k", k_max > 0 ? k_max : k);
            report.tables.push_back(cost_table(k_range(k, k_max)));

        } else if (app.got_subcommand(selftest_cmd)) {
            int failed = 0;
            for (const CriterionResult &r : run_acceptance(criteria)) {
                std::cout << format_result(r) << std::endl;
                failed += !r.passed;
            }
            return failed == 0 ? OK : CHECK_FAILED;

        } else {
            std::cout << app.help();
            return OK;
        }

        emit(report, common);
        return OK;
    } catch (const ParameterError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return BAD_PARAMETER;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return BAD_PARAMETER;
    } catch (const PromiseViolation &e) {
        std::cerr << "promise violated: " << e.what() << "\n";
        return PROMISE;
    } catch (const FeasibilityError &e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return PROMISE;
    } catch (const VerificationError &e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return CHECK_FAILED;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return CHECK_FAILED;
    }
}
