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

#include "gwd/acceptance.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "gwd/classical.h"
#include "gwd/counting.h"
#include "gwd/oracle.h"
#include "gwd/rng.h"
#include "gwd/statevector.h"
#include "gwd/subspace.h"
#include "gwd/sure_success.h"
#include "gwd/tables.h"
#include "gwd/weight_decision.h"

namespace gwd {

using std::numbers::pi;

namespace {

// Reference six-decimal roots of a_k and b_k, k = 1..10.
const std::vector<std::vector<double>> REFERENCE_A = {
    {0.250000},
    {0.095492, 0.654508},
    {0.049516, 0.388740, 0.811745},
    {0.030154, 0.250000, 0.586824, 0.883022},
    {0.020254, 0.172570, 0.428843, 0.707708, 0.920627},
    {0.014529, 0.125745, 0.322698, 0.560268, 0.784032, 0.942728},
    {0.010926, 0.095492, 0.250000, 0.447736, 0.654508, 0.834565, 0.956773},
    {0.008513, 0.074891, 0.198683, 0.363169, 0.546134, 0.722869, 0.869504, 0.966236},
    {0.006819, 0.060263, 0.161359, 0.299152, 0.458710, 0.622743, 0.773474, 0.894570, 0.972909},
    {0.005585, 0.049516, 0.133474, 0.250000, 0.388740, 0.537365, 0.682671, 0.811745, 0.913119, 0.977786},
};
const std::vector<std::vector<double>> REFERENCE_B = {
    {0.750000},
    {0.345492, 0.904508},
    {0.188255, 0.611260, 0.950484},
    {0.116978, 0.413176, 0.750000, 0.969846},
    {0.079373, 0.292292, 0.571157, 0.827430, 0.979746},
    {0.057272, 0.215968, 0.439732, 0.677302, 0.874255, 0.985471},
    {0.043227, 0.165435, 0.345492, 0.552264, 0.750000, 0.904508, 0.989074},
    {0.033764, 0.130496, 0.277131, 0.453866, 0.636831, 0.801317, 0.925109, 0.991487},
    {0.027091, 0.105430, 0.226526, 0.377257, 0.541290, 0.700848, 0.838641, 0.939737, 0.993181},
    {0.022214, 0.086881, 0.188255, 0.317329, 0.462635, 0.611260, 0.750000, 0.866526, 0.950484, 0.994415},
};

std::string fmt(const char *pattern, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

struct Check {
    bool passed;
    std::string detail;
};

Check table_one() {
    std::vector<int> ks;
    for (int k = 1; k <= 10; k++) {
        ks.push_back(k);
    }
    auto start = std::chrono::steady_clock::now();
    Table table = roots_table(ks);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double worst = 0;
    size_t compared = 0;
    for (const auto &row : table.rows) {
        int k = static_cast<int>(std::get<int64_t>(row[0]));
        const auto &reference = std::get<std::string>(row[1]) == "a" ? REFERENCE_A : REFERENCE_B;
        size_t index = std::get<uint64_t>(row[2]);
        // Compare what the report prints, not the in-memory double.
        double emitted = std::stod(format_real(std::get<double>(row[3])));
        worst = std::max(worst, std::abs(emitted - reference[k - 1][index - 1]));
        compared++;
    }
    bool ok = compared == 110 && worst <= 5e-7 && elapsed < 1.0;
    return {ok, fmt("%.0f values, max |err| = %.2e, build %.3f s", compared, worst, elapsed)};
}

Check backend_equivalence() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20260415);
    double worst = 0;
    for (int c = 0; c < 200; c++) {
        unsigned n = 1 + static_cast<unsigned>(uniform_below(rng, 10));
        uint64_t N = uint64_t{1} << n;
        uint64_t t = 1 + uniform_below(rng, N - 1);
        PhaseSchedule schedule;
        uint64_t steps = uniform_below(rng, 51);
        for (uint64_t s = 0; s < steps; s++) {
            double theta = (2 * uniform_unit(rng) - 1) * pi;
            double phi = (2 * uniform_unit(rng) - 1) * pi;
            schedule.steps.push_back({theta, phi});
        }
        BooleanOracle oracle = make_random_oracle(n, t, rng());
        std::vector<double> full = measure_distribution(run_full_schedule(oracle, schedule));
        std::vector<double> reduced = induced_distribution(run_schedule(t, N, schedule), oracle);
        worst = std::max(worst, total_variation_distance(full, reduced));
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {worst < 1e-9 && elapsed < 30, fmt("200 cases, max TV = %.2e, %.2f s", worst, elapsed)};
}

Check quarter_exactness() {
    double worst = 1;
    int runs = 0;
    for (unsigned n = 2; n <= 8; n++) {
        uint64_t N = uint64_t{1} << n;
        for (uint64_t t : {N / 4, 3 * N / 4}) {
            for (uint64_t seed = 1; seed <= 3; seed++) {
                BooleanOracle oracle = make_random_oracle(n, t, derive_seed(seed, n * 1000 + t));
                ScheduledDecision run(oracle, PhaseSchedule::standard(1), 1, N / 4, 3 * N / 4);
                worst = std::min(worst, run.success_probability());
                runs++;
            }
        }
    }
    return {worst >= 1 - 1e-12, fmt("%.0f oracles, min success = 1 - %.2e", runs, 1 - worst)};
}

Check success_bound() {
    auto start = std::chrono::steady_clock::now();
    double margin = INFINITY;
    for (unsigned n : {10u, 12u, 14u, 16u}) {
        uint64_t N = uint64_t{1} << n;
        for (int k = 1; k <= 10; k++) {
            PromisePair pair = PromisePair::for_iterations(k, N);
            double bound = success_lower_bound(k, N);
            for (uint64_t t : {pair.t_small, pair.t_big}) {
                margin = std::min(margin, exact_success_probability(k, t, N) - bound);
            }
        }
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {margin >= 0 && elapsed < 5, fmt("min(success - bound) = %.3e, %.3f s", margin, elapsed)};
}

Check sure_success() {
    auto start = std::chrono::steady_clock::now();
    double worst = 1;
    int plans = 0;
    int failures = 0;
    std::string first_failure;
    for (unsigned n = 4; n <= 10; n++) {
        uint64_t N = uint64_t{1} << n;
        for (uint64_t t = 1; 2 * t < N; t++) {
            double w = static_cast<double>(t) / static_cast<double>(N);
            try {
                SureSuccessPlan plan = plan_sure_success(w);
                PlanEvaluation e = evaluate_plan(plan, w);
                double p = std::min(e.p_success_small, e.p_success_big);
                worst = std::min(worst, p);
                if (p < 1 - 1e-9) {
                    failures++;
                }
            } catch (const std::exception &ex) {
                if (first_failure.empty()) {
                    first_failure = "n=" + std::to_string(n) + " t=" + std::to_string(t) + ": " + ex.what();
                }
                failures++;
                worst = 0;
            }
            plans++;
        }
    }
    // At w = mu_k ordinary Grover already decides exactly, so both modified
    // phases must collapse to pi.
    double boundary = 0;
    for (int k = 2; k <= 10; k++) {
        SureSuccessPlan plan = plan_sure_success(mu(k));
        if (plan.k != k) {
            failures++;
        }
        for (double theta : {plan.theta1, plan.theta2}) {
            boundary = std::max(boundary, pi - std::abs(std::remainder(theta, 2 * pi)));
        }
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = failures == 0 && boundary <= 1e-9 && elapsed < 120;
    std::string detail = fmt("%.0f pairs, min success = 1 - %.2e, max |theta - pi| at mu_k = %.2e", plans,
                             1 - worst, boundary) +
                         fmt(", %.2f s", elapsed);
    if (!first_failure.empty()) {
        detail += "; " + first_failure;
    }
    return {ok, detail};
}

Check cross_inequalities() {
    constexpr int GRID = 1000;
    auto grid_count = [&](int k, const std::function<bool(int, double)> &pred) {
        auto [lo, hi] = beta_bracket(k);
        int pass = 0;
        for (int j = 1; j <= GRID; j++) {
            pass += pred(k, lo + (hi - lo) * j / GRID);
        }
        return pass;
    };
    bool ok = true;
    std::string detail = "no-cross/first-cross passes, odd k:";
    for (int k : {3, 5, 7, 9}) {
        int a = grid_count(k, verify_no_cross);
        int b = grid_count(k, verify_first_cross);
        ok = ok && a == GRID && b == GRID;
        detail += " " + std::to_string(k) + ":" + std::to_string(a) + "/" + std::to_string(b);
    }
    detail += "; even k literal,mirrored (not asserted):";
    for (int k : {2, 4, 6, 8, 10}) {
        int a = grid_count(k, verify_no_cross);
        int b = grid_count(k, verify_first_cross);
        int am = grid_count(k, verify_no_cross_mirrored);
        int bm = grid_count(k, verify_first_cross_mirrored);
        detail += " " + std::to_string(k) + ":" + std::to_string(a) + "/" + std::to_string(b) + "," +
                  std::to_string(am) + "/" + std::to_string(bm);
    }
    return {ok, detail + " of " + std::to_string(GRID)};
}

Check classical_regimes() {
    auto start = std::chrono::steady_clock::now();
    double e1 = error_probability(101, 101);
    double e2 = error_probability(201, 40401);
    double e3 = error_probability(11, 1331);
    double phi = 0.5 * std::erfc(pi / 4 / std::numbers::sqrt2);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = e1 > 0.45 && e1 < 0.55 && std::abs(e2 - phi) <= 0.02 && e3 < 0.01 && elapsed < 10;
    return {ok, fmt("E(101,101) = %.6f, E(201,40401) = %.6f, E(11,1331) = %.6f", e1, e2, e3) +
                    fmt(" (Phi(-pi/4) = %.6f, %.3f s)", phi, elapsed)};
}

Check counting_law() {
    // Weights with rational angle: sin^2(pi/6) = 1/4, sin^2(pi/4) = 1/2, sin^2(pi/3) = 3/4.
    struct Exact {
        uint64_t num4;
        uint64_t angle_den;
    };
    const Exact kinds[] = {{1, 6}, {2, 4}, {3, 3}};
    double worst_mass = 1;
    double worst_est = 0;
    for (int idx = 0; idx < 50; idx++) {
        unsigned n = 2 + static_cast<unsigned>(idx % 15);
        uint64_t N = uint64_t{1} << n;
        const Exact &kind = kinds[idx % 3];
        uint64_t t = N / 4 * kind.num4;
        uint64_t P = kind.angle_den * (1 + static_cast<uint64_t>(idx % 7));
        uint64_t f = P / kind.angle_den;
        std::vector<double> probs = counting_distribution(t, N, P);
        double mass = probs[f] + (P - f != f ? probs[P - f] : 0.0);
        worst_mass = std::min(worst_mass, mass);
        for (uint64_t g : {f, P - f}) {
            double est = estimate_weight(g, N, P);
            double err = std::abs(est - static_cast<double>(t));
            if (static_cast<uint64_t>(std::llround(est)) != t) {
                err = INFINITY;
            }
            worst_est = std::max(worst_est, err);
        }
    }

    CountingPlan plan = comparison_plan(2);
    double worst_pair = 1;
    for (size_t i = 0; i < plan.hypotheses.size(); i++) {
        const AngleFraction &a = plan.hypotheses[i].angle;
        std::vector<double> probs =
            counting_distribution_for_angle(pi * static_cast<double>(a.num) / static_cast<double>(a.den), plan.P);
        double right = 0;
        for (uint64_t f = 0; f < plan.P; f++) {
            auto hit = plan.match(fold_outcome(f, plan.P));
            if (hit && *hit == i) {
                right += probs[f];
            }
        }
        worst_pair = std::min(worst_pair, right);
    }
    CostComparison cost = cost_comparison(2);
    bool ok = worst_mass >= 1 - 1e-9 && worst_est <= 1e-6 && plan.P == 10 && worst_pair >= 1 - 1e-9 &&
              cost.weight_decision_calls == 3 && cost.counting_calls == 9;
    return {ok, fmt("50 triples, min support mass = 1 - %.2e, max |estimate - t| = %.2e", 1 - worst_mass,
                    worst_est) +
                    fmt("; k=2 pair P = %.0f, min success = 1 - %.2e", static_cast<double>(plan.P), 1 - worst_pair) +
                    fmt(", calls (%.0f, %.0f)", static_cast<double>(cost.weight_decision_calls),
                        static_cast<double>(cost.counting_calls))};
}

Check speedup() {
    constexpr int K = 51;
    uint64_t N = uint64_t{1} << 20;
    PromisePair pair = PromisePair::for_iterations(K, N);
    double quantum = std::min(exact_success_probability(K, pair.t_small, N), exact_success_probability(K, pair.t_big, N));
    double classical = 1 - error_probability(K, K);
    bool ok = quantum >= 0.999 && classical <= 0.55;
    return {ok, fmt("quantum success %.9f with %.0f calls, classical success %.6f with 51 calls", quantum, K + 1,
                    classical)};
}

struct Criterion {
    const char *title;
    Check (*fn)();
};

const Criterion CRITERIA[NUM_CRITERIA] = {
    {"roots of a_k and b_k, k = 1..10", table_one},
    {"state-vector and subspace backends agree", backend_equivalence},
    {"one iteration separates N/4 from 3N/4 exactly", quarter_exactness},
    {"k-iteration success meets 1 - 64(k+1)^2/N^2", success_bound},
    {"sure-success plans are certain for every t", sure_success},
    {"cross-point inequalities on the bracket grid", cross_inequalities},
    {"majority-vote error regimes", classical_regimes},
    {"counting exact-integer law and cost table", counting_law},
    {"k = 51 quantum versus classical", speedup},
};

}  // namespace

CriterionResult run_criterion(int id) {
    if (id < 1 || id > NUM_CRITERIA) {
        throw std::out_of_range("no acceptance criterion " + std::to_string(id));
    }
    const Criterion &c = CRITERIA[id - 1];
    auto start = std::chrono::steady_clock::now();
    Check check;
    try {
        check = c.fn();
    } catch (const std::exception &ex) {
        check = {false, std::string("exception: ") + ex.what()};
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {id, c.title, check.passed, check.detail, elapsed};
}

std::vector<CriterionResult> run_acceptance(const std::vector<int> &ids) {
    std::vector<CriterionResult> out;
    if (ids.empty()) {
        for (int id = 1; id <= NUM_CRITERIA; id++) {
            out.push_back(run_criterion(id));
        }
    } else {
        for (int id : ids) {
            out.push_back(run_criterion(id));
        }
    }
    return out;
}

std::string format_result(const CriterionResult &r) {
    char head[64];
    std::snprintf(head, sizeof(head), "%s [%d] ", r.passed ? "PASS" : "FAIL", r.id);
    char tail[32];
    std::snprintf(tail, sizeof(tail), " (%.2f s)", r.seconds);
    return head + r.title + ": " + r.detail + tail;
}

}  // namespace gwd
