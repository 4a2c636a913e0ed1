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

#include "gwd/sure_success.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gwd/errors.h"

namespace gwd {

using std::numbers::pi;

namespace {

constexpr double EPS = std::numeric_limits<double>::epsilon();
constexpr double POLE_TOL = 1e-9;
constexpr int MAX_K = 10'000'000;

double parity_sign(int k) {
    return k % 2 == 0 ? 1.0 : -1.0;
}

// sin/cos evaluated at an argument that carries rounding error of a few ulps;
// values indistinguishable from zero at that resolution become exactly zero.
double snapped(double value, double arg) {
    return std::abs(value) <= 8 * EPS * std::max(1.0, std::abs(arg)) ? 0.0 : value;
}
double snapped_sin(double arg) {
    return snapped(std::sin(arg), arg);
}
double snapped_cos(double arg) {
    return snapped(std::cos(arg), arg);
}

double wrap_angle(double a) {
    double r = std::remainder(a, 2 * pi);
    return r <= -pi ? r + 2 * pi : r;
}

double bloch_angle_of(double u) {
    return 2 * std::asin(std::sqrt(u));
}

bool on_target_poles(int k, double w_small, const PhaseSchedule &schedule) {
    double target = -parity_sign(k);
    SubspaceState small = run_schedule_for_fraction(w_small, schedule);
    SubspaceState big = run_schedule_for_fraction(1 - w_small, schedule);
    double z_small = bloch_from_state(small).z;
    double z_big = bloch_from_state(big).z;
    return z_small * target >= 1 - POLE_TOL && z_big * -target >= 1 - POLE_TOL;
}

PhaseSchedule make_schedule(int k, double theta1, double theta2) {
    PhaseSchedule s = PhaseSchedule::standard(k - 2);
    s.steps.push_back({-theta1, pi});
    s.steps.push_back({-theta2, pi});
    return s;
}

}  // namespace

PhaseSchedule SureSuccessPlan::schedule() const {
    return make_schedule(k, theta1, theta2);
}

int select_k(double w) {
    if (!(w > 0 && w < 1)) {
        throw ParameterError("weight fraction must lie strictly between 0 and 1");
    }
    double m = std::min(w, 1 - w);
    if (m == 0.5) {
        throw ParameterError("w = 1/2 makes both hypotheses the same weight");
    }
    if (m <= mu(2)) {
        return 2;
    }
    // mu_k >= m  <=>  k >= 2a / (pi - 4a) with a = asin(sqrt(m)).
    double a = std::asin(std::sqrt(m));
    double estimate = std::ceil(2 * a / (pi - 4 * a));
    if (!(estimate < MAX_K)) {
        throw ParameterError("weight fraction is too close to 1/2 to plan for");
    }
    int k = std::max(2, static_cast<int>(estimate));
    while (k > 2 && mu(k - 1) >= m) {
        k--;
    }
    while (mu(k) < m) {
        k++;
    }
    return k;
}

std::pair<double, double> beta_bracket(int k) {
    if (k < 2) {
        throw ParameterError("sure-success plans need k >= 2");
    }
    double hi = static_cast<double>(k) / (2 * k + 1) * pi;
    double lo = k == 2 ? 0.0 : static_cast<double>(k - 1) / (2 * k - 1) * pi;
    return {lo, hi};
}

double cross_point_radicand(int k, double beta) {
    double s = parity_sign(k);
    double c22 = std::cos((2 * k - 2) * beta);
    double x = (c22 - s * std::cos(beta)) / (2 * std::sin(beta));
    double z = (-c22 - s * std::cos(beta)) / (2 * std::cos(beta));
    return 1 - x * x - z * z;
}

BlochVector cross_point(int k, double beta) {
    double s = parity_sign(k);
    double c22 = std::cos((2 * k - 2) * beta);
    double x = (c22 - s * std::cos(beta)) / (2 * std::sin(beta));
    double z = (-c22 - s * std::cos(beta)) / (2 * std::cos(beta));
    double radicand = 1 - x * x - z * z;
    if (radicand < -1e-12) {
        throw FeasibilityError(
            "no cross point for k=" + std::to_string(k) + " at Bloch angle " + std::to_string(beta));
    }
    return {x, std::sqrt(std::max(0.0, radicand)), z};
}

double solve_theta1(int k, double beta) {
    double s = parity_sign(k);
    double numer = s * std::cos(beta) - std::cos(2 * beta) * std::cos((2 * k - 2) * beta);
    double denom = std::sin(2 * beta) * std::sin((2 * k - 2) * beta);
    if (std::abs(numer) > (1 + 1e-10) * std::abs(denom)) {
        throw FeasibilityError("theta1 condition has no solution for k=" + std::to_string(k));
    }
    // denom + numer and denom - numer in product form, which stays accurate
    // where cos(theta1) approaches -1 or +1.
    double plus;
    double minus;
    double h = beta / 2;
    if (k % 2 == 0) {
        plus = 2 * snapped_sin((2 * k + 1) * h) * snapped_sin((2 * k - 1) * h);
        minus = -2 * snapped_sin((2 * k - 3) * h) * snapped_sin((2 * k - 5) * h);
    } else {
        plus = -2 * snapped_cos((2 * k + 1) * h) * snapped_cos((2 * k - 1) * h);
        minus = 2 * snapped_cos((2 * k - 3) * h) * snapped_cos((2 * k - 5) * h);
    }
    double sin_theta = std::sqrt(std::max(0.0, plus * minus)) / std::abs(denom);
    if (plus == 0) {
        return pi;
    }
    if (minus == 0) {
        return 0.0;
    }
    return std::atan2(sin_theta, numer / denom);
}

std::array<double, 2> theta2_candidates(int k, double beta, double y) {
    double s = parity_sign(k);
    double R = std::cos(beta) * std::cos(2 * beta) - s * std::cos((2 * k - 2) * beta);
    if (std::abs(R) <= 1e-12) {
        throw FeasibilityError("theta2 condition is degenerate for k=" + std::to_string(k));
    }
    double P = s * std::sin(2 * beta) * y;
    double Q = -std::sin(2 * beta) * std::sin(beta);
    // R cos t - P sin t = r cos(t + delta).
    double r = std::hypot(R, P);
    double delta = std::atan2(P, R);
    if (std::abs(Q) > (1 + 1e-10) * r) {
        throw FeasibilityError("theta2 condition has no solution for k=" + std::to_string(k));
    }
    // R carries rounding error that grows with the (2k-2) beta argument; a
    // discriminant inside that noise is a tangency.
    double disc = (r - std::abs(Q)) * (r + std::abs(Q));
    if (disc <= 64 * EPS * (2 * k + 1) * r * r) {
        disc = 0;
    }
    double half_width = std::atan2(std::sqrt(disc), Q);
    return {wrap_angle(-delta + half_width), wrap_angle(-delta - half_width)};
}

double solve_theta2(int k, double beta, double y) {
    double theta1 = solve_theta1(k, beta);
    double w_small = std::pow(std::sin(beta / 2), 2);
    for (double signed_theta1 : {theta1, -theta1}) {
        for (double theta2 : theta2_candidates(k, beta, y)) {
            if (on_target_poles(k, w_small, make_schedule(k, signed_theta1, theta2))) {
                return theta2;
            }
        }
    }
    throw VerificationError("no theta2 branch reaches opposite poles for k=" + std::to_string(k));
}

SureSuccessPlan plan_sure_success(double w) {
    int k = select_k(w);
    double w_small = std::min(w, 1 - w);
    double beta = bloch_angle_of(w_small);
    double theta1 = solve_theta1(k, beta);
    double y0 = std::sin(theta1) * std::sin((2 * k - 2) * beta);

    // The phase conditions fix theta1 only up to sign and give two theta2
    // roots per choice of y; the first combination that verifies wins.
    for (double y : {y0, -y0}) {
        auto roots = theta2_candidates(k, beta, y);
        for (double sign1 : {1.0, -1.0}) {
            for (double theta2 : roots) {
                for (double sign2 : {1.0, -1.0}) {
                    double t1 = wrap_angle(sign1 * theta1);
                    double t2 = wrap_angle(sign2 * theta2);
                    if (on_target_poles(k, w_small, make_schedule(k, t1, t2))) {
                        return SureSuccessPlan{k, t1, t2, beta, pi - beta, y, w_small};
                    }
                }
            }
        }
    }
    throw VerificationError(
        "no phase branch certifies w=" + std::to_string(w) + " against 1-w with k=" + std::to_string(k));
}

PlanEvaluation evaluate_plan(const SureSuccessPlan &plan, double u_small) {
    PhaseSchedule schedule = plan.schedule();
    SubspaceState small = run_schedule_for_fraction(u_small, schedule);
    SubspaceState big = run_schedule_for_fraction(1 - u_small, schedule);
    bool odd = plan.k % 2 != 0;
    // Odd k: the smaller weight should be found on a solution.
    double p_small = odd ? small.solution_probability() : small.non_solution_probability();
    double p_big = odd ? big.non_solution_probability() : big.solution_probability();
    return {bloch_from_state(small).z, bloch_from_state(big).z, p_small, p_big};
}

DecisionOutcome sure_success_decide(
    const BooleanOracle &oracle, double w, std::mt19937_64 &rng, const DecisionOptions &options) {
    SureSuccessPlan plan = plan_sure_success(w);
    uint64_t N = oracle.domain_size();
    uint64_t t_small = round_weight(plan.w_small, N);
    uint64_t t_big = round_weight(1 - plan.w_small, N);
    ScheduledDecision run(oracle, plan.schedule(), plan.k, t_small, t_big);
    DecisionOutcome out = run.sample(rng, options);
    out.promise_flagged = oracle.weight() != t_small && oracle.weight() != t_big;
    return out;
}

bool verify_no_cross(int k, double beta) {
    return -std::sin(2 * beta) > std::sin((2 * k - 3) * beta);
}

bool verify_first_cross(int k, double beta) {
    return std::sin(2 * beta) >= std::sin((2 * k - 1) * beta) - 1e-12;
}

bool verify_no_cross_mirrored(int k, double beta) {
    return -std::sin(2 * beta) > -parity_sign(k) * std::sin((2 * k - 3) * beta);
}

bool verify_first_cross_mirrored(int k, double beta) {
    return std::sin(2 * beta) >= -parity_sign(k) * std::sin((2 * k - 1) * beta) - 1e-12;
}

}  // namespace gwd
