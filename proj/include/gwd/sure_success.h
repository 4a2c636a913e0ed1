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

#ifndef GWD_SURE_SUCCESS_H
#define GWD_SURE_SUCCESS_H

#include <array>
#include <cstdint>
#include <random>
#include <utility>

#include "gwd/oracle.h"
#include "gwd/subspace.h"
#include "gwd/weight_decision.h"

namespace gwd {

/// Phase plan that sends the weights w and 1-w to opposite poles with
/// certainty: k-2 standard iterations, then (-theta1, pi) and (-theta2, pi).
///
/// All angles here use the Bloch convention: beta is twice the Hilbert
/// half-angle, so the uniform superposition sits at (sin beta, 0, -cos beta).
struct SureSuccessPlan {
    int k;
    double theta1;
    double theta2;
    /// Bloch angle of the smaller weight min(w, 1-w).
    double beta_small;
    /// pi - beta_small.
    double beta_big;
    /// y-coordinate of the intermediate cross point, sin(theta1) sin((2k-2) beta).
    double y;
    /// min(w, 1-w).
    double w_small;

    PhaseSchedule schedule() const;
};

/// Smallest iteration count that can certify w against 1-w: 2 when
/// min(w, 1-w) <= sin^2(pi/5), otherwise the k with mu_{k-1} < min(w,1-w) <= mu_k.
/// Throws ParameterError for w = 1/2 or w outside (0, 1).
int select_k(double w);

/// Admissible Bloch-angle interval (lo, hi] for the smaller weight at k.
std::pair<double, double> beta_bracket(int k);

/// 1 - x^2 - z^2 for the cross point; negative means no cross point exists.
double cross_point_radicand(int k, double beta);

/// Intermediate point from which the final rotation reaches the target pole:
/// x = (cos(2k-2)b - (-1)^k cos b) / (2 sin b),
/// z = (-cos(2k-2)b - (-1)^k cos b) / (2 cos b), y = +sqrt(1 - x^2 - z^2).
/// Throws FeasibilityError when the radicand is below -1e-12.
BlochVector cross_point(int k, double beta);

/// theta1 in [0, pi] with
/// cos(theta1) = ((-1)^k cos b - cos 2b cos(2k-2)b) / (sin 2b sin(2k-2)b).
/// Throws FeasibilityError when |cos(theta1)| > 1 + 1e-10.
double solve_theta1(int k, double beta);

/// Both solutions of the theta2 phase condition, rewritten as
/// R cos(theta2) - P sin(theta2) = Q, normalized to (-pi, pi].
/// Throws FeasibilityError for a vanishing R or an unsolvable equation.
std::array<double, 2> theta2_candidates(int k, double beta, double y);

/// theta2 for the cross-point coordinate y: the candidate that, together with
/// theta1 = solve_theta1(k, beta), verifies end to end.
/// Throws VerificationError when no candidate verifies.
double solve_theta2(int k, double beta, double y);

/// Solves and verifies the full plan for weight fraction w (either side of 1/2).
/// Throws VerificationError if no candidate branch sends both hypotheses to
/// opposite poles within 1e-9.
SureSuccessPlan plan_sure_success(double w);

struct PlanEvaluation {
    double z_small;
    double z_big;
    /// Probability of inferring the right weight under each hypothesis.
    double p_success_small;
    double p_success_big;
};

/// Runs the plan's schedule on the weight fractions u and 1-u.
PlanEvaluation evaluate_plan(const SureSuccessPlan &plan, double u_small);

/// Algorithm entry point: plans for w, runs the schedule on the oracle,
/// measures, evaluates f once and applies the parity rule with
/// t_small = round(N min(w,1-w)), t_big = round(N max(w,1-w)).
DecisionOutcome sure_success_decide(
    const BooleanOracle &oracle, double w, std::mt19937_64 &rng, const DecisionOptions &options = {});

/// -sin(2b) > sin((2k-3) b): no cross point through the (k-2)-th iteration.
bool verify_no_cross(int k, double beta);
/// sin(2b) >= sin((2k-1) b) (1e-12 slack): a cross point at the (k-1)-th.
bool verify_first_cross(int k, double beta);
/// The same two inequalities with the right-hand sides multiplied by
/// (-1)^(k+1); identical to the above for odd k.
bool verify_no_cross_mirrored(int k, double beta);
bool verify_first_cross_mirrored(int k, double beta);

}  // namespace gwd

#endif
