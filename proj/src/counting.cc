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

#include "gwd/counting.h"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "gwd/errors.h"
#include "gwd/statevector.h"

namespace gwd {

using std::numbers::pi;

namespace {

constexpr uint64_t MAX_REGISTER = uint64_t{1} << 24;

uint64_t parse_u64(std::string_view text, std::string_view whole) {
    uint64_t value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
        throw ParameterError("expected an angle fraction p/q, got '" + std::string(whole) + "'");
    }
    return value;
}

// |(1/P) sum_{m<P} e^{imx}|^2.
double fejer(double x, uint64_t P) {
    double r = std::remainder(x, 2 * pi);
    double half = std::sin(r / 2);
    if (std::abs(half) < 1e-12) {
        return 1.0;
    }
    double ratio = std::sin(static_cast<double>(P) * r / 2) / (static_cast<double>(P) * half);
    return ratio * ratio;
}

void check_register(uint64_t P) {
    if (P < 2 || P > MAX_REGISTER) {
        throw ParameterError("register size P must lie in [2, 2^24], got " + std::to_string(P));
    }
}

}  // namespace

AngleFraction AngleFraction::make(uint64_t num, uint64_t den) {
    if (den == 0) {
        throw ParameterError("angle fraction has a zero denominator");
    }
    if (num == 0 || 2 * num > den) {
        throw ParameterError(
            "angle fraction " + std::to_string(num) + "/" + std::to_string(den) + " is outside (0, 1/2]");
    }
    uint64_t g = std::gcd(num, den);
    return AngleFraction{num / g, den / g};
}

AngleFraction AngleFraction::parse(std::string_view text) {
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw ParameterError("expected an angle fraction p/q, got '" + std::string(text) + "'");
    }
    return make(parse_u64(text.substr(0, slash), text), parse_u64(text.substr(slash + 1), text));
}

double AngleFraction::weight() const {
    double s = std::sin(pi * static_cast<double>(num) / static_cast<double>(den));
    return s * s;
}

std::vector<double> counting_distribution_for_angle(double hilbert_angle, uint64_t P) {
    check_register(P);
    // The start state splits evenly over the eigenvectors of G with phases
    // +2b and -2b; each branch leaves a Fejer kernel on the register.
    std::vector<double> probs(P);
    for (uint64_t l = 0; l < P; l++) {
        double bin = 2 * pi * static_cast<double>(l) / static_cast<double>(P);
        probs[l] = 0.5 * fejer(2 * hilbert_angle + bin, P) + 0.5 * fejer(-2 * hilbert_angle + bin, P);
    }
    return probs;
}

std::vector<double> counting_distribution(uint64_t t, uint64_t N, uint64_t P) {
    if (N == 0 || t > N) {
        throw ParameterError("weight t=" + std::to_string(t) + " is outside [0, N=" + std::to_string(N) + "]");
    }
    double angle = std::asin(std::sqrt(static_cast<double>(t) / static_cast<double>(N)));
    return counting_distribution_for_angle(angle, P);
}

double estimate_weight(uint64_t f, uint64_t N, uint64_t P) {
    double s = std::sin(static_cast<double>(f) * pi / static_cast<double>(P));
    return static_cast<double>(N) * s * s;
}

uint64_t fold_outcome(uint64_t f, uint64_t P) {
    return 2 * f > P ? P - f : f;
}

std::optional<size_t> CountingPlan::match(uint64_t f) const {
    for (size_t i = 0; i < hypotheses.size(); i++) {
        if (hypotheses[i].k == f) {
            return i;
        }
    }
    return std::nullopt;
}

CountingPlan plan_check_weight(const AngleFraction &angle, uint64_t multiplier) {
    if (multiplier == 0) {
        throw ParameterError("multiplier must be positive");
    }
    // P * num / den = multiplier.
    uint64_t scaled = multiplier * angle.den;
    if (scaled % angle.num != 0) {
        throw FeasibilityError(
            "P = " + std::to_string(multiplier) + " * " + std::to_string(angle.den) + "/" + std::to_string(angle.num) +
            " is not an integer");
    }
    uint64_t P = scaled / angle.num;
    check_register(P);
    return CountingPlan{P, {{angle, angle.weight(), multiplier}}, P - 1};
}

CountingPlan plan_n_weights(const std::vector<AngleFraction> &angles) {
    if (angles.empty()) {
        throw ParameterError("at least one weight is needed");
    }
    uint64_t P = 1;
    for (const AngleFraction &a : angles) {
        P = std::lcm(P, a.den);
        if (P > MAX_REGISTER) {
            throw FeasibilityError("least common register size exceeds 2^24");
        }
    }
    check_register(P);
    CountingPlan plan{P, {}, P - 1};
    for (const AngleFraction &a : angles) {
        uint64_t k = P / a.den * a.num;
        if (plan.match(k)) {
            throw FeasibilityError(
                "weight " + std::to_string(a.num) + "/" + std::to_string(a.den) +
                " shares register outcome " + std::to_string(k) + " with an earlier weight");
        }
        plan.hypotheses.push_back({a, a.weight(), k});
    }
    return plan;
}

CountingPlan plan_two_weights(const AngleFraction &a, const AngleFraction &b) {
    return plan_n_weights({a, b});
}

CountingPlan comparison_plan(int k) {
    if (k < 1) {
        throw ParameterError("iteration count k must be at least 1");
    }
    uint64_t den = 4 * static_cast<uint64_t>(k) + 2;
    return plan_two_weights(AngleFraction::make(k, den), AngleFraction::make(k + 1, den));
}

DecisionOutcome decide_by_counting(
    const BooleanOracle &oracle, const CountingPlan &plan, std::mt19937_64 &rng, const DecisionOptions &options) {
    uint64_t N = oracle.domain_size();
    std::vector<double> probs = counting_distribution(oracle.weight(), N, plan.P);
    DiscreteSampler sampler(probs);

    DecisionOutcome out;
    out.measured_x = sampler(rng);
    out.oracle_calls = plan.total_oracle_calls;
    std::optional<size_t> hit = plan.match(fold_outcome(out.measured_x, plan.P));
    if (!hit) {
        if (options.strict) {
            throw PromiseViolation(
                "register outcome " + std::to_string(out.measured_x) + " matches no planned weight");
        }
        out.promise_flagged = true;
        return out;
    }
    out.inferred_t = static_cast<uint64_t>(std::llround(static_cast<double>(N) * plan.hypotheses[*hit].w));
    out.correct = *out.inferred_t == oracle.weight();
    if (options.strict && !out.correct) {
        throw PromiseViolation(
            "inferred weight " + std::to_string(*out.inferred_t) + " but the oracle has weight " +
            std::to_string(oracle.weight()));
    }
    return out;
}

CostComparison cost_comparison(int k) {
    CountingPlan plan = comparison_plan(k);
    uint64_t quantum = static_cast<uint64_t>(k) + 1;
    return CostComparison{
        k, quantum, plan.total_oracle_calls,
        static_cast<double>(plan.total_oracle_calls) / static_cast<double>(quantum)};
}

}  // namespace gwd
