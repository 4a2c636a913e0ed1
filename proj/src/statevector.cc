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

#include "gwd/statevector.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gwd/errors.h"
#include "gwd/rng.h"

namespace gwd {

StateVector StateVector::uniform(unsigned n) {
    uint64_t N = uint64_t{1} << n;
    return StateVector{n, std::vector<Complex>(N, Complex(1 / std::sqrt(static_cast<double>(N)), 0))};
}

StateVector StateVector::basis(unsigned n, uint64_t x) {
    StateVector sv{n, std::vector<Complex>(uint64_t{1} << n)};
    sv.amps.at(x) = 1;
    return sv;
}

double StateVector::norm2() const {
    double total = 0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return total;
}

void apply_oracle_phase(StateVector &sv, const BooleanOracle &oracle, double phi) {
    if (sv.n != oracle.num_variables()) {
        throw ParameterError("state vector and oracle disagree on the number of variables");
    }
    Complex phase = std::polar(1.0, phi);
    for (uint64_t x = 0; x < sv.size(); x++) {
        if (oracle.bit(x)) {
            sv.amps[x] *= phase;
        }
    }
}

void apply_generalized_diffusion(StateVector &sv, double theta) {
    Complex mean = 0;
    for (const auto &a : sv.amps) {
        mean += a;
    }
    mean /= static_cast<double>(sv.size());
    Complex shift = (1.0 - std::polar(1.0, theta)) * mean;
    for (auto &a : sv.amps) {
        a = shift - a;
    }
}

void apply_hadamard_all(StateVector &sv) {
    uint64_t N = sv.size();
    for (uint64_t half = 1; half < N; half <<= 1) {
        for (uint64_t base = 0; base < N; base += 2 * half) {
            for (uint64_t j = base; j < base + half; j++) {
                Complex a = sv.amps[j];
                Complex b = sv.amps[j + half];
                sv.amps[j] = a + b;
                sv.amps[j + half] = a - b;
            }
        }
    }
    double scale = 1 / std::sqrt(static_cast<double>(N));
    for (auto &a : sv.amps) {
        a *= scale;
    }
}

std::vector<double> measure_distribution(const StateVector &sv) {
    std::vector<double> p(sv.size());
    for (uint64_t x = 0; x < sv.size(); x++) {
        p[x] = std::norm(sv.amps[x]);
    }
    return p;
}

StateVector run_full_schedule(const BooleanOracle &oracle, const PhaseSchedule &schedule) {
    StateVector sv = StateVector::uniform(oracle.num_variables());
    for (const auto &step : schedule.steps) {
        apply_oracle_phase(sv, oracle, step.phi);
        apply_generalized_diffusion(sv, step.theta);
    }
    return sv;
}

DeutschJozsaResult deutsch_jozsa(const BooleanOracle &oracle) {
    StateVector sv = StateVector::uniform(oracle.num_variables());
    apply_oracle_phase(sv, oracle, std::numbers::pi);
    apply_hadamard_all(sv);
    double p0 = std::norm(sv.amps[0]);
    constexpr double tol = 1e-9;
    if (p0 > 1 - tol) {
        return DeutschJozsaResult::constant;
    }
    if (p0 < tol) {
        return DeutschJozsaResult::balanced;
    }
    throw PromiseViolation(
        "oracle of weight " + std::to_string(oracle.weight()) + " is neither constant nor balanced");
}

std::vector<double> induced_distribution(const SubspaceState &state, const BooleanOracle &oracle) {
    uint64_t N = oracle.domain_size();
    uint64_t t = oracle.weight();
    if (t == 0 || t == N) {
        throw DegenerateSubspaceError("constant oracle has no two-dimensional subspace");
    }
    double p_sol = state.solution_probability() / static_cast<double>(t);
    double p_ns = state.non_solution_probability() / static_cast<double>(N - t);
    std::vector<double> p(N);
    for (uint64_t x = 0; x < N; x++) {
        p[x] = oracle.bit(x) ? p_sol : p_ns;
    }
    return p;
}

double total_variation_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw ParameterError("distributions differ in length");
    }
    double total = 0;
    for (size_t i = 0; i < p.size(); i++) {
        total += std::abs(p[i] - q[i]);
    }
    return total / 2;
}

DiscreteSampler::DiscreteSampler(std::span<const double> probabilities) : cumulative_(probabilities.size()) {
    if (probabilities.empty()) {
        throw ParameterError("cannot sample from an empty distribution");
    }
    double running = 0;
    for (size_t i = 0; i < probabilities.size(); i++) {
        running += probabilities[i];
        cumulative_[i] = running;
    }
}

uint64_t DiscreteSampler::operator()(std::mt19937_64 &rng) const {
    double r = uniform_unit(rng) * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
    if (it == cumulative_.end()) {
        --it;
    }
    // Never land on a zero-probability index sitting on a flat stretch.
    while (it != cumulative_.begin() && *it == *(it - 1)) {
        --it;
    }
    return static_cast<uint64_t>(it - cumulative_.begin());
}

}  // namespace gwd
