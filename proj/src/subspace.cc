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

#include "gwd/subspace.h"

#include <cmath>
#include <numbers>
#include <string>

#include "gwd/errors.h"

namespace gwd {

using std::numbers::pi;

PhaseSchedule PhaseSchedule::standard(int k) {
    if (k < 0) {
        throw ParameterError("iteration count must be non-negative");
    }
    return PhaseSchedule{std::vector<PhaseStep>(static_cast<size_t>(k), PhaseStep{pi, pi})};
}

double SubspaceState::hilbert_angle() const {
    return std::asin(std::sqrt(fraction));
}

double SubspaceState::bloch_angle() const {
    return 2 * hilbert_angle();
}

std::pair<Complex, Complex> SubspaceState::per_state_amplitudes() const {
    if (N == 0 || t == 0 || t == N) {
        throw ParameterError("per-state amplitudes need an integer weight with 0 < t < N");
    }
    return {c_ns / std::sqrt(static_cast<double>(N - t)), c_sol / std::sqrt(static_cast<double>(t))};
}

SubspaceState initial_state_for_fraction(double u) {
    if (!(u > 0 && u < 1)) {
        throw DegenerateSubspaceError("solution fraction must lie strictly between 0 and 1");
    }
    return SubspaceState{std::sqrt(1 - u), std::sqrt(u), u};
}

SubspaceState initial_state(uint64_t t, uint64_t N) {
    if (t == 0 || t >= N) {
        throw DegenerateSubspaceError(
            "weight " + std::to_string(t) + " has no two-dimensional subspace in domain of size " +
            std::to_string(N));
    }
    double Nd = static_cast<double>(N);
    double td = static_cast<double>(t);
    SubspaceState s{std::sqrt((Nd - td) / Nd), std::sqrt(td / Nd), td / Nd, t, N};
    return s;
}

SubspaceState apply_generalized_step(const SubspaceState &state, double theta, double phi) {
    double c = std::sqrt(1 - state.fraction);
    double s = std::sqrt(state.fraction);
    Complex ns = state.c_ns;
    Complex sol = state.c_sol * std::polar(1.0, phi);
    Complex overlap = c * ns + s * sol;
    Complex k = (1.0 - std::polar(1.0, theta)) * overlap;
    SubspaceState out = state;
    out.c_ns = -(ns - k * c);
    out.c_sol = -(sol - k * s);
    return out;
}

namespace {

SubspaceState run_from(SubspaceState s, const PhaseSchedule &schedule) {
    for (const auto &step : schedule.steps) {
        s = apply_generalized_step(s, step.theta, step.phi);
    }
    return s;
}

}  // namespace

SubspaceState run_schedule(uint64_t t, uint64_t N, const PhaseSchedule &schedule) {
    return run_from(initial_state(t, N), schedule);
}

SubspaceState run_schedule_for_fraction(double u, const PhaseSchedule &schedule) {
    return run_from(initial_state_for_fraction(u), schedule);
}

std::pair<double, double> recurrence_amplitudes(int k, double u) {
    if (k < 0) {
        throw ParameterError("iteration count must be non-negative");
    }
    double a = 1;
    double b = 1;
    for (int i = 0; i < k; i++) {
        double na = (1 - 2 * u) * a - 2 * u * b;
        double nb = 2 * (1 - u) * a + (1 - 2 * u) * b;
        a = na;
        b = nb;
    }
    return {a, b};
}

std::pair<double, double> closed_form_amplitudes(int k, double u) {
    if (k < 0) {
        throw ParameterError("iteration count must be non-negative");
    }
    double beta = std::asin(std::sqrt(u));
    double angle = (2 * k + 1) * beta;
    return {std::cos(angle) / std::cos(beta), std::sin(angle) / std::sin(beta)};
}

RootSets roots(int k) {
    if (k < 1) {
        throw ParameterError("root sets need k >= 1");
    }
    RootSets r;
    r.a.reserve(k);
    r.b.reserve(k);
    double denom = 2 * k + 1;
    for (int m = 1; m <= k; m++) {
        double s = std::sin((2 * m - 1) / denom * pi / 2);
        r.a.push_back(s * s);
    }
    for (int l = 1; l <= k; l++) {
        double s = std::sin(l * pi / denom);
        r.b.push_back(s * s);
    }
    return r;
}

double mu(int k) {
    if (k < 1) {
        throw ParameterError("mu_k needs k >= 1");
    }
    double s = std::sin(static_cast<double>(k) / (2 * k + 1) * pi / 2);
    return s * s;
}

BlochVector bloch_from_state(const SubspaceState &state) {
    Complex cross = 2.0 * std::conj(state.c_ns) * state.c_sol;
    return {cross.real(), cross.imag(), std::norm(state.c_sol) - std::norm(state.c_ns)};
}

BlochVector rotate(const BlochVector &v, const BlochVector &axis, double angle) {
    double c = std::cos(angle);
    double s = std::sin(angle);
    BlochVector kxv = axis.cross(v);
    double kdv = axis.dot(v);
    return {
        v.x * c + kxv.x * s + axis.x * kdv * (1 - c),
        v.y * c + kxv.y * s + axis.y * kdv * (1 - c),
        v.z * c + kxv.z * s + axis.z * kdv * (1 - c),
    };
}

BlochVector uniform_axis(double bloch_angle) {
    return {std::sin(bloch_angle), 0, -std::cos(bloch_angle)};
}

BlochVector apply_generalized_step_bloch(const BlochVector &v, double bloch_angle, double theta, double phi) {
    BlochVector after_oracle = rotate(v, {0, 0, 1}, phi);
    return rotate(after_oracle, uniform_axis(bloch_angle), theta);
}

BlochVector run_schedule_bloch(double bloch_angle, const PhaseSchedule &schedule) {
    BlochVector v = uniform_axis(bloch_angle);
    for (const auto &step : schedule.steps) {
        v = apply_generalized_step_bloch(v, bloch_angle, step.theta, step.phi);
    }
    return v;
}

}  // namespace gwd
