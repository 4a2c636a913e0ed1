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

#ifndef GWD_SUBSPACE_H
#define GWD_SUBSPACE_H

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace gwd {

using Complex = std::complex<double>;

/// One generalized Grover iteration: the solution phase `phi` is applied
/// first, then the diffusion -I_{psi0}(theta). Standard Grover is (pi, pi).
struct PhaseStep {
    double theta;
    double phi;
};

struct PhaseSchedule {
    std::vector<PhaseStep> steps;

    /// k standard (pi, pi) iterations.
    static PhaseSchedule standard(int k);

    size_t size() const { return steps.size(); }
    bool empty() const { return steps.empty(); }
};

/// State of the two-dimensional invariant plane spanned by the normalized
/// uniform superpositions over non-solutions (c_ns) and solutions (c_sol).
///
/// `fraction` is the solution fraction u = t/N, with sin^2(beta_H) = u for the
/// Hilbert half-angle beta_H. When the state was built from an integer
/// weight, `t` and `N` record it; otherwise both are zero.
struct SubspaceState {
    Complex c_ns;
    Complex c_sol;
    double fraction;
    uint64_t t = 0;
    uint64_t N = 0;

    double solution_probability() const { return std::norm(c_sol); }
    double non_solution_probability() const { return std::norm(c_ns); }
    double norm2() const { return std::norm(c_ns) + std::norm(c_sol); }

    /// beta_H with sin^2(beta_H) = fraction.
    double hilbert_angle() const;
    /// beta_B = 2 beta_H, the polar angle used on the Bloch sphere.
    double bloch_angle() const;

    /// Per-input amplitudes a = c_ns / sqrt(N - t), b = c_sol / sqrt(t).
    /// Requires integer weight bookkeeping.
    std::pair<Complex, Complex> per_state_amplitudes() const;
};

struct BlochVector {
    double x;
    double y;
    double z;

    double norm2() const { return x * x + y * y + z * z; }
    double dot(const BlochVector &o) const { return x * o.x + y * o.y + z * o.z; }
    BlochVector cross(const BlochVector &o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
};

/// Uniform superposition: c_ns = sqrt((N-t)/N), c_sol = sqrt(t/N).
/// Throws DegenerateSubspaceError unless 0 < t < N.
SubspaceState initial_state(uint64_t t, uint64_t N);
/// Same, for a real solution fraction 0 < u < 1.
SubspaceState initial_state_for_fraction(double u);

/// Applies -I_{psi0}(theta) * I_{sol}(phi) as an exact 2x2 unitary, including
/// the overall minus sign.
SubspaceState apply_generalized_step(const SubspaceState &state, double theta, double phi);

SubspaceState run_schedule(uint64_t t, uint64_t N, const PhaseSchedule &schedule);
SubspaceState run_schedule_for_fraction(double u, const PhaseSchedule &schedule);

/// Per-state amplitudes after k standard iterations, scaled by sqrt(N), from
/// the two-term recurrence with a_0 = b_0 = 1. a_k belongs to f(x)=0 inputs,
/// b_k to f(x)=1 inputs.
std::pair<double, double> recurrence_amplitudes(int k, double u);

/// a_k = cos((2k+1)beta_H) / cos(beta_H), b_k = sin((2k+1)beta_H) / sin(beta_H).
std::pair<double, double> closed_form_amplitudes(int k, double u);

struct RootSets {
    /// Zeros of a_k: sin^2((2m-1)/(2k+1) * pi/2), m = 1..k, ascending.
    std::vector<double> a;
    /// Zeros of b_k: sin^2(l*pi/(2k+1)), l = 1..k, ascending.
    std::vector<double> b;
};

RootSets roots(int k);

/// mu_k = sin^2(k/(2k+1) * pi/2): the amplitude root nearest to 1/2 from below.
double mu(int k);

/// x + iy = 2 conj(c_ns) c_sol, z = |c_sol|^2 - |c_ns|^2. The solution pole is
/// (0,0,+1), the non-solution pole (0,0,-1).
BlochVector bloch_from_state(const SubspaceState &state);

/// Rodrigues rotation of v by `angle` radians about the unit vector `axis`.
BlochVector rotate(const BlochVector &v, const BlochVector &axis, double angle);

/// Bloch vector of the uniform superposition for Bloch angle beta_B.
BlochVector uniform_axis(double bloch_angle);

/// Rotation picture of apply_generalized_step (global phase dropped): rotate
/// by phi about +Z, then by theta about the uniform-superposition axis.
BlochVector apply_generalized_step_bloch(const BlochVector &v, double bloch_angle, double theta, double phi);

/// Runs a schedule on the Bloch sphere from the uniform superposition.
BlochVector run_schedule_bloch(double bloch_angle, const PhaseSchedule &schedule);

}  // namespace gwd

#endif
