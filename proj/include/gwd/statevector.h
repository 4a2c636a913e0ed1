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

#ifndef GWD_STATEVECTOR_H
#define GWD_STATEVECTOR_H

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gwd/oracle.h"
#include "gwd/subspace.h"

namespace gwd {

/// Full 2^n amplitude vector over the input register. The |1> ancilla used
/// for phase kickback is not materialized: U_f acts as a phase on f(x)=1.
struct StateVector {
    unsigned n;
    std::vector<Complex> amps;

    static StateVector uniform(unsigned n);
    static StateVector basis(unsigned n, uint64_t x);

    uint64_t size() const { return amps.size(); }
    double norm2() const;
};

/// amps[x] *= e^{i phi} wherever f(x) = 1.
void apply_oracle_phase(StateVector &sv, const BooleanOracle &oracle, double phi);

/// -(I - (1 - e^{i theta}) |psi0><psi0|) via mean subtraction, O(N).
/// At theta = pi this is the Grover matrix (2/N) sum |x><y| - 1.
void apply_generalized_diffusion(StateVector &sv, double theta);

/// H^{(x)n} by an in-place fast Walsh-Hadamard transform.
void apply_hadamard_all(StateVector &sv);

/// Born-rule probabilities p[x] = |amps[x]|^2.
std::vector<double> measure_distribution(const StateVector &sv);

/// Alternates oracle phase and diffusion per schedule step, starting from the
/// uniform superposition.
StateVector run_full_schedule(const BooleanOracle &oracle, const PhaseSchedule &schedule);

enum class DeutschJozsaResult { constant, balanced };

/// Throws PromiseViolation when the all-zero outcome probability is strictly
/// between 0 and 1.
DeutschJozsaResult deutsch_jozsa(const BooleanOracle &oracle);

/// Distribution over inputs induced by a subspace state: each class shares
/// its probability uniformly.
std::vector<double> induced_distribution(const SubspaceState &state, const BooleanOracle &oracle);

double total_variation_distance(std::span<const double> p, std::span<const double> q);

/// Samples indices from a fixed discrete distribution in O(log N).
class DiscreteSampler {
   public:
    explicit DiscreteSampler(std::span<const double> probabilities);
    uint64_t operator()(std::mt19937_64 &rng) const;

   private:
    std::vector<double> cumulative_;
};

}  // namespace gwd

#endif
