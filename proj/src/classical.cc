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

#include "gwd/classical.h"

#include <cmath>
#include <numbers>
#include <string>

#include "gwd/errors.h"
#include "gwd/rng.h"
#include "gwd/subspace.h"

namespace gwd {

namespace {

constexpr uint64_t MAX_G = 1'000'000;

// log(n!) - log(sqrt(2 pi n) (n/e)^n).
double stirling_error(double n) {
    constexpr double S0 = 1.0 / 12;
    constexpr double S1 = 1.0 / 360;
    constexpr double S2 = 1.0 / 1260;
    constexpr double S3 = 1.0 / 1680;
    constexpr double S4 = 1.0 / 1188;
    if (n <= 15) {
        return std::lgamma(n + 1) - (n + 0.5) * std::log(n) + n - 0.5 * std::log(2 * std::numbers::pi);
    }
    double nn = n * n;
    if (n > 500) return (S0 - S1 / nn) / n;
    if (n > 80) return (S0 - (S1 - S2 / nn) / nn) / n;
    if (n > 35) return (S0 - (S1 - (S2 - S3 / nn) / nn) / nn) / n;
    return (S0 - (S1 - (S2 - (S3 - S4 / nn) / nn) / nn) / nn) / n;
}

// Deviance x log(x / np) + np - x, evaluated without cancellation near x = np.
double deviance(double x, double np) {
    if (std::abs(x - np) < 0.1 * (x + np)) {
        double v = (x - np) / (x + np);
        double s = (x - np) * v;
        double ej = 2 * x * v;
        v *= v;
        for (int j = 1; j < 1000; j++) {
            ej *= v;
            double s1 = s + ej / (2 * j + 1);
            if (s1 == s) {
                return s1;
            }
            s = s1;
        }
        return s;
    }
    return x * std::log(x / np) + np - x;
}

}  // namespace

double log_binomial_pmf(uint64_t x, uint64_t n, double p) {
    if (x > n) {
        return -INFINITY;
    }
    double q = 1 - p;
    if (x == 0) {
        return static_cast<double>(n) * std::log1p(-p);
    }
    if (x == n) {
        return static_cast<double>(n) * std::log(p);
    }
    double xd = static_cast<double>(x);
    double nd = static_cast<double>(n);
    double lc = stirling_error(nd) - stirling_error(xd) - stirling_error(nd - xd) - deviance(xd, nd * p) -
                deviance(nd - xd, nd * q);
    double lf = std::log(2 * std::numbers::pi) + std::log(xd) + std::log1p(-xd / nd);
    return lc - 0.5 * lf;
}

double indication_probability(int k) {
    return 1 - mu(k);
}

double majority_error(double p, uint64_t g) {
    if (g % 2 == 0) {
        throw ParameterError("majority vote needs an odd number of queries, got " + std::to_string(g));
    }
    if (!(p > 0 && p < 1)) {
        throw ParameterError("per-query probability must lie strictly between 0 and 1");
    }
    // Sum from the largest term (i = (g-1)/2 when p > 1/2) downward and stop
    // once the remaining terms cannot matter.
    uint64_t m = (g - 1) / 2;
    double total = 0;
    for (uint64_t i = m + 1; i-- > 0;) {
        double term = std::exp(log_binomial_pmf(i, g, p));
        total += term;
        if (p > 0.5 && term < 1e-20 * total) {
            break;
        }
    }
    return total;
}

double error_probability(int k, uint64_t g) {
    if (k < 1) {
        throw ParameterError("promise index k must be at least 1");
    }
    return majority_error(indication_probability(k), g);
}

MajorityExperiment MajorityExperiment::exact(int k, uint64_t g) {
    return MajorityExperiment{k, g, indication_probability(k), error_probability(k, g)};
}

uint64_t majority_vote_trial(
    const BooleanOracle &oracle, uint64_t g, std::mt19937_64 &rng, const PromisePair &promise) {
    if (g % 2 == 0) {
        throw ParameterError("majority vote needs an odd number of queries, got " + std::to_string(g));
    }
    uint64_t N = oracle.domain_size();
    uint64_t ones = 0;
    for (uint64_t i = 0; i < g; i++) {
        ones += oracle.bit(uniform_below(rng, N));
    }
    return 2 * ones > g ? promise.t_big : promise.t_small;
}

uint64_t nearest_odd(double value) {
    if (!(value >= 1)) {
        return 1;
    }
    double lower = 2 * std::floor((value - 1) / 2) + 1;
    double upper = lower + 2;
    double pick = (value - lower < upper - value) ? lower : upper;
    return static_cast<uint64_t>(pick);
}

std::vector<ScalingRow> scaling_table(const std::vector<int> &k_list, const std::vector<double> &exponents) {
    std::vector<ScalingRow> rows;
    for (int k : k_list) {
        for (double s : exponents) {
            double raw = std::pow(static_cast<double>(k), s);
            if (!(raw <= static_cast<double>(MAX_G))) {
                throw ParameterError(
                    "g = " + std::to_string(k) + "^" + std::to_string(s) + " exceeds the 10^6 query budget");
            }
            uint64_t g = nearest_odd(raw);
            rows.push_back({k, s, g, error_probability(k, g)});
        }
    }
    return rows;
}

}  // namespace gwd
