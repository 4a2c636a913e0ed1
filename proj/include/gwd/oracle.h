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

#ifndef GWD_ORACLE_H
#define GWD_ORACLE_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gwd {

constexpr unsigned MAX_VARIABLES = 24;

/// An n-variable Boolean function given by its full truth table.
///
/// Input x in {0,1}^n is identified with its integer value: bit i of x is
/// variable x_{i+1}. The weight (number of ones) is computed once at
/// construction. Instances are immutable and safe to share across threads.
class BooleanOracle {
   public:
    /// `table[x]` is f(x); its length must be 2^n.
    BooleanOracle(unsigned n, std::span<const uint8_t> table);

    /// Parses a hex truth table. The first hex digit holds the highest inputs
    /// (most significant bit = x = N-1); unused padding bits must be zero.
    static BooleanOracle from_hex(unsigned n, std::string_view hex);
    static BooleanOracle constant(unsigned n, bool value);

    std::string to_hex() const;

    unsigned num_variables() const { return n_; }
    uint64_t domain_size() const { return uint64_t{1} << n_; }
    uint64_t weight() const { return weight_; }

    /// Throws std::out_of_range for x >= N.
    bool evaluate(uint64_t x) const;
    bool operator()(uint64_t x) const { return evaluate(x); }

    /// Unchecked read, for inner loops that already bound x.
    bool bit(uint64_t x) const { return (words_[x >> 6] >> (x & 63)) & 1; }

    bool operator==(const BooleanOracle &other) const = default;

   private:
    BooleanOracle(unsigned n, std::vector<uint64_t> words);

    unsigned n_;
    std::vector<uint64_t> words_;
    uint64_t weight_;
};

/// Uniformly random weight-t function on n variables. The same (n, t, seed)
/// always produces the same table.
BooleanOracle make_random_oracle(unsigned n, uint64_t t, uint64_t seed);

/// Nearest integer to N*w, ties rounded up. Requires 0 < w < 1.
uint64_t round_weight(double w, uint64_t N);

}  // namespace gwd

#endif
