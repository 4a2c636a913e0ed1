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

#include "gwd/oracle.h"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "gwd/errors.h"
#include "gwd/rng.h"

namespace gwd {

namespace {

void check_variable_count(unsigned n) {
    if (n < 1 || n > MAX_VARIABLES) {
        throw ParameterError("variable count must be in [1, 24], got " + std::to_string(n));
    }
}

size_t word_count(unsigned n) {
    return ((uint64_t{1} << n) + 63) / 64;
}

uint64_t popcount_words(const std::vector<uint64_t> &words) {
    uint64_t total = 0;
    for (uint64_t w : words) {
        total += std::popcount(w);
    }
    return total;
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

BooleanOracle::BooleanOracle(unsigned n, std::vector<uint64_t> words)
    : n_(n), words_(std::move(words)), weight_(popcount_words(words_)) {
}

BooleanOracle::BooleanOracle(unsigned n, std::span<const uint8_t> table) : n_(n), words_(), weight_(0) {
    check_variable_count(n);
    if (table.size() != domain_size()) {
        throw ParameterError("truth table length must be 2^n");
    }
    words_.assign(word_count(n), 0);
    for (uint64_t x = 0; x < table.size(); x++) {
        if (table[x] > 1) {
            throw ParameterError("truth table entries must be 0 or 1");
        }
        words_[x >> 6] |= uint64_t{table[x]} << (x & 63);
    }
    weight_ = popcount_words(words_);
}

BooleanOracle BooleanOracle::constant(unsigned n, bool value) {
    check_variable_count(n);
    std::vector<uint64_t> words(word_count(n), value ? ~uint64_t{0} : 0);
    uint64_t N = uint64_t{1} << n;
    if (value && N < 64) {
        words[0] = (uint64_t{1} << N) - 1;
    }
    return BooleanOracle(n, std::move(words));
}

BooleanOracle BooleanOracle::from_hex(unsigned n, std::string_view hex) {
    check_variable_count(n);
    uint64_t N = uint64_t{1} << n;
    uint64_t digits = (N + 3) / 4;
    if (hex.size() != digits) {
        throw ParameterError(
            "hex truth table for n=" + std::to_string(n) + " needs " + std::to_string(digits) + " digits");
    }
    std::vector<uint64_t> words(word_count(n), 0);
    for (uint64_t i = 0; i < digits; i++) {
        int v = hex_value(hex[digits - 1 - i]);
        if (v < 0) {
            throw ParameterError("invalid hex digit in truth table");
        }
        for (uint64_t b = 0; b < 4; b++) {
            if (!((v >> b) & 1)) {
                continue;
            }
            uint64_t x = 4 * i + b;
            if (x >= N) {
                throw ParameterError("hex truth table has nonzero padding bits");
            }
            words[x >> 6] |= uint64_t{1} << (x & 63);
        }
    }
    return BooleanOracle(n, std::move(words));
}

std::string BooleanOracle::to_hex() const {
    static constexpr char DIGITS[] = "0123456789abcdef";
    uint64_t N = domain_size();
    uint64_t digits = (N + 3) / 4;
    std::string out(digits, '0');
    for (uint64_t i = 0; i < digits; i++) {
        int v = 0;
        for (uint64_t b = 0; b < 4 && 4 * i + b < N; b++) {
            v |= bit(4 * i + b) << b;
        }
        out[digits - 1 - i] = DIGITS[v];
    }
    return out;
}

bool BooleanOracle::evaluate(uint64_t x) const {
    if (x >= domain_size()) {
        throw std::out_of_range("oracle input " + std::to_string(x) + " outside [0, 2^n)");
    }
    return bit(x);
}

BooleanOracle make_random_oracle(unsigned n, uint64_t t, uint64_t seed) {
    check_variable_count(n);
    uint64_t N = uint64_t{1} << n;
    if (t > N) {
        throw ParameterError("weight " + std::to_string(t) + " out of range [0, " + std::to_string(N) + "]");
    }

    // Partial Fisher-Yates over [0, N) with the permutation stored sparsely.
    // When t > N/2 the zero positions are chosen instead and the table inverted.
    bool invert = t > N / 2;
    uint64_t picks = invert ? N - t : t;
    std::mt19937_64 rng(seed);
    std::unordered_map<uint64_t, uint64_t> displaced;
    auto at = [&](uint64_t i) {
        auto it = displaced.find(i);
        return it == displaced.end() ? i : it->second;
    };

    std::vector<uint8_t> table(N, invert ? 1 : 0);
    for (uint64_t i = 0; i < picks; i++) {
        uint64_t j = i + uniform_below(rng, N - i);
        uint64_t vi = at(i);
        uint64_t vj = at(j);
        displaced[j] = vi;
        displaced[i] = vj;
        table[vj] = invert ? 0 : 1;
    }
    return BooleanOracle(n, table);
}

uint64_t round_weight(double w, uint64_t N) {
    if (!(w > 0 && w < 1)) {
        throw ParameterError("weight fraction must lie strictly between 0 and 1");
    }
    return static_cast<uint64_t>(std::floor(static_cast<double>(N) * w + 0.5));
}

}  // namespace gwd
