// Copyright 2026 The dcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dcc/poly.hpp"

namespace dcc {

/// Word of length 2n split into its two blocks.
struct Codeword {
    Field field;
    std::vector<felem> left;
    std::vector<felem> right;

    std::size_t weight() const;
    bool operator==(const Codeword& o) const {
        return field == o.field && left == o.left && right == o.right;
    }
};

/// Default cap on exhaustive scans of the q^n message space.
inline constexpr std::uint64_t kDefaultDistanceBudget = 1ull << 26;

/// Rate-1/2 code of length 2n with generator matrix (I, A), A the circulant
/// whose first row holds the coefficients of a. Requires gcd(n, p) = 1 and
/// deg a < n. Immutable.
class DoubleCirculantCode {
   public:
    DoubleCirculantCode(const Field& field, std::uint32_t n, const Poly& a);

    const Field& field() const { return field_; }
    std::uint32_t block_length() const { return n_; }
    std::uint32_t length() const { return 2 * n_; }
    const Poly& first_row() const { return a_; }

    /// (m, m·a mod x^n - 1).
    Codeword encode(const std::vector<felem>& message) const;

    /// Membership: the right block equals a times the left block.
    bool contains(const Codeword& u) const;

    /// a(x) a(x^{-1}) = -1 (mod x^n - 1), equivalently A A^t = -I.
    bool is_self_dual() const;

    /// Rows of (I, A) as length-2n words.
    std::vector<Codeword> generator_rows() const;

   private:
    Field field_;
    std::uint32_t n_;
    Poly a_;
};

/// Minimum weight over all nonzero messages, by exhaustive scan.
/// Throws budget_error when q^n exceeds the budget.
unsigned min_distance(const DoubleCirculantCode& code,
                      std::uint64_t budget = kDefaultDistanceBudget);

/// Weight counts over all q^n codewords (zero included; total mass q^n).
std::map<unsigned, std::uint64_t> weight_distribution(
    const DoubleCirculantCode& code, std::uint64_t budget = kDefaultDistanceBudget);

}  // namespace dcc
