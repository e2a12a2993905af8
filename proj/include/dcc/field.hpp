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
#include <optional>
#include <string>
#include <vector>

#include "dcc/errors.hpp"

namespace dcc {

// Field element rep: an integer in [0, q) whose base-p digits are the
// coordinates in the polynomial basis 1, x, ..., x^{m-1} (least significant
// digit = constant term).
using felem = std::uint32_t;

// Largest supported field size. Keeps reps in 32 bits and element
// arithmetic table-free.
inline constexpr std::uint64_t kMaxFieldSize = 1ull << 20;

/// Exact arithmetic in GF(p^m).
///
/// The reducing modulus is canonical: the lexicographically smallest monic
/// irreducible of degree m over GF(p), coefficients compared as integer
/// tuples from the constant term up. Two Field objects with equal (p, m)
/// are therefore interchangeable, and element reps are reproducible across
/// runs and platforms.
///
/// Immutable after construction; all operations are pure.
class Field {
   public:
    Field(std::uint32_t p, std::uint32_t m);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t extension_degree() const { return m_; }
    std::uint64_t size() const { return q_; }
    /// Modulus coefficients over GF(p), ascending degree, length m+1, monic.
    const std::vector<std::uint32_t>& modulus() const { return mod_; }

    felem add(felem a, felem b) const;
    felem sub(felem a, felem b) const;
    felem neg(felem a) const;
    felem mul(felem a, felem b) const;
    felem inv(felem a) const;  // throws precondition_error on a == 0
    felem pow(felem a, std::int64_t e) const;

    felem zero() const { return 0; }
    felem one() const { return 1; }

    /// Throws precondition_error unless rep < q.
    void check(felem a) const;

    /// "p" for prime fields, "p^m" otherwise.
    std::string to_string() const;

    bool operator==(const Field& o) const { return p_ == o.p_ && m_ == o.m_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

   private:
    std::uint32_t p_, m_;
    std::uint64_t q_;
    std::vector<std::uint32_t> mod_;
};

/// -1 is a square in GF(q) iff q is even, or p = 1 (mod 4), or
/// p = 3 (mod 4) and q is a square.
bool minus_one_is_square(const Field& f);

/// The element a with a^2 = -1 of smallest rep, when one exists.
std::optional<felem> sqrt_of_minus_one(const Field& f);

/// Embedding of GF(p^m) into GF(p^{mk}), sending the generator x of the
/// subfield to the root of its modulus with smallest rep in the big field.
class Embedding {
   public:
    Embedding(const Field& from, const Field& to);

    const Field& from() const { return from_; }
    const Field& to() const { return to_; }

    felem operator()(felem a) const;
    /// Inverse map where defined.
    std::optional<felem> preimage(felem a) const;

   private:
    Field from_, to_;
    felem root_;
    std::vector<felem> forward_;  // indexed by subfield rep
};

bool is_prime(std::uint64_t n);

/// Accepts "p^m" or a prime-power integer such as "4".
Field parse_field(const std::string& s);

}  // namespace dcc
