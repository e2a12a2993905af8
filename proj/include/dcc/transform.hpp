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
#include <string>
#include <vector>

#include "dcc/code.hpp"

namespace dcc {

/// Coordinate permutation combined with per-coordinate nonzero scalings:
/// coordinate i moves to slot perm[i], and slot j is scaled by scalars[j].
/// With apply as the group action, compose(s, t) acts as "s after t".
class MonomialTransform {
   public:
    MonomialTransform(const Field& field, std::vector<std::uint32_t> perm,
                      std::vector<felem> scalars);

    static MonomialTransform identity(const Field& field, std::uint32_t len);

    const Field& field() const { return field_; }
    std::uint32_t length() const { return static_cast<std::uint32_t>(perm_.size()); }
    const std::vector<std::uint32_t>& perm() const { return perm_; }
    const std::vector<felem>& scalars() const { return scalars_; }
    bool is_pure_permutation() const;

    std::vector<felem> apply(const std::vector<felem>& u) const;
    Codeword apply(const Codeword& u) const;

    MonomialTransform inverse() const;

    bool operator==(const MonomialTransform& o) const {
        return field_ == o.field_ && perm_ == o.perm_ && scalars_ == o.scalars_;
    }

    /// Cycle notation with 1-based indices, e.g. "(1,2,3)(4,5,6)".
    std::string cycle_notation() const;

   private:
    Field field_;
    std::vector<std::uint32_t> perm_;
    std::vector<felem> scalars_;
};

/// s after t: apply(compose(s, t), u) = apply(s, apply(t, u)).
MonomialTransform compose(const MonomialTransform& s, const MonomialTransform& t);

/// The double n-cycle (1,2,...,n)(n+1,...,2n) on length 2n, scalars one.
MonomialTransform dihedral_rotation(const Field& field, std::uint32_t n);

/// The involution (1,n+1)(2,2n)(3,2n-1)...(n,n+2) for odd n, scalars one.
MonomialTransform dihedral_reflection(const Field& field, std::uint32_t n);

/// (x, y) -> (y, -x) on block pairs of length n.
MonomialTransform antiswap(const Field& field, std::uint32_t n);

/// Permutation fixing slots 1 and n+1 and reversing the remainder of each
/// block.
MonomialTransform block_reversal(const Field& field, std::uint32_t n);

/// block_reversal composed with antiswap; squares to -identity. Requires
/// odd n and odd q.
MonomialTransform antiswap_reflection(const Field& field, std::uint32_t n);

/// C t = C, checked on the generator rows (sufficient by linearity).
bool invariant_under(const DoubleCirculantCode& code, const MonomialTransform& t);

struct RelationCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct SymmetryReport {
    std::string kind;  // "dihedral" or "consta-dihedral"
    std::vector<RelationCheck> checks;
    std::uint64_t group_order = 0;
    std::string conjugation_scalars;  // measured, not asserted

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Invariance and group relations for even q, odd n.
SymmetryReport verify_dihedral(const DoubleCirculantCode& code);

/// Invariance and projective group relations for odd q, odd n.
SymmetryReport verify_constadihedral(const DoubleCirculantCode& code);

}  // namespace dcc
