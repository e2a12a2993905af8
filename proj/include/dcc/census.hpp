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

#include "dcc/code.hpp"
#include "dcc/poly.hpp"

namespace dcc {

struct FactorSummary {
    std::uint32_t s = 0;               // self-reciprocal factors, linear ones included
    std::uint32_t t = 0;               // reciprocal pairs
    std::vector<std::uint32_t> d;      // half-degrees of the nonlinear self-reciprocal factors
    std::vector<std::uint32_t> e;      // degrees of the pairs
};

enum class CountBranch { no_codes, odd_q_odd_n, odd_q_even_n, even_q_odd_n };

const char* to_string(CountBranch b);

/// Closed-form count of self-dual double circulant codes of length 2n.
struct CountReport {
    std::uint32_t n;
    Field field;
    bool exists;            // -1 must be a square for any to exist
    std::uint64_t count;
    CountBranch branch;
    FactorSummary factors;
    bool two_factor;        // x^n - 1 splits into exactly two irreducibles
};

CountReport count_self_dual_codes(std::uint32_t n, const Field& field);

/// Default cap on brute-force candidate scans (q^n first rows).
inline constexpr std::uint64_t kDefaultEnumBudget = 1ull << 22;

/// All first rows a (ascending rep order) whose code is self-dual, by
/// scanning every candidate.
std::vector<Poly> enumerate_brute_force(std::uint32_t n, const Field& field,
                                        std::uint64_t budget = kDefaultEnumBudget);

/// The same set, constructed constituent-by-constituent through the CRT
/// decomposition. Requires -1 square and gcd(n, p) = 1.
std::vector<Poly> enumerate_crt(std::uint32_t n, const Field& field);

/// Number of first rows a coprime to x^n - 1 whose code contains (v, w).
std::uint64_t membership_count(std::uint32_t n, const Field& field, const std::vector<felem>& v,
                               const std::vector<felem>& w);

/// Exhaustive audit of the membership bound: every word outside the span of
/// the two constant blocks lies in at most q-1 of the coprime-row codes.
/// Requires x^n - 1 = (x - 1) h(x) with h irreducible.
struct MembershipAudit {
    std::uint32_t n;
    Field field;
    std::uint64_t words_checked;     // q^{2n}
    std::uint64_t candidates;        // rows coprime to x^n - 1
    std::uint64_t bound;             // q - 1
    std::uint64_t max_nonconstant;   // largest count over non-constant words
    std::uint64_t violations;        // non-constant words exceeding the bound
    std::uint64_t constant_words;    // words with both blocks constant
    std::uint64_t max_constant;      // largest count over constant words
};

MembershipAudit membership_count_audit(std::uint32_t n, const Field& field,
                                       std::uint64_t word_budget = kDefaultEnumBudget);

/// q-ary entropy on [0, (q-1)/q], with H(0) = 0.
double qary_entropy(std::uint64_t q, double x);

/// Inverse on [0, 1], by bisection to 1e-12.
double qary_entropy_inverse(std::uint64_t q, double y);

/// The relative-distance benchmark H_q^{-1}(1/4).
double gv_quarter(std::uint64_t q);

struct CensusOptions {
    std::uint64_t sample_size = 128;  // full enumeration up to this count, else sampled
    std::uint64_t seed = 0;
    std::uint64_t distance_budget = kDefaultDistanceBudget;
};

struct CensusRow {
    std::uint32_t n = 0;
    std::string q_label;
    std::string error;  // empty when the row completed
    std::optional<ArtinFlags> artin;
    std::optional<bool> exists;
    std::optional<std::uint64_t> count;
    std::optional<std::uint64_t> examined;
    std::optional<unsigned> d_best;
    std::optional<double> delta;  // d_best / 2n
    double gv_delta = 0;
    double runtime_ms = 0;
};

/// One row per n in [n_min, n_max]; per-row failures are recorded in the
/// row and the sweep continues. Deterministic for a fixed seed.
std::vector<CensusRow> run_census(const Field& field, std::uint32_t n_min, std::uint32_t n_max,
                                  const CensusOptions& options = {});

/// %.12g rendering used for all reals in machine output.
std::string format_real(double x);

/// CSV with the column set n, q, artin_prime, artin_primitive, two_factor,
/// exists, count, examined, d_best, delta, gv_delta, ms. The ms field is
/// blank unless timings are requested, keeping default output
/// byte-reproducible; timings go to the diagnostic stream instead.
std::string census_csv(const std::vector<CensusRow>& rows, bool with_timings = false);

}  // namespace dcc
