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
#include <utility>
#include <vector>

#include "dcc/field.hpp"

namespace dcc {

/// Polynomial over a finite field. Coefficients ascending in degree,
/// canonical form: no trailing zeros (the zero polynomial has an empty
/// coefficient list).
struct Poly {
    Field field;
    std::vector<felem> coeffs;

    explicit Poly(const Field& f) : field(f) {}
    Poly(const Field& f, std::vector<felem> c) : field(f), coeffs(std::move(c)) { trim(); }

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly constant(const Field& f, felem c) { return Poly(f, {c}); }
    static Poly x_power(const Field& f, std::size_t k);

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    felem at(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
    felem leading() const { return coeffs.empty() ? 0 : coeffs.back(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    bool operator==(const Poly& o) const { return field == o.field && coeffs == o.coeffs; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    /// Canonical ascending order: compare as q-ary numbers, low digit =
    /// constant term.
    bool operator<(const Poly& o) const;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly scalar_mul(felem s, const Poly& a);
felem eval(const Poly& a, felem x);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic unless zero
Poly monic(const Poly& a);

/// a * b reduced modulo x^n - 1 (indices folded mod n).
Poly cyclic_mul(const Poly& a, const Poly& b, std::uint32_t n);

/// Monic normalization of x^{deg f} f(1/x). Requires f(0) != 0.
Poly reciprocal(const Poly& f);

/// x^n - 1 over the given field.
Poly xn_minus_1(const Field& f, std::uint32_t n);

Poly pow_mod(const Poly& a, std::uint64_t e, const Poly& g);
/// Inverse of a modulo g; requires gcd(a, g) = 1.
Poly inv_mod(const Poly& a, const Poly& g);
/// f(t) reduced modulo g.
Poly compose_mod(const Poly& f, const Poly& t, const Poly& g);

/// Partition of {0,...,n-1} into q-cyclotomic cosets mod n, each sorted,
/// list sorted by smallest element. Requires gcd(n, q) = 1.
std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint32_t n, std::uint64_t q);

/// Multiplicative order of q modulo n; requires gcd(n, q) = 1.
std::uint32_t multiplicative_order(std::uint64_t q, std::uint32_t n);

struct SelfReciprocalFactor {
    Poly poly;
    std::uint32_t half_degree;  // deg = 2*half_degree, 0 for the linear factors
};

struct ReciprocalPair {
    Poly h;
    Poly h_star;
    std::uint32_t degree;  // deg h = deg h_star
};

/// Factorization of x^n - 1 into irreducible polynomials over GF(q),
/// classified into self-reciprocal factors and reciprocal pairs.
///
/// self_reciprocal starts with x - 1 and, for even n, x + 1; the remaining
/// factors follow in order of smallest cyclotomic coset element. Within a
/// pair, h is the member whose coset has the smaller minimum.
struct XnFactorization {
    std::uint32_t n;
    Field field;
    felem alpha;  // leading scalar; 1 under the monic convention
    std::vector<SelfReciprocalFactor> self_reciprocal;
    std::vector<ReciprocalPair> pairs;

    std::uint32_t s() const { return static_cast<std::uint32_t>(self_reciprocal.size()); }
    std::uint32_t t() const { return static_cast<std::uint32_t>(pairs.size()); }
    /// Number of irreducible factors, s + 2t.
    std::uint32_t factor_count() const { return s() + 2 * t(); }
};

/// Requires gcd(n, p) = 1 (the squarefree case); throws precondition_error
/// otherwise ("repeated-root case unsupported").
XnFactorization factor_xn_minus_1(std::uint32_t n, const Field& field);

struct ArtinFlags {
    bool n_prime;
    bool q_nonsquare;
    bool primitive;   // multiplicative order of q mod n is n-1
    bool two_factor;  // x^n - 1 has exactly two irreducible factors over GF(q)
};

/// Requires gcd(n, q) = 1 and n >= 2.
ArtinFlags artin_condition(std::uint64_t q, std::uint32_t n);

/// Arithmetic in the quotient GF(q)[x]/(modulus); a field when the modulus
/// is irreducible. Elements are polynomials of degree < deg(modulus).
class QuotientField {
   public:
    QuotientField(const Field& base, const Poly& modulus);

    const Field& base() const { return base_; }
    const Poly& modulus() const { return mod_; }
    std::uint64_t order() const { return order_; }  // q^deg

    Poly element(std::uint64_t rep) const;  // base-q digits -> coefficients
    std::uint64_t rep(const Poly& a) const;

    Poly mul(const Poly& a, const Poly& b) const;
    Poly pow(const Poly& a, std::uint64_t e) const;
    Poly inv(const Poly& a) const;
    Poly x_inverse() const;  // x^{-1} mod modulus

    /// Smallest-rep generator of the multiplicative group. Requires an
    /// irreducible modulus.
    Poly generator() const;

   private:
    Field base_;
    Poly mod_;
    std::uint64_t order_;
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending

}  // namespace dcc
