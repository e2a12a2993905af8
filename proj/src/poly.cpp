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

#include "dcc/poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace dcc {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (a.field != b.field) throw precondition_error("operands belong to different fields");
}

}  // namespace

Poly Poly::x_power(const Field& f, std::size_t k) {
    std::vector<felem> c(k + 1, 0);
    c[k] = 1;
    return Poly(f, std::move(c));
}

bool Poly::operator<(const Poly& o) const {
    if (coeffs.size() != o.coeffs.size()) return coeffs.size() < o.coeffs.size();
    for (std::size_t i = coeffs.size(); i-- > 0;)
        if (coeffs[i] != o.coeffs[i]) return coeffs[i] < o.coeffs[i];
    return false;
}

Poly add(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    std::vector<felem> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field.add(a.at(i), b.at(i));
    return Poly(a.field, std::move(c));
}

Poly neg(const Poly& a) {
    std::vector<felem> c(a.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field.neg(a.coeffs[i]);
    return Poly(a.field, std::move(c));
}

Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

Poly mul(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field);
    std::vector<felem> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] = a.field.add(c[i + j], a.field.mul(a.coeffs[i], b.coeffs[j]));
    }
    return Poly(a.field, std::move(c));
}

Poly scalar_mul(felem s, const Poly& a) {
    std::vector<felem> c(a.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field.mul(s, a.coeffs[i]);
    return Poly(a.field, std::move(c));
}

felem eval(const Poly& a, felem x) {
    felem acc = 0;
    for (std::size_t i = a.coeffs.size(); i-- > 0;)
        acc = a.field.add(a.field.mul(acc, x), a.coeffs[i]);
    return acc;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw precondition_error("division by the zero polynomial");
    const Field& f = a.field;
    if (a.coeffs.size() < b.coeffs.size()) return {Poly::zero(f), a};
    felem lead_inv = f.inv(b.leading());
    std::vector<felem> rem = a.coeffs;
    std::size_t bs = b.coeffs.size();
    std::vector<felem> quot(rem.size() - bs + 1, 0);
    for (std::size_t k = rem.size(); k-- > bs - 1;) {
        felem c = f.mul(rem[k], lead_inv);
        if (c == 0) continue;
        std::size_t shift = k - (bs - 1);
        quot[shift] = c;
        for (std::size_t i = 0; i < bs; ++i)
            rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b.coeffs[i]));
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly monic(const Poly& a) {
    if (a.is_zero() || a.leading() == 1) return a;
    return scalar_mul(a.field.inv(a.leading()), a);
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = mod(x, y);
        x = y;
        y = r;
    }
    return monic(x);
}

Poly cyclic_mul(const Poly& a, const Poly& b, std::uint32_t n) {
    require_same_field(a, b);
    if (n < 1) throw precondition_error("cyclic_mul requires n >= 1");
    std::vector<felem> c(n, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[(i + j) % n] = a.field.add(c[(i + j) % n], a.field.mul(a.coeffs[i], b.coeffs[j]));
    }
    return Poly(a.field, std::move(c));
}

Poly reciprocal(const Poly& f) {
    if (f.is_zero() || f.coeffs[0] == 0)
        throw precondition_error("reciprocal requires a nonzero constant term");
    std::vector<felem> c(f.coeffs.rbegin(), f.coeffs.rend());
    return monic(Poly(f.field, std::move(c)));
}

Poly xn_minus_1(const Field& f, std::uint32_t n) {
    std::vector<felem> c(n + 1, 0);
    c[0] = f.neg(1);
    c[n] = 1;
    return Poly(f, std::move(c));
}

Poly pow_mod(const Poly& a, std::uint64_t e, const Poly& g) {
    Poly base = mod(a, g);
    Poly r = Poly::constant(a.field, 1);
    while (e > 0) {
        if (e & 1) r = mod(mul(r, base), g);
        base = mod(mul(base, base), g);
        e >>= 1;
    }
    return r;
}

Poly inv_mod(const Poly& a, const Poly& g) {
    // Extended Euclid on (g, a mod g).
    const Field& f = a.field;
    Poly r0 = g, r1 = mod(a, g);
    Poly t0 = Poly::zero(f), t1 = Poly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        Poly t2 = sub(t0, mul(q, t1));
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.degree() != 0) throw precondition_error("element not invertible modulo the given polynomial");
    return mod(scalar_mul(f.inv(r0.coeffs[0]), t0), g);
}

Poly compose_mod(const Poly& f, const Poly& t, const Poly& g) {
    Poly acc = Poly::zero(f.field);
    for (std::size_t i = f.coeffs.size(); i-- > 0;)
        acc = mod(add(mul(acc, t), Poly::constant(f.field, f.coeffs[i])), g);
    return acc;
}

std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint32_t n, std::uint64_t q) {
    if (n < 1 || std::gcd<std::uint64_t>(n, q) != 1)
        throw precondition_error("cyclotomic cosets require gcd(n, q) = 1");
    std::uint64_t qn = q % n;
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::uint32_t>> cosets;
    for (std::uint32_t lead = 0; lead < n; ++lead) {
        if (seen[lead]) continue;
        std::vector<std::uint32_t> c;
        std::uint32_t i = lead;
        do {
            c.push_back(i);
            seen[i] = true;
            i = static_cast<std::uint32_t>(i * qn % n);
        } while (i != lead);
        std::sort(c.begin(), c.end());
        cosets.push_back(std::move(c));
    }
    return cosets;  // leads scanned in ascending order, so sorted by minimum
}

std::uint32_t multiplicative_order(std::uint64_t q, std::uint32_t n) {
    if (n < 1 || std::gcd<std::uint64_t>(n, q) != 1)
        throw precondition_error("multiplicative order requires gcd(n, q) = 1");
    if (n == 1) return 1;
    std::uint64_t cur = q % n;
    for (std::uint32_t e = 1; e <= n; ++e) {
        if (cur == 1) return e;
        cur = cur * (q % n) % n;
    }
    throw std::logic_error("order not found");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

namespace {

// Smallest-rep multiplicative generator of a field.
felem primitive_element(const Field& f) {
    std::uint64_t order = f.size() - 1;
    auto primes = prime_factors(order);
    for (felem z = 1; z < f.size(); ++z) {
        bool ok = true;
        for (auto ell : primes)
            if (f.pow(z, static_cast<std::int64_t>(order / ell)) == 1) {
                ok = false;
                break;
            }
        if (ok) return z;
    }
    throw std::logic_error("no primitive element found");
}

}  // namespace

XnFactorization factor_xn_minus_1(std::uint32_t n, const Field& field) {
    if (n < 1) throw precondition_error("n must be >= 1");
    if (n % field.characteristic() == 0)
        throw precondition_error("repeated-root case unsupported: gcd(n, p) != 1");

    std::uint64_t q = field.size();
    auto cosets = cyclotomic_cosets(n, q);
    std::uint32_t e = multiplicative_order(q, n);

    // Minimal polynomials of beta^c over GF(q), with beta a primitive n-th
    // root of unity found in GF(q^e).
    Field big(field.characteristic(), field.extension_degree() * e);
    Embedding emb(field, big);
    felem gamma = primitive_element(big);
    felem beta = big.pow(gamma, static_cast<std::int64_t>((big.size() - 1) / n));

    std::map<std::uint32_t, Poly> factor_by_min;  // coset minimum -> factor
    for (const auto& c : cosets) {
        std::vector<felem> acc{1};  // product over the coset of (x - beta^i), in the big field
        for (auto i : c) {
            felem root = big.pow(beta, i);
            std::vector<felem> next(acc.size() + 1, 0);
            for (std::size_t k = 0; k < acc.size(); ++k) {
                next[k + 1] = big.add(next[k + 1], acc[k]);
                next[k] = big.add(next[k], big.mul(big.neg(root), acc[k]));
            }
            acc = std::move(next);
        }
        std::vector<felem> down(acc.size());
        for (std::size_t k = 0; k < acc.size(); ++k) {
            auto pre = emb.preimage(acc[k]);
            if (!pre) throw std::logic_error("minimal polynomial has a coefficient outside GF(q)");
            down[k] = *pre;
        }
        factor_by_min.emplace(c[0], Poly(field, std::move(down)));
    }

    XnFactorization out{n, field, 1, {}, {}};

    // Classify each coset: self-reciprocal iff -C = C mod n.
    std::set<std::uint32_t> used;
    std::vector<std::uint32_t> self_mins;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pair_mins;
    for (const auto& c : cosets) {
        if (used.count(c[0])) continue;
        std::vector<std::uint32_t> negc;
        for (auto i : c) negc.push_back((n - i) % n);
        std::sort(negc.begin(), negc.end());
        if (negc == c) {
            self_mins.push_back(c[0]);
            used.insert(c[0]);
        } else {
            used.insert(c[0]);
            used.insert(negc[0]);
            pair_mins.push_back({std::min(c[0], negc[0]), std::max(c[0], negc[0])});
        }
    }

    // x - 1 first, then x + 1 for even n, then ascending coset minimum.
    std::sort(self_mins.begin(), self_mins.end(), [n](std::uint32_t a, std::uint32_t b) {
        auto key = [n](std::uint32_t v) {
            if (v == 0) return std::make_pair(0u, v);
            if (n % 2 == 0 && v == n / 2) return std::make_pair(1u, v);
            return std::make_pair(2u, v);
        };
        return key(a) < key(b);
    });
    for (auto min0 : self_mins) {
        const Poly& g = factor_by_min.at(min0);
        auto deg = static_cast<std::uint32_t>(g.degree());
        out.self_reciprocal.push_back({g, deg / 2});
    }
    std::sort(pair_mins.begin(), pair_mins.end());
    for (auto [hmin, smin] : pair_mins) {
        const Poly& h = factor_by_min.at(hmin);
        const Poly& hs = factor_by_min.at(smin);
        out.pairs.push_back({h, hs, static_cast<std::uint32_t>(h.degree())});
    }

    // Self-check: the product of all factors must reproduce x^n - 1.
    Poly prod = Poly::constant(field, out.alpha);
    for (const auto& sr : out.self_reciprocal) prod = mul(prod, sr.poly);
    for (const auto& pr : out.pairs) prod = mul(mul(prod, pr.h), pr.h_star);
    if (prod != xn_minus_1(field, n)) throw std::logic_error("factorization self-check failed");

    return out;
}

ArtinFlags artin_condition(std::uint64_t q, std::uint32_t n) {
    if (n < 2) throw precondition_error("artin_condition requires n >= 2");
    if (std::gcd<std::uint64_t>(n, q) != 1) throw precondition_error("artin_condition requires gcd(n, q) = 1");
    ArtinFlags flags{};
    flags.n_prime = is_prime(n);
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(q)));
    while (r * r > q) --r;
    while ((r + 1) * (r + 1) <= q) ++r;
    flags.q_nonsquare = r * r != q;
    flags.primitive = multiplicative_order(q, n) == n - 1;
    flags.two_factor = cyclotomic_cosets(n, q).size() == 2;
    return flags;
}

QuotientField::QuotientField(const Field& base, const Poly& modulus)
    : base_(base), mod_(monic(modulus)) {
    if (mod_.degree() < 1) throw precondition_error("quotient modulus must have degree >= 1");
    order_ = 1;
    for (int i = 0; i < mod_.degree(); ++i) {
        order_ *= base.size();
        if (order_ > (1ull << 62)) throw budget_error("quotient ring too large");
    }
}

Poly QuotientField::element(std::uint64_t rep) const {
    std::vector<felem> c;
    std::uint64_t q = base_.size();
    while (rep > 0) {
        c.push_back(static_cast<felem>(rep % q));
        rep /= q;
    }
    return Poly(base_, std::move(c));
}

std::uint64_t QuotientField::rep(const Poly& a) const {
    std::uint64_t r = 0;
    for (std::size_t i = a.coeffs.size(); i-- > 0;) r = r * base_.size() + a.coeffs[i];
    return r;
}

Poly QuotientField::mul(const Poly& a, const Poly& b) const { return mod(dcc::mul(a, b), mod_); }

Poly QuotientField::pow(const Poly& a, std::uint64_t e) const { return pow_mod(a, e, mod_); }

Poly QuotientField::inv(const Poly& a) const { return inv_mod(a, mod_); }

Poly QuotientField::x_inverse() const { return inv_mod(Poly::x_power(base_, 1), mod_); }

Poly QuotientField::generator() const {
    auto primes = prime_factors(order_ - 1);
    for (std::uint64_t z = 1; z < order_; ++z) {
        Poly cand = element(z);
        bool ok = true;
        for (auto ell : primes) {
            Poly probe = pow(cand, (order_ - 1) / ell);
            if (probe.degree() == 0 && probe.coeffs[0] == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return cand;
    }
    throw precondition_error("no generator: quotient modulus is not irreducible");
}

}  // namespace dcc
