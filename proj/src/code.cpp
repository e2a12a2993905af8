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

#include "dcc/code.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "dcc/kernels.hpp"

namespace dcc {

std::size_t Codeword::weight() const {
    auto nz = [](const std::vector<felem>& v) {
        return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](felem x) { return x != 0; }));
    };
    return nz(left) + nz(right);
}

DoubleCirculantCode::DoubleCirculantCode(const Field& field, std::uint32_t n, const Poly& a)
    : field_(field), n_(n), a_(a) {
    if (n < 1) throw precondition_error("block length must be >= 1");
    if (n % field.characteristic() == 0)
        throw precondition_error("block length must be coprime to the characteristic");
    if (a.field != field) throw precondition_error("first row over the wrong field");
    if (a.degree() >= static_cast<int>(n)) throw precondition_error("first row degree must be < n");
    for (felem c : a_.coeffs) field_.check(c);
}

Codeword DoubleCirculantCode::encode(const std::vector<felem>& message) const {
    if (message.size() != n_) throw precondition_error("message length must equal n");
    std::vector<felem> right(n_, 0);
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (message[i] == 0) continue;
        field_.check(message[i]);
        for (std::size_t k = 0; k < a_.coeffs.size(); ++k) {
            std::uint32_t j = (i + static_cast<std::uint32_t>(k)) % n_;
            right[j] = field_.add(right[j], field_.mul(message[i], a_.coeffs[k]));
        }
    }
    return Codeword{field_, message, std::move(right)};
}

bool DoubleCirculantCode::contains(const Codeword& u) const {
    if (u.field != field_) throw precondition_error("codeword over the wrong field");
    if (u.left.size() != n_ || u.right.size() != n_)
        throw precondition_error("codeword length mismatch");
    Codeword expect = encode(u.left);
    return expect.right == u.right;
}

bool DoubleCirculantCode::is_self_dual() const {
    // b(x) = a(x^{-1}) mod x^n - 1: exponents negated mod n.
    std::vector<felem> b(n_, 0);
    for (std::size_t i = 0; i < a_.coeffs.size(); ++i)
        b[(n_ - i) % n_] = a_.coeffs[i];
    Poly prod = cyclic_mul(a_, Poly(field_, std::move(b)), n_);
    return prod == Poly::constant(field_, field_.neg(1));
}

std::vector<Codeword> DoubleCirculantCode::generator_rows() const {
    std::vector<Codeword> rows;
    rows.reserve(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
        std::vector<felem> e(n_, 0);
        e[i] = 1;
        rows.push_back(encode(e));
    }
    return rows;
}

namespace {

// q^n with saturation at 2^63.
std::uint64_t message_count(std::uint64_t q, std::uint32_t n) {
    std::uint64_t c = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (c > (1ull << 63) / q) return 1ull << 63;
        c *= q;
    }
    return c;
}

// ---- packed GF(2) scan: codewords in one u64, weight by popcount --------

void scan_gf2(const DoubleCirculantCode& code, std::uint64_t* hist, unsigned* best) {
    std::uint32_t n = code.block_length();
    const Poly& a = code.first_row();
    std::uint64_t row0 = 0;
    for (std::size_t k = 0; k < a.coeffs.size(); ++k)
        if (a.coeffs[k]) row0 |= 1ull << k;
    std::uint64_t mask = n == 64 ? ~0ull : (1ull << n) - 1;
    std::vector<std::uint64_t> rows(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint64_t r = i == 0 ? row0 : (((row0 << i) | (row0 >> (n - i))) & mask);
        rows[i] = (1ull << i) | (r << n);
    }

    std::uint32_t k = std::min<std::uint32_t>(n, 14);
    std::vector<std::uint64_t> combos(1ull << k, 0);
    for (std::uint64_t i = 1; i < combos.size(); ++i)
        combos[i] = combos[i & (i - 1)] ^ rows[std::countr_zero(i)];
    std::vector<std::uint64_t> prefixes(1ull << (n - k), 0);
    for (std::uint64_t j = 1; j < prefixes.size(); ++j)
        prefixes[j] = prefixes[j & (j - 1)] ^ rows[k + std::countr_zero(j)];

    for (std::uint64_t j = 0; j < prefixes.size(); ++j) {
        if (hist != nullptr) {
            kernels::weight_hist_xor(prefixes[j], combos.data(), combos.size(), hist);
        } else {
            // Skip the all-zero message in the very first batch.
            unsigned w = j == 0
                             ? kernels::min_weight_xor(0, combos.data() + 1, combos.size() - 1)
                             : kernels::min_weight_xor(prefixes[j], combos.data(), combos.size());
            if (w < *best) *best = w;
        }
    }
}

// ---- packed GF(4) scan: 2-bit symbols, weight by nonzero pairs ----------

void scan_gf4(const DoubleCirculantCode& code, std::uint64_t* hist, unsigned* best) {
    const Field& f = code.field();
    std::uint32_t n = code.block_length();
    const Poly& a = code.first_row();

    auto pack = [&](const Poly& p, std::uint32_t offset_syms) {
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < p.coeffs.size(); ++i)
            w |= static_cast<std::uint64_t>(p.coeffs[i]) << (2 * (offset_syms + i));
        return w;
    };

    // delta[pos][d]: packed change when the message digit at pos moves from
    // d-1 to d. In characteristic 2 the rep difference is the XOR of reps.
    std::vector<std::array<std::uint64_t, 4>> delta(n);
    for (std::uint32_t pos = 0; pos < n; ++pos) {
        Poly xa = cyclic_mul(Poly::x_power(f, pos), a, n);
        for (felem d = 1; d < 4; ++d) {
            felem s = d ^ (d - 1);
            delta[pos][d] = (static_cast<std::uint64_t>(s) << (2 * pos)) | pack(scalar_mul(s, xa), n);
        }
    }

    std::uint32_t k = std::min<std::uint32_t>(n, 7);
    auto build = [&](std::uint32_t lo_pos, std::uint32_t npos) {
        std::vector<std::uint64_t> table(1ull << (2 * npos), 0);
        for (std::uint64_t i = 1; i < table.size(); ++i) {
            unsigned pos = static_cast<unsigned>(std::countr_zero(i)) / 2;
            felem d = static_cast<felem>((i >> (2 * pos)) & 3);
            table[i] = table[i - (1ull << (2 * pos))] ^ delta[lo_pos + pos][d];
        }
        return table;
    };
    auto combos = build(0, k);
    auto prefixes = build(k, n - k);

    for (std::uint64_t j = 0; j < prefixes.size(); ++j) {
        if (hist != nullptr) {
            kernels::weight_hist_xor_pairs(prefixes[j], combos.data(), combos.size(), hist);
        } else {
            unsigned w =
                j == 0 ? kernels::min_weight_xor_pairs(0, combos.data() + 1, combos.size() - 1)
                       : kernels::min_weight_xor_pairs(prefixes[j], combos.data(), combos.size());
            if (w < *best) *best = w;
        }
    }
}

// ---- byte scan for odd prime fields p < 128 ------------------------------

void scan_prime_bytes(const DoubleCirculantCode& code, std::uint64_t* hist, unsigned* best) {
    const Field& f = code.field();
    std::uint32_t n = code.block_length();
    std::uint8_t p = static_cast<std::uint8_t>(f.characteristic());
    std::size_t stride = (2 * n + 31) / 32 * 32;

    // Moving a digit from d-1 to d adds row(pos) once; the delta does not
    // depend on d over a prime field.
    std::vector<std::vector<std::uint8_t>> delta(n, std::vector<std::uint8_t>(stride, 0));
    const Poly& a = code.first_row();
    for (std::uint32_t pos = 0; pos < n; ++pos) {
        delta[pos][pos] = 1;
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            delta[pos][n + (pos + i) % n] = static_cast<std::uint8_t>(a.coeffs[i]);
    }

    std::uint32_t k = 1;
    std::uint64_t qk = p;
    while (k < n && qk * p <= 4096) {
        qk *= p;
        ++k;
    }

    auto build = [&](std::uint32_t lo_pos, std::uint32_t npos) {
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < npos; ++i) total *= p;
        std::vector<std::uint8_t> table(total * stride, 0);
        std::vector<std::uint32_t> digits(npos, 0);
        for (std::uint64_t i = 1; i < total; ++i) {
            std::uint32_t pos = 0;
            while (digits[pos] == p - 1u) {
                digits[pos] = 0;
                ++pos;
            }
            ++digits[pos];
            std::uint64_t step = 1;
            for (std::uint32_t t = 0; t < pos; ++t) step *= p;
            const std::uint8_t* prev = table.data() + (i - step) * stride;
            kernels::add_bytes_mod_p(table.data() + i * stride, prev, delta[lo_pos + pos].data(),
                                     stride, p);
        }
        return table;
    };
    auto combos = build(0, k);
    auto prefixes = build(k, n - k);
    std::uint64_t n_combos = qk;
    std::uint64_t n_prefixes = prefixes.size() / stride;

    for (std::uint64_t j = 0; j < n_prefixes; ++j) {
        const std::uint8_t* pfx = prefixes.data() + j * stride;
        if (hist != nullptr) {
            kernels::weight_hist_mod_p(pfx, combos.data(), n_combos, stride, p, hist);
        } else {
            unsigned w = j == 0 ? kernels::min_weight_mod_p(pfx, combos.data() + stride,
                                                            n_combos - 1, stride, p)
                                : kernels::min_weight_mod_p(pfx, combos.data(), n_combos, stride, p);
            if (w < *best) *best = w;
        }
    }
}

// ---- generic field-arithmetic scan (reference path) ----------------------

void scan_generic(const DoubleCirculantCode& code, std::uint64_t* hist, unsigned* best) {
    const Field& f = code.field();
    std::uint32_t n = code.block_length();
    std::uint64_t q = f.size();
    const Poly& a = code.first_row();

    // delta[pos][d][j]: change of the right block when the digit at pos
    // moves from d-1 to d (d = 0 encodes the wrap q-1 -> 0).
    std::vector<std::vector<std::vector<felem>>> delta(n);
    for (std::uint32_t pos = 0; pos < n; ++pos) {
        Poly xa = cyclic_mul(Poly::x_power(f, pos), a, n);
        delta[pos].resize(q);
        for (std::uint64_t d = 0; d < q; ++d) {
            felem diff = d == 0 ? f.neg(static_cast<felem>(q - 1))
                                : f.sub(static_cast<felem>(d), static_cast<felem>(d - 1));
            std::vector<felem> v(n, 0);
            for (std::uint32_t j = 0; j < n; ++j) v[j] = f.mul(diff, xa.at(j));
            delta[pos][d] = std::move(v);
        }
    }

    std::vector<felem> digits(n, 0), right(n, 0);
    unsigned left_w = 0;
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < n; ++i) total *= q;
    if (hist != nullptr) ++hist[0];
    for (std::uint64_t m = 1; m < total; ++m) {
        std::uint32_t pos = 0;
        while (digits[pos] == q - 1) {
            digits[pos] = 0;
            --left_w;
            for (std::uint32_t j = 0; j < n; ++j) right[j] = f.add(right[j], delta[pos][0][j]);
            ++pos;
        }
        ++digits[pos];
        if (digits[pos] == 1) ++left_w;
        const auto& dv = delta[pos][digits[pos]];
        for (std::uint32_t j = 0; j < n; ++j) right[j] = f.add(right[j], dv[j]);

        if (hist != nullptr) {
            unsigned w = left_w;
            for (std::uint32_t j = 0; j < n; ++j) w += right[j] != 0;
            ++hist[w];
        } else {
            // Early abort once the running weight reaches the current best.
            unsigned w = left_w;
            if (w >= *best) continue;
            for (std::uint32_t j = 0; j < n && w < *best; ++j) w += right[j] != 0;
            if (w < *best) *best = w;
        }
    }
}

void scan(const DoubleCirculantCode& code, std::uint64_t* hist, unsigned* best,
          std::uint64_t budget) {
    const Field& f = code.field();
    std::uint32_t n = code.block_length();
    if (message_count(f.size(), n) > budget)
        throw budget_error("message-space exhaustion infeasible at q^n > budget; use sampling in census");
    if (f.characteristic() == 2 && f.extension_degree() == 1 && n <= 32)
        scan_gf2(code, hist, best);
    else if (f.characteristic() == 2 && f.extension_degree() == 2 && n <= 16)
        scan_gf4(code, hist, best);
    else if (f.extension_degree() == 1 && f.characteristic() < 128)
        scan_prime_bytes(code, hist, best);
    else
        scan_generic(code, hist, best);
}

}  // namespace

unsigned min_distance(const DoubleCirculantCode& code, std::uint64_t budget) {
    unsigned best = 2 * code.block_length() + 1;
    scan(code, nullptr, &best, budget);
    return best;
}

std::map<unsigned, std::uint64_t> weight_distribution(const DoubleCirculantCode& code,
                                                      std::uint64_t budget) {
    std::vector<std::uint64_t> hist(std::max<std::size_t>(2 * code.block_length() + 2, 66), 0);
    scan(code, hist.data(), nullptr, budget);
    std::map<unsigned, std::uint64_t> out;
    for (std::size_t w = 0; w < hist.size(); ++w)
        if (hist[w] != 0) out[static_cast<unsigned>(w)] = hist[w];
    return out;
}

}  // namespace dcc
