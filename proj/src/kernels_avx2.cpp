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

// AVX2 kernel variants. This translation unit is compiled with -mavx2; the
// dispatcher only hands out these pointers after a runtime CPU probe.

#include <immintrin.h>

#include <bit>
#include <cstdint>

#include "dcc/kernels_ops.hpp"

namespace dcc::kernels {

namespace {

// Per-byte popcount via the nibble lookup table.
inline __m256i popcount_epi8(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

// 4 popcounts of the 4 u64 lanes, returned as epi64.
inline __m256i popcount_epi64(__m256i v) {
    return _mm256_sad_epu8(popcount_epi8(v), _mm256_setzero_si256());
}

// Map each u64 lane of packed 2-bit symbols to a bit mask of nonzero symbols.
inline __m256i pair_nonzero_mask(__m256i v) {
    const __m256i pairs = _mm256_set1_epi64x(0x5555555555555555ull);
    return _mm256_and_si256(_mm256_or_si256(v, _mm256_srli_epi64(v, 1)), pairs);
}

inline unsigned pair_weight_u64(std::uint64_t x) {
    return static_cast<unsigned>(std::popcount((x | (x >> 1)) & 0x5555555555555555ull));
}

template <bool kPairs>
void hist_xor_impl(std::uint64_t prefix, const std::uint64_t* words, std::size_t count,
                   std::uint64_t* hist) {
    const __m256i pfx = _mm256_set1_epi64x(static_cast<long long>(prefix));
    std::size_t i = 0;
    alignas(32) std::uint64_t cnt[4];
    for (; i + 4 <= count; i += 4) {
        __m256i v = _mm256_xor_si256(pfx, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i)));
        if constexpr (kPairs) v = pair_nonzero_mask(v);
        _mm256_store_si256(reinterpret_cast<__m256i*>(cnt), popcount_epi64(v));
        ++hist[cnt[0]];
        ++hist[cnt[1]];
        ++hist[cnt[2]];
        ++hist[cnt[3]];
    }
    for (; i < count; ++i) {
        std::uint64_t x = prefix ^ words[i];
        ++hist[kPairs ? pair_weight_u64(x) : static_cast<unsigned>(std::popcount(x))];
    }
}

template <bool kPairs>
unsigned min_xor_impl(std::uint64_t prefix, const std::uint64_t* words, std::size_t count) {
    const __m256i pfx = _mm256_set1_epi64x(static_cast<long long>(prefix));
    __m256i best = _mm256_set1_epi64x(64);
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256i v = _mm256_xor_si256(pfx, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i)));
        if constexpr (kPairs) v = pair_nonzero_mask(v);
        __m256i c = popcount_epi64(v);
        // Unsigned epi64 min via compare-and-blend; counts are <= 64 so the
        // signed compare is safe.
        __m256i gt = _mm256_cmpgt_epi64(best, c);
        best = _mm256_blendv_epi8(best, c, gt);
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), best);
    unsigned out = 64;
    for (auto l : lanes)
        if (l < out) out = static_cast<unsigned>(l);
    for (; i < count; ++i) {
        std::uint64_t x = prefix ^ words[i];
        unsigned w = kPairs ? pair_weight_u64(x) : static_cast<unsigned>(std::popcount(x));
        if (w < out) out = w;
    }
    return out;
}

void a_weight_hist_xor(std::uint64_t prefix, const std::uint64_t* words, std::size_t count,
                       std::uint64_t* hist) {
    hist_xor_impl<false>(prefix, words, count, hist);
}

unsigned a_min_weight_xor(std::uint64_t prefix, const std::uint64_t* words, std::size_t count) {
    return min_xor_impl<false>(prefix, words, count);
}

void a_weight_hist_xor_pairs(std::uint64_t prefix, const std::uint64_t* words, std::size_t count,
                             std::uint64_t* hist) {
    hist_xor_impl<true>(prefix, words, count, hist);
}

unsigned a_min_weight_xor_pairs(std::uint64_t prefix, const std::uint64_t* words,
                                std::size_t count) {
    return min_xor_impl<true>(prefix, words, count);
}

// a + b mod p for bytes < p < 128: add, then pick min(sum, sum - p) as
// unsigned bytes; sum - p wraps above 127 exactly when sum < p.
inline __m256i add_mod_p_epi8(__m256i a, __m256i b, __m256i pv) {
    __m256i s = _mm256_add_epi8(a, b);
    return _mm256_min_epu8(s, _mm256_sub_epi8(s, pv));
}

void a_add_bytes_mod_p(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
                       std::size_t len, std::uint8_t p) {
    const __m256i pv = _mm256_set1_epi8(static_cast<char>(p));
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), add_mod_p_epi8(va, vb, pv));
    }
    for (; i < len; ++i) {
        unsigned s = static_cast<unsigned>(a[i]) + b[i];
        dst[i] = static_cast<std::uint8_t>(s >= p ? s - p : s);
    }
}

std::size_t a_count_nonzero_bytes(const std::uint8_t* a, std::size_t len) {
    std::size_t n = 0;
    std::size_t i = 0;
    const __m256i zero = _mm256_setzero_si256();
    for (; i + 32 <= len; i += 32) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, zero)));
        n += 32u - static_cast<unsigned>(std::popcount(mask));
    }
    for (; i < len; ++i) n += a[i] != 0;
    return n;
}

// Weight of (prefix + row) mod p over one stride. Strides are multiples of
// 32 in practice; a scalar tail covers the general case.
inline unsigned row_weight_mod_p(const std::uint8_t* prefix, const std::uint8_t* row,
                                 std::size_t stride, __m256i pv, std::uint8_t p) {
    unsigned w = 0;
    std::size_t i = 0;
    const __m256i zero = _mm256_setzero_si256();
    for (; i + 32 <= stride; i += 32) {
        __m256i vp = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prefix + i));
        __m256i vr = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
        __m256i s = add_mod_p_epi8(vp, vr, pv);
        unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(s, zero)));
        w += 32u - static_cast<unsigned>(std::popcount(mask));
    }
    for (; i < stride; ++i) {
        unsigned s = static_cast<unsigned>(prefix[i]) + row[i];
        if (s >= p) s -= p;
        w += s != 0;
    }
    return w;
}

void a_weight_hist_mod_p(const std::uint8_t* prefix, const std::uint8_t* combos,
                         std::size_t count, std::size_t stride, std::uint8_t p,
                         std::uint64_t* hist) {
    const __m256i pv = _mm256_set1_epi8(static_cast<char>(p));
    for (std::size_t r = 0; r < count; ++r)
        ++hist[row_weight_mod_p(prefix, combos + r * stride, stride, pv, p)];
}

unsigned a_min_weight_mod_p(const std::uint8_t* prefix, const std::uint8_t* combos,
                            std::size_t count, std::size_t stride, std::uint8_t p) {
    const __m256i pv = _mm256_set1_epi8(static_cast<char>(p));
    unsigned best = static_cast<unsigned>(stride) + 1;
    for (std::size_t r = 0; r < count; ++r) {
        unsigned w = row_weight_mod_p(prefix, combos + r * stride, stride, pv, p);
        if (w < best) best = w;
    }
    return best;
}

constexpr Ops avx2_table = {
    a_weight_hist_xor,  a_min_weight_xor,      a_weight_hist_xor_pairs, a_min_weight_xor_pairs,
    a_add_bytes_mod_p,  a_count_nonzero_bytes, a_weight_hist_mod_p,     a_min_weight_mod_p,
};

}  // namespace

const Ops* avx2_ops() { return &avx2_table; }

}  // namespace dcc::kernels
