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

#include "dcc/kernels.hpp"

#include <bit>
#include <cstdlib>
#include <cstring>

#include "dcc/errors.hpp"
#include "dcc/kernels_ops.hpp"

namespace dcc::kernels {

namespace {

constexpr std::uint64_t kPairMask = 0x5555555555555555ull;

inline unsigned pair_weight(std::uint64_t x) {
    return static_cast<unsigned>(std::popcount((x | (x >> 1)) & kPairMask));
}

void s_weight_hist_xor(std::uint64_t prefix, const std::uint64_t* words, std::size_t count,
                       std::uint64_t* hist) {
    for (std::size_t i = 0; i < count; ++i)
        ++hist[std::popcount(prefix ^ words[i])];
}

unsigned s_min_weight_xor(std::uint64_t prefix, const std::uint64_t* words, std::size_t count) {
    unsigned best = 64;
    for (std::size_t i = 0; i < count; ++i) {
        unsigned w = static_cast<unsigned>(std::popcount(prefix ^ words[i]));
        if (w < best) best = w;
    }
    return best;
}

void s_weight_hist_xor_pairs(std::uint64_t prefix, const std::uint64_t* words, std::size_t count,
                             std::uint64_t* hist) {
    for (std::size_t i = 0; i < count; ++i) ++hist[pair_weight(prefix ^ words[i])];
}

unsigned s_min_weight_xor_pairs(std::uint64_t prefix, const std::uint64_t* words,
                                std::size_t count) {
    unsigned best = 64;
    for (std::size_t i = 0; i < count; ++i) {
        unsigned w = pair_weight(prefix ^ words[i]);
        if (w < best) best = w;
    }
    return best;
}

void s_add_bytes_mod_p(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
                       std::size_t len, std::uint8_t p) {
    for (std::size_t i = 0; i < len; ++i) {
        unsigned s = static_cast<unsigned>(a[i]) + b[i];
        dst[i] = static_cast<std::uint8_t>(s >= p ? s - p : s);
    }
}

std::size_t s_count_nonzero_bytes(const std::uint8_t* a, std::size_t len) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < len; ++i) n += a[i] != 0;
    return n;
}

void s_weight_hist_mod_p(const std::uint8_t* prefix, const std::uint8_t* combos,
                         std::size_t count, std::size_t stride, std::uint8_t p,
                         std::uint64_t* hist) {
    for (std::size_t r = 0; r < count; ++r) {
        const std::uint8_t* row = combos + r * stride;
        unsigned w = 0;
        for (std::size_t i = 0; i < stride; ++i) {
            unsigned s = static_cast<unsigned>(prefix[i]) + row[i];
            if (s >= p) s -= p;
            w += s != 0;
        }
        ++hist[w];
    }
}

unsigned s_min_weight_mod_p(const std::uint8_t* prefix, const std::uint8_t* combos,
                            std::size_t count, std::size_t stride, std::uint8_t p) {
    unsigned best = static_cast<unsigned>(stride) + 1;
    for (std::size_t r = 0; r < count; ++r) {
        const std::uint8_t* row = combos + r * stride;
        unsigned w = 0;
        for (std::size_t i = 0; i < stride; ++i) {
            unsigned s = static_cast<unsigned>(prefix[i]) + row[i];
            if (s >= p) s -= p;
            w += s != 0;
        }
        if (w < best) best = w;
    }
    return best;
}

constexpr Ops scalar_ops = {
    s_weight_hist_xor,  s_min_weight_xor,      s_weight_hist_xor_pairs, s_min_weight_xor_pairs,
    s_add_bytes_mod_p,  s_count_nonzero_bytes, s_weight_hist_mod_p,     s_min_weight_mod_p,
};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

struct Dispatch {
    const Ops* ops;
    Backend backend;
    Dispatch() {
        const char* env = std::getenv("DCC_KERNELS");
        bool force_scalar = env != nullptr && std::strcmp(env, "scalar") == 0;
        if (!force_scalar && avx2_ops() != nullptr && cpu_has_avx2()) {
            ops = avx2_ops();
            backend = Backend::avx2;
        } else {
            ops = &scalar_ops;
            backend = Backend::scalar;
        }
    }
};

Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

}  // namespace

#ifndef DCC_HAVE_AVX2
const Ops* avx2_ops() { return nullptr; }
#endif

Backend active_backend() { return dispatch().backend; }

const char* backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

bool avx2_available() { return avx2_ops() != nullptr && cpu_has_avx2(); }

void set_backend(Backend b) {
    if (b == Backend::avx2) {
        if (!avx2_available()) throw precondition_error("avx2 backend unavailable");
        dispatch().ops = avx2_ops();
    } else {
        dispatch().ops = &scalar_ops;
    }
    dispatch().backend = b;
}

void weight_hist_xor(std::uint64_t prefix, const std::uint64_t* words, std::size_t count,
                     std::uint64_t* hist) {
    dispatch().ops->weight_hist_xor(prefix, words, count, hist);
}

unsigned min_weight_xor(std::uint64_t prefix, const std::uint64_t* words, std::size_t count) {
    return dispatch().ops->min_weight_xor(prefix, words, count);
}

void weight_hist_xor_pairs(std::uint64_t prefix, const std::uint64_t* words, std::size_t count,
                           std::uint64_t* hist) {
    dispatch().ops->weight_hist_xor_pairs(prefix, words, count, hist);
}

unsigned min_weight_xor_pairs(std::uint64_t prefix, const std::uint64_t* words,
                              std::size_t count) {
    return dispatch().ops->min_weight_xor_pairs(prefix, words, count);
}

void add_bytes_mod_p(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
                     std::size_t len, std::uint8_t p) {
    dispatch().ops->add_bytes_mod_p(dst, a, b, len, p);
}

std::size_t count_nonzero_bytes(const std::uint8_t* a, std::size_t len) {
    return dispatch().ops->count_nonzero_bytes(a, len);
}

void weight_hist_mod_p(const std::uint8_t* prefix, const std::uint8_t* combos, std::size_t count,
                       std::size_t stride, std::uint8_t p, std::uint64_t* hist) {
    dispatch().ops->weight_hist_mod_p(prefix, combos, count, stride, p, hist);
}

unsigned min_weight_mod_p(const std::uint8_t* prefix, const std::uint8_t* combos,
                          std::size_t count, std::size_t stride, std::uint8_t p) {
    return dispatch().ops->min_weight_mod_p(prefix, combos, count, stride, p);
}

}  // namespace dcc::kernels
