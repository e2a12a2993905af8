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

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops of the exhaustive codeword scans. Each kernel
// has a scalar reference implementation and an AVX2 variant; the active
// backend is chosen once at startup (CPU probe, overridable with
// DCC_KERNELS=scalar) and can be forced per-test for equivalence checks.
//
// Weight conventions:
//   - xor kernels treat each u64 as a packed GF(2) codeword; weight is the
//     popcount of prefix ^ word.
//   - pair kernels treat each u64 as 32 packed 2-bit symbols (GF(4));
//     weight is the number of nonzero 2-bit groups of prefix ^ word.
//   - byte kernels treat buffers as vectors over a prime field Z_p with
//     p < 128, one symbol per byte, entries in [0, p); stride-padded tails
//     must be zero and count as weight 0.
namespace dcc::kernels {

enum class Backend { scalar, avx2 };

/// Backend selected at startup.
Backend active_backend();
const char* backend_name(Backend b);

/// True if the AVX2 variants can run on this build/CPU.
bool avx2_available();

/// Force a backend (test hook). Throws precondition_error if unavailable.
void set_backend(Backend b);

/// hist[popcount(prefix ^ words[i])] += 1 for each i. hist needs 65 slots.
void weight_hist_xor(std::uint64_t prefix, const std::uint64_t* words, std::size_t count,
                     std::uint64_t* hist);

/// min over i of popcount(prefix ^ words[i]); returns 64 on empty input.
unsigned min_weight_xor(std::uint64_t prefix, const std::uint64_t* words, std::size_t count);

/// Same pair for 2-bit symbols: weight = nonzero 2-bit groups.
void weight_hist_xor_pairs(std::uint64_t prefix, const std::uint64_t* words, std::size_t count,
                           std::uint64_t* hist);
unsigned min_weight_xor_pairs(std::uint64_t prefix, const std::uint64_t* words, std::size_t count);

/// dst[i] = (a[i] + b[i]) mod p, elementwise. Inputs < p, p < 128.
void add_bytes_mod_p(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
                     std::size_t len, std::uint8_t p);

/// Number of nonzero bytes.
std::size_t count_nonzero_bytes(const std::uint8_t* a, std::size_t len);

/// For each row r of the combo table (count rows of stride bytes):
/// hist[#nonzero((prefix + row) mod p)] += 1. Weight is taken over the full
/// stride; callers zero-pad, and 0 + 0 stays 0.
void weight_hist_mod_p(const std::uint8_t* prefix, const std::uint8_t* combos, std::size_t count,
                       std::size_t stride, std::uint8_t p, std::uint64_t* hist);

/// min over rows of the same weight; returns stride+1 on empty input.
unsigned min_weight_mod_p(const std::uint8_t* prefix, const std::uint8_t* combos,
                          std::size_t count, std::size_t stride, std::uint8_t p);

}  // namespace dcc::kernels
