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

// Internal kernel vtable shared between the dispatcher and the per-ISA
// translation units.
namespace dcc::kernels {

struct Ops {
    void (*weight_hist_xor)(std::uint64_t, const std::uint64_t*, std::size_t, std::uint64_t*);
    unsigned (*min_weight_xor)(std::uint64_t, const std::uint64_t*, std::size_t);
    void (*weight_hist_xor_pairs)(std::uint64_t, const std::uint64_t*, std::size_t,
                                  std::uint64_t*);
    unsigned (*min_weight_xor_pairs)(std::uint64_t, const std::uint64_t*, std::size_t);
    void (*add_bytes_mod_p)(std::uint8_t*, const std::uint8_t*, const std::uint8_t*, std::size_t,
                            std::uint8_t);
    std::size_t (*count_nonzero_bytes)(const std::uint8_t*, std::size_t);
    void (*weight_hist_mod_p)(const std::uint8_t*, const std::uint8_t*, std::size_t, std::size_t,
                              std::uint8_t, std::uint64_t*);
    unsigned (*min_weight_mod_p)(const std::uint8_t*, const std::uint8_t*, std::size_t,
                                 std::size_t, std::uint8_t);
};

const Ops* avx2_ops();  // nullptr when the build has no AVX2 translation unit

}  // namespace dcc::kernels
