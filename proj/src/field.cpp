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

#include "dcc/field.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

namespace dcc {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Dense GF(p)[y] arithmetic for the modulus search. Coefficients ascending,
// no canonical-form bookkeeping needed beyond what the search uses.
using PPoly = std::vector<std::uint32_t>;

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic.
PPoly pmod(PPoly f, const PPoly& g, std::uint32_t p) {
    ptrim(f);
    while (f.size() >= g.size()) {
        std::uint64_t c = f.back();
        std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::uint64_t t = f[shift + i] + (p - g[i]) % p * c % p;
            f[shift + i] = static_cast<std::uint32_t>(t % p);
        }
        ptrim(f);
    }
    return f;
}

bool divides(const PPoly& g, const PPoly& f, std::uint32_t p) {
    return pmod(f, g, p).empty();
}

// Trial division by every monic polynomial of degree 1..m/2. Fine for the
// degrees in scope (q <= 2^20).
bool irreducible(const PPoly& f, std::uint32_t p) {
    std::size_t m = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= m; ++d) {
        std::uint64_t cnt = 1;
        for (std::size_t i = 0; i < d; ++i) cnt *= p;
        for (std::uint64_t idx = 0; idx < cnt; ++idx) {
            PPoly g(d + 1, 0);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree m over GF(p),
// coefficient tuples compared from the constant term up.
PPoly canonical_modulus(std::uint32_t p, std::uint32_t m) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        PPoly f(m + 1, 0);
        // idx's most significant base-p digit becomes the constant term, so
        // ascending idx scans candidates in lexicographic tuple order.
        std::uint64_t t = idx;
        for (std::uint32_t i = m; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        f[m] = 1;
        if (irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

const PPoly& cached_modulus(std::uint32_t p, std::uint32_t m) {
    static std::map<std::pair<std::uint32_t, std::uint32_t>, PPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto [it, fresh] = cache.try_emplace({p, m});
    if (fresh) it->second = canonical_modulus(p, m);
    return it->second;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
    if (!is_prime(p)) throw precondition_error("characteristic must be prime");
    if (m < 1) throw precondition_error("extension degree must be >= 1");
    q_ = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q_ *= p;
        if (q_ > kMaxFieldSize) throw precondition_error("field size exceeds supported limit 2^20");
    }
    mod_ = cached_modulus(p, m);
}

void Field::check(felem a) const {
    if (a >= q_) throw precondition_error("element rep out of range for " + to_string());
}

felem Field::add(felem a, felem b) const {
    if (m_ == 1) return static_cast<felem>((static_cast<std::uint64_t>(a) + b) % p_);
    if (p_ == 2) return a ^ b;
    felem r = 0, pw = 1;
    while (a != 0 || b != 0) {
        r += (a % p_ + b % p_) % p_ * pw;
        a /= p_;
        b /= p_;
        pw *= p_;
    }
    return r;
}

felem Field::neg(felem a) const {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    felem r = 0, pw = 1;
    while (a != 0) {
        felem d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * pw;
        a /= p_;
        pw *= p_;
    }
    return r;
}

felem Field::sub(felem a, felem b) const { return add(a, neg(b)); }

felem Field::mul(felem a, felem b) const {
    if (m_ == 1) return static_cast<felem>(static_cast<std::uint64_t>(a) * b % p_);
    // Schoolbook product of digit vectors, then reduction by the modulus.
    std::array<std::uint32_t, 64> prod{};
    std::array<std::uint32_t, 32> da{}, db{};
    for (std::uint32_t i = 0; i < m_; ++i, a /= p_) da[i] = a % p_;
    for (std::uint32_t i = 0; i < m_; ++i, b /= p_) db[i] = b % p_;
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
    }
    for (std::uint32_t k = 2 * m_ - 2; k + 1 > m_; --k) {
        std::uint32_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::uint32_t i = 0; i < m_; ++i)
            prod[k - m_ + i] =
                (prod[k - m_ + i] + static_cast<std::uint64_t>(c) * (p_ - mod_[i]) % p_) % p_;
    }
    felem r = 0, pw = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        r += prod[i] * pw;
        pw *= p_;
    }
    return r;
}

felem Field::inv(felem a) const {
    if (a == 0) throw precondition_error("inversion of zero in " + to_string());
    return pow(a, static_cast<std::int64_t>(q_) - 2);
}

felem Field::pow(felem a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    felem r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::string Field::to_string() const {
    if (m_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(m_);
}

bool minus_one_is_square(const Field& f) {
    if (f.characteristic() == 2) return true;
    if (f.characteristic() % 4 == 1) return true;
    return f.extension_degree() % 2 == 0;
}

std::optional<felem> sqrt_of_minus_one(const Field& f) {
    if (!minus_one_is_square(f)) return std::nullopt;
    felem target = f.neg(1);
    for (felem a = 0; a < f.size(); ++a)
        if (f.mul(a, a) == target) return a;
    return std::nullopt;  // unreachable
}

Embedding::Embedding(const Field& from, const Field& to) : from_(from), to_(to), root_(0) {
    if (from.characteristic() != to.characteristic() ||
        to.extension_degree() % from.extension_degree() != 0)
        throw precondition_error("no embedding of " + from.to_string() + " into " + to.to_string());
    // Smallest-rep root of the subfield modulus in the big field. Modulus
    // coefficients are prime-subfield constants, whose reps coincide in
    // both fields.
    const auto& mod = from.modulus();
    bool found = false;
    for (std::uint64_t z = 0; z < to.size(); ++z) {
        felem acc = 0;
        for (std::size_t i = mod.size(); i-- > 0;)
            acc = to.add(to.mul(acc, static_cast<felem>(z)), mod[i]);
        if (acc == 0) {
            root_ = static_cast<felem>(z);
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("embedding root not found");
    forward_.resize(from.size());
    std::uint32_t p = from.characteristic();
    for (std::uint64_t a = 0; a < from.size(); ++a) {
        felem acc = 0;
        // Horner over base-p digits, most significant first.
        std::uint64_t digits = a;
        std::vector<std::uint32_t> d(from.extension_degree());
        for (auto& di : d) {
            di = digits % p;
            digits /= p;
        }
        for (std::size_t i = d.size(); i-- > 0;) acc = to.add(to.mul(acc, root_), d[i]);
        forward_[a] = acc;
    }
}

felem Embedding::operator()(felem a) const {
    from_.check(a);
    return forward_[a];
}

std::optional<felem> Embedding::preimage(felem a) const {
    to_.check(a);
    auto it = std::find(forward_.begin(), forward_.end(), a);
    if (it == forward_.end()) return std::nullopt;
    return static_cast<felem>(it - forward_.begin());
}

namespace {

std::uint64_t parse_u64(const std::string& s) {
    if (s.empty() || s.size() > 18 ||
        !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw precondition_error("cannot parse number \"" + s + "\"");
    std::uint64_t v = 0;
    for (char c : s) v = v * 10 + static_cast<std::uint64_t>(c - '0');
    return v;
}

}  // namespace

Field parse_field(const std::string& s) {
    auto caret = s.find('^');
    if (caret != std::string::npos) {
        std::uint64_t p = parse_u64(s.substr(0, caret));
        std::uint64_t m = parse_u64(s.substr(caret + 1));
        if (p > kMaxFieldSize || m > 32) throw precondition_error("field size exceeds supported limit 2^20");
        return Field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
    }
    std::uint64_t q = parse_u64(s);
    if (q < 2) throw precondition_error("field size must be at least 2");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t m = 0;
    std::uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++m;
    }
    if (t != 1) throw precondition_error(s + " is not a prime power");
    return Field(static_cast<std::uint32_t>(p), m);
}

}  // namespace dcc
