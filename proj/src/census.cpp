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

#include "dcc/census.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <variant>

namespace dcc {

namespace {

// Cap on the constituent fields GF(q^{2d}) and GF(q^{e}) that the CRT
// construction materializes.
constexpr std::uint64_t kCrtFieldCap = 1ull << 26;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw budget_error("count exceeds the 64-bit range");
    return r;
}

std::uint64_t checked_pow(std::uint64_t q, std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r = checked_mul(r, q);
    return r;
}

// ---- CRT constituent machinery -------------------------------------------

struct LinearSlot {
    std::size_t factor_index;
    std::vector<Poly> residues;  // constant solutions of z^2 = -1, ascending rep
};

struct HermitianSlot {
    std::size_t factor_index;
    QuotientField K;      // GF(q)[x]/(g), g self-reciprocal of degree 2d
    Poly gen;             // multiplicative generator of K
    std::uint64_t base;   // solutions are gen^{base + k*step}, k = 0..r
    std::uint64_t step;
};

struct PairSlot {
    std::size_t h_index, h_star_index;
    QuotientField Kh;     // GF(q)[x]/(h)
    Poly h_star;
    Poly xinv_star;       // x^{-1} mod h*
};

using Slot = std::variant<LinearSlot, HermitianSlot, PairSlot>;

struct CrtSystem {
    std::uint32_t n;
    Field field;
    std::vector<Poly> idempotents;       // one per irreducible factor
    std::vector<Slot> slots;
    std::vector<std::uint64_t> choices;  // per slot
    std::uint64_t total;

    Poly assemble(const std::vector<std::uint64_t>& idx) const;
};

Poly CrtSystem::assemble(const std::vector<std::uint64_t>& idx) const {
    Poly a = Poly::zero(field);
    for (std::size_t s = 0; s < slots.size(); ++s) {
        std::uint64_t k = idx[s];
        if (const auto* lin = std::get_if<LinearSlot>(&slots[s])) {
            a = add(a, cyclic_mul(lin->residues[k], idempotents[lin->factor_index], n));
        } else if (const auto* her = std::get_if<HermitianSlot>(&slots[s])) {
            Poly b = her->K.pow(her->gen, her->base + k * her->step);
            a = add(a, cyclic_mul(b, idempotents[her->factor_index], n));
        } else {
            const auto& pr = std::get<PairSlot>(slots[s]);
            Poly u = pr.Kh.element(k + 1);
            // Partner residue: -1 / sigma(u) under the x -> x^{-1} isomorphism.
            Poly w = compose_mod(neg(pr.Kh.inv(u)), pr.xinv_star, pr.h_star);
            a = add(a, cyclic_mul(u, idempotents[pr.h_index], n));
            a = add(a, cyclic_mul(w, idempotents[pr.h_star_index], n));
        }
    }
    return a;
}

CrtSystem build_crt_system(std::uint32_t n, const Field& f) {
    if (!minus_one_is_square(f))
        throw precondition_error("-1 is not a square in GF(" + f.to_string() + ")");
    auto fac = factor_xn_minus_1(n, f);

    CrtSystem sys{n, f, {}, {}, {}, 1};
    std::vector<Poly> factors;
    std::vector<std::size_t> sr_index;
    for (const auto& sr : fac.self_reciprocal) {
        sr_index.push_back(factors.size());
        factors.push_back(sr.poly);
    }
    std::vector<std::pair<std::size_t, std::size_t>> pair_index;
    for (const auto& pr : fac.pairs) {
        pair_index.push_back({factors.size(), factors.size() + 1});
        factors.push_back(pr.h);
        factors.push_back(pr.h_star);
    }

    Poly modulus = xn_minus_1(f, n);
    for (const auto& g : factors) {
        Poly m = divmod(modulus, g).first;
        sys.idempotents.push_back(cyclic_mul(m, inv_mod(m, g), n));
    }

    for (std::size_t j = 0; j < fac.self_reciprocal.size(); ++j) {
        const auto& sr = fac.self_reciprocal[j];
        if (sr.half_degree == 0) {
            // Residue at a linear factor: a constant z with z^2 = -1.
            std::vector<Poly> roots;
            if (f.characteristic() == 2) {
                roots.push_back(Poly::constant(f, 1));
            } else {
                felem z = *sqrt_of_minus_one(f);
                felem z2 = f.neg(z);
                roots.push_back(Poly::constant(f, std::min(z, z2)));
                roots.push_back(Poly::constant(f, std::max(z, z2)));
            }
            sys.choices.push_back(roots.size());
            sys.slots.push_back(LinearSlot{sr_index[j], std::move(roots)});
        } else {
            QuotientField K(f, sr.poly);
            if (K.order() > kCrtFieldCap)
                throw budget_error("constituent field exceeds the supported size");
            std::uint64_t r = checked_pow(f.size(), sr.half_degree);
            // Solutions of b^{1+r} = -1 in the cyclic group of order r^2 - 1:
            // powers of a generator with exponent base + k (r - 1).
            std::uint64_t base = f.characteristic() == 2 ? 0 : (r - 1) / 2;
            sys.choices.push_back(r + 1);
            sys.slots.push_back(HermitianSlot{sr_index[j], K, K.generator(), base, r - 1});
        }
    }
    for (std::size_t j = 0; j < fac.pairs.size(); ++j) {
        const auto& pr = fac.pairs[j];
        QuotientField Kh(f, pr.h);
        if (Kh.order() > kCrtFieldCap)
            throw budget_error("constituent field exceeds the supported size");
        Poly xinv_star = inv_mod(Poly::x_power(f, 1), pr.h_star);
        sys.choices.push_back(Kh.order() - 1);
        sys.slots.push_back(PairSlot{pair_index[j].first, pair_index[j].second, Kh, pr.h_star,
                                     std::move(xinv_star)});
    }

    sys.total = 1;
    for (auto c : sys.choices) sys.total = checked_mul(sys.total, c);
    return sys;
}

std::uint64_t vec_rep(const Field& f, const std::vector<felem>& v) {
    std::uint64_t r = 0;
    for (std::size_t i = v.size(); i-- > 0;) r = r * f.size() + v[i];
    return r;
}

std::vector<felem> rep_vec(const Field& f, std::uint64_t rep, std::uint32_t n) {
    std::vector<felem> v(n, 0);
    for (std::uint32_t i = 0; i < n && rep > 0; ++i) {
        v[i] = static_cast<felem>(rep % f.size());
        rep /= f.size();
    }
    return v;
}

std::vector<Poly> coprime_rows(std::uint32_t n, const Field& f) {
    std::uint64_t qn = checked_pow(f.size(), n);
    Poly modulus = xn_minus_1(f, n);
    std::vector<Poly> rows;
    for (std::uint64_t rep = 0; rep < qn; ++rep) {
        Poly a(f, rep_vec(f, rep, n));
        if (gcd(a, modulus).degree() == 0) rows.push_back(std::move(a));
    }
    return rows;
}

}  // namespace

const char* to_string(CountBranch b) {
    switch (b) {
        case CountBranch::no_codes: return "no_codes";
        case CountBranch::odd_q_odd_n: return "odd_q_odd_n";
        case CountBranch::odd_q_even_n: return "odd_q_even_n";
        case CountBranch::even_q_odd_n: return "even_q_odd_n";
    }
    return "?";
}

CountReport count_self_dual_codes(std::uint32_t n, const Field& field) {
    auto fac = factor_xn_minus_1(n, field);  // also rejects gcd(n, p) != 1
    CountReport rep{n, field, minus_one_is_square(field), 0, CountBranch::no_codes, {}, false};
    rep.factors.s = fac.s();
    rep.factors.t = fac.t();
    for (const auto& sr : fac.self_reciprocal)
        if (sr.half_degree >= 1) rep.factors.d.push_back(sr.half_degree);
    for (const auto& pr : fac.pairs) rep.factors.e.push_back(pr.degree);
    rep.two_factor = fac.factor_count() == 2;
    if (!rep.exists) return rep;

    bool q_even = field.characteristic() == 2;
    std::uint64_t c;
    if (q_even) {
        rep.branch = CountBranch::even_q_odd_n;  // even n has gcd(n, p) != 1
        c = 1;
    } else if (n % 2 == 1) {
        rep.branch = CountBranch::odd_q_odd_n;
        c = 2;
    } else {
        rep.branch = CountBranch::odd_q_even_n;
        c = 4;
    }
    for (auto d : rep.factors.d) c = checked_mul(c, 1 + checked_pow(field.size(), d));
    for (auto e : rep.factors.e) c = checked_mul(c, checked_pow(field.size(), e) - 1);
    rep.count = c;
    return rep;
}

std::vector<Poly> enumerate_brute_force(std::uint32_t n, const Field& field,
                                        std::uint64_t budget) {
    if (n % field.characteristic() == 0)
        throw precondition_error("block length must be coprime to the characteristic");
    std::uint64_t qn = checked_pow(field.size(), n);
    if (qn > budget)
        throw budget_error("brute-force enumeration of q^n first rows exceeds the budget");
    std::vector<Poly> out;
    for (std::uint64_t rep = 0; rep < qn; ++rep) {
        Poly a(field, rep_vec(field, rep, n));
        if (DoubleCirculantCode(field, n, a).is_self_dual()) out.push_back(std::move(a));
    }
    return out;
}

std::vector<Poly> enumerate_crt(std::uint32_t n, const Field& field) {
    CrtSystem sys = build_crt_system(n, field);
    std::vector<Poly> out;
    out.reserve(sys.total);
    std::vector<std::uint64_t> idx(sys.slots.size(), 0);
    while (true) {
        out.push_back(sys.assemble(idx));
        std::size_t s = 0;
        while (s < idx.size() && ++idx[s] == sys.choices[s]) {
            idx[s] = 0;
            ++s;
        }
        if (s == idx.size()) break;
        if (idx.empty()) break;
    }
    std::sort(out.begin(), out.end());
    if (out.size() != sys.total || std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::logic_error("constituent tuples did not yield distinct codes");
    return out;
}

std::uint64_t membership_count(std::uint32_t n, const Field& field, const std::vector<felem>& v,
                               const std::vector<felem>& w) {
    if (v.size() != n || w.size() != n) throw precondition_error("blocks must have length n");
    Poly pv(field, v), pw(field, w);
    std::uint64_t count = 0;
    for (const auto& a : coprime_rows(n, field))
        if (cyclic_mul(a, pv, n) == pw) ++count;
    return count;
}

MembershipAudit membership_count_audit(std::uint32_t n, const Field& field,
                                       std::uint64_t word_budget) {
    auto fac = factor_xn_minus_1(n, field);
    if (fac.factor_count() != 2)
        throw precondition_error("audit requires x^n - 1 = (x - 1) h(x) with h irreducible");
    std::uint64_t qn = checked_pow(field.size(), n);
    std::uint64_t words = checked_mul(qn, qn);
    if (words > word_budget) throw budget_error("word space q^{2n} exceeds the budget");

    auto rows = coprime_rows(n, field);
    std::vector<std::uint32_t> counts(words, 0);
    for (const auto& a : rows) {
        for (std::uint64_t vrep = 0; vrep < qn; ++vrep) {
            Poly v(field, rep_vec(field, vrep, n));
            Poly w = cyclic_mul(a, v, n);
            std::vector<felem> wfull = w.coeffs;
            wfull.resize(n, 0);
            ++counts[vrep * qn + vec_rep(field, wfull)];
        }
    }

    // Constant blocks: scalar multiples of the all-ones vector.
    std::vector<bool> constant_block(qn, false);
    for (felem lam = 0; lam < field.size(); ++lam)
        constant_block[vec_rep(field, std::vector<felem>(n, lam))] = true;

    MembershipAudit audit{n,         field, words, rows.size(), field.size() - 1, 0, 0, 0, 0};
    for (std::uint64_t vrep = 0; vrep < qn; ++vrep) {
        for (std::uint64_t wrep = 0; wrep < qn; ++wrep) {
            std::uint32_t c = counts[vrep * qn + wrep];
            if (constant_block[vrep] && constant_block[wrep]) {
                ++audit.constant_words;
                audit.max_constant = std::max<std::uint64_t>(audit.max_constant, c);
            } else {
                audit.max_nonconstant = std::max<std::uint64_t>(audit.max_nonconstant, c);
                if (c > audit.bound) ++audit.violations;
            }
        }
    }
    return audit;
}

double qary_entropy(std::uint64_t q, double x) {
    if (q < 2) throw precondition_error("entropy requires q >= 2");
    double xmax = (static_cast<double>(q) - 1) / static_cast<double>(q);
    if (x < 0 || x > xmax * (1 + 1e-14)) throw precondition_error("x outside [0, (q-1)/q]");
    if (x == 0) return 0;
    double lq = std::log(static_cast<double>(q));
    double h = x * std::log(static_cast<double>(q) - 1) / lq - x * std::log(x) / lq;
    h -= (1 - x) * std::log1p(-x) / lq;
    return h;
}

double qary_entropy_inverse(std::uint64_t q, double y) {
    if (y < 0 || y > 1) throw precondition_error("y outside [0, 1]");
    double lo = 0, hi = (static_cast<double>(q) - 1) / static_cast<double>(q);
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        (qary_entropy(q, mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double gv_quarter(std::uint64_t q) { return qary_entropy_inverse(q, 0.25); }

std::vector<CensusRow> run_census(const Field& field, std::uint32_t n_min, std::uint32_t n_max,
                                  const CensusOptions& options) {
    std::vector<CensusRow> rows;
    for (std::uint32_t n = n_min; n <= n_max; ++n) {
        auto start = std::chrono::steady_clock::now();
        CensusRow row;
        row.n = n;
        row.q_label = field.to_string();
        row.gv_delta = gv_quarter(field.size());
        try {
            if (n >= 2 && n % field.characteristic() != 0)
                row.artin = artin_condition(field.size(), n);
            auto rep = count_self_dual_codes(n, field);  // throws on gcd violation
            row.exists = rep.exists;
            row.count = rep.count;
            if (rep.exists && rep.count > 0) {
                std::vector<Poly> examined;
                if (rep.count <= options.sample_size) {
                    examined = enumerate_crt(n, field);
                } else {
                    // Deterministic sample of constituent tuples.
                    CrtSystem sys = build_crt_system(n, field);
                    std::mt19937_64 eng(options.seed * 0x9E3779B97F4A7C15ull + n);
                    std::set<std::vector<std::uint64_t>> tuples;
                    std::uint64_t attempts = 0;
                    while (tuples.size() < options.sample_size &&
                           attempts < 16 * options.sample_size) {
                        std::vector<std::uint64_t> idx(sys.slots.size());
                        for (std::size_t s = 0; s < idx.size(); ++s)
                            idx[s] = eng() % sys.choices[s];
                        tuples.insert(std::move(idx));
                        ++attempts;
                    }
                    for (const auto& idx : tuples) examined.push_back(sys.assemble(idx));
                }
                row.examined = examined.size();
                unsigned best = 0;
                for (const auto& a : examined) {
                    DoubleCirculantCode code(field, n, a);
                    best = std::max(best, min_distance(code, options.distance_budget));
                }
                row.d_best = best;
                row.delta = static_cast<double>(best) / (2.0 * n);
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        row.runtime_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string census_csv(const std::vector<CensusRow>& rows, bool with_timings) {
    std::string out =
        "n,q,artin_prime,artin_primitive,two_factor,exists,count,examined,d_best,delta,gv_delta,ms\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + "," + r.q_label + ",";
        if (r.artin) {
            out += std::string(r.artin->n_prime ? "1" : "0") + "," +
                   (r.artin->primitive ? "1" : "0") + "," + (r.artin->two_factor ? "1" : "0") + ",";
        } else {
            out += ",,,";
        }
        if (r.exists) out += *r.exists ? "1" : "0";
        out += ",";
        if (r.count) out += std::to_string(*r.count);
        out += ",";
        if (r.examined) out += std::to_string(*r.examined);
        out += ",";
        if (r.d_best) out += std::to_string(*r.d_best);
        out += ",";
        if (r.delta) out += format_real(*r.delta);
        out += ",";
        out += format_real(r.gv_delta);
        out += ",";
        if (with_timings) out += format_real(r.runtime_ms);
        out += "\n";
    }
    return out;
}

}  // namespace dcc
