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

#include "dcc/transform.hpp"

#include <algorithm>
#include <set>

namespace dcc {

MonomialTransform::MonomialTransform(const Field& field, std::vector<std::uint32_t> perm,
                                     std::vector<felem> scalars)
    : field_(field), perm_(std::move(perm)), scalars_(std::move(scalars)) {
    if (perm_.size() != scalars_.size()) throw precondition_error("perm/scalar size mismatch");
    std::vector<bool> hit(perm_.size(), false);
    for (auto j : perm_) {
        if (j >= perm_.size() || hit[j]) throw precondition_error("perm is not a bijection");
        hit[j] = true;
    }
    for (auto s : scalars_) {
        field_.check(s);
        if (s == 0) throw precondition_error("monomial scalars must be nonzero");
    }
}

MonomialTransform MonomialTransform::identity(const Field& field, std::uint32_t len) {
    std::vector<std::uint32_t> perm(len);
    for (std::uint32_t i = 0; i < len; ++i) perm[i] = i;
    return MonomialTransform(field, std::move(perm), std::vector<felem>(len, 1));
}

bool MonomialTransform::is_pure_permutation() const {
    return std::all_of(scalars_.begin(), scalars_.end(), [](felem s) { return s == 1; });
}

std::vector<felem> MonomialTransform::apply(const std::vector<felem>& u) const {
    if (u.size() != perm_.size()) throw precondition_error("transform/vector length mismatch");
    std::vector<felem> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out[perm_[i]] = field_.mul(scalars_[perm_[i]], u[i]);
    return out;
}

Codeword MonomialTransform::apply(const Codeword& u) const {
    if (u.field != field_) throw precondition_error("transform/codeword field mismatch");
    std::vector<felem> flat = u.left;
    flat.insert(flat.end(), u.right.begin(), u.right.end());
    std::vector<felem> out = apply(flat);
    std::size_t n = u.left.size();
    return Codeword{field_, {out.begin(), out.begin() + static_cast<long>(n)},
                    {out.begin() + static_cast<long>(n), out.end()}};
}

MonomialTransform compose(const MonomialTransform& s, const MonomialTransform& t) {
    if (s.field() != t.field() || s.length() != t.length())
        throw precondition_error("composing incompatible transforms");
    std::uint32_t len = s.length();
    std::vector<std::uint32_t> perm(len);
    std::vector<felem> scal(len, 1);
    const Field& f = s.field();
    for (std::uint32_t i = 0; i < len; ++i) {
        std::uint32_t mid = t.perm()[i];
        std::uint32_t dst = s.perm()[mid];
        perm[i] = dst;
        scal[dst] = f.mul(s.scalars()[dst], t.scalars()[mid]);
    }
    return MonomialTransform(f, std::move(perm), std::move(scal));
}

MonomialTransform MonomialTransform::inverse() const {
    std::uint32_t len = length();
    std::vector<std::uint32_t> perm(len);
    std::vector<felem> scal(len);
    for (std::uint32_t j = 0; j < len; ++j) perm[perm_[j]] = j;
    for (std::uint32_t j = 0; j < len; ++j) scal[j] = field_.inv(scalars_[perm_[j]]);
    return MonomialTransform(field_, std::move(perm), std::move(scal));
}

std::string MonomialTransform::cycle_notation() const {
    std::string out;
    std::vector<bool> seen(perm_.size(), false);
    for (std::uint32_t i = 0; i < perm_.size(); ++i) {
        if (seen[i] || perm_[i] == i) continue;
        out += "(";
        std::uint32_t j = i;
        bool first = true;
        do {
            if (!first) out += ",";
            out += std::to_string(j + 1);
            seen[j] = true;
            j = perm_[j];
            first = false;
        } while (j != i);
        out += ")";
    }
    return out.empty() ? "()" : out;
}

MonomialTransform dihedral_rotation(const Field& field, std::uint32_t n) {
    if (n < 2) throw precondition_error("rotation requires n >= 2");
    std::vector<std::uint32_t> perm(2 * n);
    for (std::uint32_t i = 0; i < n; ++i) {
        perm[i] = (i + 1) % n;
        perm[n + i] = n + (i + 1) % n;
    }
    return MonomialTransform(field, std::move(perm), std::vector<felem>(2 * n, 1));
}

MonomialTransform dihedral_reflection(const Field& field, std::uint32_t n) {
    if (n < 3 || n % 2 == 0) throw precondition_error("reflection requires odd n >= 3");
    std::vector<std::uint32_t> perm(2 * n);
    perm[0] = n;
    perm[n] = 0;
    for (std::uint32_t i = 1; i < n; ++i) {
        perm[i] = 2 * n - i;
        perm[2 * n - i] = i;
    }
    return MonomialTransform(field, std::move(perm), std::vector<felem>(2 * n, 1));
}

MonomialTransform antiswap(const Field& field, std::uint32_t n) {
    std::vector<std::uint32_t> perm(2 * n);
    std::vector<felem> scal(2 * n, 1);
    for (std::uint32_t i = 0; i < n; ++i) {
        perm[i] = n + i;          // x block lands on the right, negated
        scal[n + i] = field.neg(1);
        perm[n + i] = i;          // y block lands on the left unchanged
    }
    return MonomialTransform(field, std::move(perm), std::move(scal));
}

MonomialTransform block_reversal(const Field& field, std::uint32_t n) {
    std::vector<std::uint32_t> perm(2 * n);
    perm[0] = 0;
    perm[n] = n;
    for (std::uint32_t i = 1; i < n; ++i) {
        perm[i] = n - i;
        perm[n + i] = 2 * n - i;
    }
    return MonomialTransform(field, std::move(perm), std::vector<felem>(2 * n, 1));
}

MonomialTransform antiswap_reflection(const Field& field, std::uint32_t n) {
    if (n < 3 || n % 2 == 0) throw precondition_error("antiswap reflection requires odd n >= 3");
    if (field.characteristic() == 2)
        throw precondition_error("antiswap reflection requires odd q; use the plain reflection");
    return compose(block_reversal(field, n), antiswap(field, n));
}

bool invariant_under(const DoubleCirculantCode& code, const MonomialTransform& t) {
    if (t.length() != code.length()) throw precondition_error("transform/code length mismatch");
    for (const auto& row : code.generator_rows())
        if (!code.contains(t.apply(row))) return false;
    return true;
}

namespace {

using Perm = std::vector<std::uint32_t>;

Perm pcompose(const Perm& a, const Perm& b) {  // a after b
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

// Size of the group generated by the given permutations, by closure
// enumeration, capped to keep degenerate inputs cheap.
std::uint64_t closure_order(const std::vector<Perm>& gens, std::uint64_t cap) {
    Perm id(gens.empty() ? 0 : gens[0].size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::uint32_t>(i);
    std::set<Perm> seen{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& g : frontier)
            for (const auto& gen : gens) {
                Perm h = pcompose(gen, g);
                if (seen.insert(h).second) {
                    next.push_back(std::move(h));
                    if (seen.size() > cap) return seen.size();
                }
            }
        frontier = std::move(next);
    }
    return seen.size();
}

MonomialTransform power(const MonomialTransform& t, std::uint32_t e) {
    MonomialTransform r = MonomialTransform::identity(t.field(), t.length());
    for (std::uint32_t i = 0; i < e; ++i) r = compose(t, r);
    return r;
}

std::string scalar_pattern(const MonomialTransform& t) {
    felem first = t.scalars()[0];
    bool uniform = std::all_of(t.scalars().begin(), t.scalars().end(),
                               [&](felem s) { return s == first; });
    if (uniform) return "uniform(" + std::to_string(first) + ")";
    return "mixed";
}

}  // namespace

SymmetryReport verify_dihedral(const DoubleCirculantCode& code) {
    const Field& f = code.field();
    std::uint32_t n = code.block_length();
    if (f.characteristic() != 2) throw precondition_error("verify_dihedral requires even q");
    if (n % 2 == 0 || n < 3) throw precondition_error("verify_dihedral requires odd n >= 3");

    SymmetryReport rep;
    rep.kind = "dihedral";
    MonomialTransform rot = dihedral_rotation(f, n);
    MonomialTransform refl = dihedral_reflection(f, n);
    MonomialTransform id = MonomialTransform::identity(f, 2 * n);

    rep.checks.push_back({"self_dual", code.is_self_dual(), ""});
    rep.checks.push_back({"invariant_under_rotation", invariant_under(code, rot), rot.cycle_notation()});
    rep.checks.push_back({"invariant_under_reflection", invariant_under(code, refl), refl.cycle_notation()});
    rep.checks.push_back({"rotation_order_n", power(rot, n) == id, ""});
    rep.checks.push_back({"reflection_involution", compose(refl, refl) == id, ""});
    MonomialTransform conj = compose(refl, compose(rot, refl));
    rep.checks.push_back({"conjugation_inverts_rotation", conj == rot.inverse(), ""});
    rep.group_order = closure_order({rot.perm(), refl.perm()}, 64ull * n);
    rep.checks.push_back({"group_order_2n", rep.group_order == 2ull * n, std::to_string(rep.group_order)});
    return rep;
}

SymmetryReport verify_constadihedral(const DoubleCirculantCode& code) {
    const Field& f = code.field();
    std::uint32_t n = code.block_length();
    if (f.characteristic() == 2) throw precondition_error("verify_constadihedral requires odd q");
    if (n % 2 == 0 || n < 3) throw precondition_error("verify_constadihedral requires odd n >= 3");

    SymmetryReport rep;
    rep.kind = "consta-dihedral";
    MonomialTransform rot = dihedral_rotation(f, n);
    MonomialTransform flip = antiswap_reflection(f, n);

    rep.checks.push_back({"self_dual", code.is_self_dual(), ""});
    rep.checks.push_back({"invariant_under_rotation", invariant_under(code, rot), ""});
    rep.checks.push_back({"invariant_under_flip", invariant_under(code, flip), ""});
    MonomialTransform id = MonomialTransform::identity(f, 2 * n);
    rep.checks.push_back({"rotation_order_n", power(rot, n) == id, ""});

    // flip^2 = (-1) * identity as a monomial transform.
    MonomialTransform flip2 = compose(flip, flip);
    bool minus_id = flip2.perm() == id.perm() &&
                    std::all_of(flip2.scalars().begin(), flip2.scalars().end(),
                                [&](felem s) { return s == f.neg(1); });
    rep.checks.push_back({"flip_squared_minus_identity", minus_id, ""});

    // The dihedral relation holds on permutation parts (a projective
    // statement); the scalar pattern of the conjugate is recorded only.
    MonomialTransform conj = compose(flip, compose(rot, flip.inverse()));
    bool perm_rel = conj.perm() == rot.inverse().perm();
    rep.checks.push_back({"perm_conjugation_inverts_rotation", perm_rel, ""});
    rep.conjugation_scalars = scalar_pattern(conj);

    rep.group_order = closure_order({rot.perm(), flip.perm()}, 64ull * n);
    rep.checks.push_back({"perm_group_order_2n", rep.group_order == 2ull * n, std::to_string(rep.group_order)});
    return rep;
}

}  // namespace dcc
