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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "dcc/transform.hpp"
#include "oracles.hpp"

using namespace dcc;

namespace {

MonomialTransform random_transform(const Field& f, std::uint32_t len, std::mt19937& rng) {
    std::vector<std::uint32_t> perm(len);
    for (std::uint32_t i = 0; i < len; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<felem> scal(len);
    for (auto& s : scal) s = static_cast<felem>(1 + rng() % (f.size() - 1));
    return MonomialTransform(f, std::move(perm), std::move(scal));
}

// Full-codespace invariance oracle: the image of the codeword set equals
// the codeword set.
bool image_equals_code(const DoubleCirculantCode& code, const MonomialTransform& t) {
    const Field& f = code.field();
    std::set<std::vector<felem>> words, images;
    std::vector<felem> m(code.block_length(), 0);
    do {
        Codeword u = code.encode(m);
        std::vector<felem> flat = u.left;
        flat.insert(flat.end(), u.right.begin(), u.right.end());
        Codeword v = t.apply(u);
        std::vector<felem> vflat = v.left;
        vflat.insert(vflat.end(), v.right.begin(), v.right.end());
        words.insert(flat);
        images.insert(vflat);
    } while (oracle::next_message(f, m));
    return words == images;
}

}  // namespace

TEST_CASE("rotation") {
    Field f2(2, 1);
    CHECK(dihedral_rotation(f2, 3).cycle_notation() == "(1,2,3)(4,5,6)");
    CHECK(dihedral_rotation(f2, 5).cycle_notation() == "(1,2,3,4,5)(6,7,8,9,10)");
    MonomialTransform t = dihedral_rotation(f2, 3);
    CHECK(compose(t, compose(t, t)) == MonomialTransform::identity(f2, 6));
}

TEST_CASE("reflection") {
    Field f2(2, 1);
    CHECK(dihedral_reflection(f2, 3).cycle_notation() == "(1,4)(2,6)(3,5)");
    CHECK(dihedral_reflection(f2, 5).cycle_notation() == "(1,6)(2,10)(3,9)(4,8)(5,7)");
    MonomialTransform ps = dihedral_reflection(f2, 5);
    CHECK(compose(ps, ps) == MonomialTransform::identity(f2, 10));
    CHECK_THROWS_AS(dihedral_reflection(f2, 4), precondition_error);
}

TEST_CASE("antiswap maps (x,y) to (y,-x)") {
    Field f5(5, 1);
    MonomialTransform a = antiswap(f5, 3);
    Codeword u{f5, {1, 2, 3}, {4, 0, 1}};
    Codeword v = a.apply(u);
    CHECK(v.left == std::vector<felem>{4, 0, 1});
    CHECK(v.right == std::vector<felem>{4, 3, 2});  // -1, -2, -3 mod 5
    // On (1,0,0|0,0,0): image (0,0,0|4,0,0).
    Codeword e1{f5, {1, 0, 0}, {0, 0, 0}};
    Codeword img = a.apply(e1);
    CHECK(img.left == std::vector<felem>{0, 0, 0});
    CHECK(img.right == std::vector<felem>{4, 0, 0});
}

TEST_CASE("antiswap reflection squares to minus identity") {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 3}, {5, 7}, {13, 3}}) {
        Field f(p, 1);
        MonomialTransform m = antiswap_reflection(f, n);
        MonomialTransform m2 = compose(m, m);
        CHECK(m2.perm() == MonomialTransform::identity(f, 2 * n).perm());
        for (auto s : m2.scalars()) CHECK(s == f.neg(1));
    }
    CHECK_THROWS_AS(antiswap_reflection(Field(2, 1), 3), precondition_error);
}

TEST_CASE("apply basics and composition property") {
    Field f2(2, 1);
    MonomialTransform t = dihedral_rotation(f2, 3);
    Codeword u{f2, {1, 0, 0}, {0, 0, 0}};
    Codeword v = t.apply(u);
    CHECK(v.left == std::vector<felem>{0, 1, 0});
    CHECK(v.right == std::vector<felem>{0, 0, 0});
    CHECK(MonomialTransform::identity(f2, 6).apply(u) == u);

    std::mt19937 rng(3);
    Field f7(7, 1);
    for (int it = 0; it < 100; ++it) {
        auto s = random_transform(f7, 8, rng);
        auto t2 = random_transform(f7, 8, rng);
        std::vector<felem> x(8);
        for (auto& d : x) d = static_cast<felem>(rng() % 7);
        CHECK(compose(s, t2).apply(x) == s.apply(t2.apply(x)));
        // Inverse undoes.
        CHECK(s.inverse().apply(s.apply(x)) == x);
    }
}

TEST_CASE("invariance") {
    Field f2(2, 1);
    DoubleCirculantCode idcode(f2, 3, Poly::constant(f2, 1));
    CHECK(invariant_under(idcode, MonomialTransform::identity(f2, 6)));
    CHECK(invariant_under(idcode, dihedral_rotation(f2, 3)));

    // A bare transposition of the first two coordinates.
    std::vector<std::uint32_t> perm{1, 0, 2, 3, 4, 5};
    MonomialTransform swap01(f2, perm, std::vector<felem>(6, 1));
    CHECK(invariant_under(idcode, swap01) == image_equals_code(idcode, swap01));
}

TEST_CASE("invariance matches the full-codespace oracle") {
    std::mt19937 rng(23);
    struct Case {
        std::uint32_t p, n;
    };
    for (auto [p, n] : {Case{2, 5}, Case{3, 4}, Case{5, 3}}) {
        Field f(p, 1);
        for (int it = 0; it < 8; ++it) {
            std::vector<felem> c(n);
            for (auto& d : c) d = static_cast<felem>(rng() % p);
            DoubleCirculantCode code(f, n, Poly(f, c));
            auto t = random_transform(f, 2 * n, rng);
            CHECK(invariant_under(code, t) == image_equals_code(code, t));
            CHECK(invariant_under(code, dihedral_rotation(f, n)) ==
                  image_equals_code(code, dihedral_rotation(f, n)));
        }
    }
}

TEST_CASE("circulant transpose via the reversal permutation") {
    // P with 1-indexed map i -> n+1-i satisfies P A P = A^t for circulant A.
    std::mt19937 rng(31);
    for (std::uint32_t n : {3u, 5u, 7u, 9u, 11u}) {
        for (std::uint32_t pp : {2u, 5u}) {
            Field f(pp, 1);
            std::vector<felem> c(n);
            for (auto& d : c) d = static_cast<felem>(rng() % pp);
            auto A = oracle::circulant(f, n, Poly(f, c));
            oracle::Matrix P(n, std::vector<felem>(n, 0));
            for (std::uint32_t i = 0; i < n; ++i) P[i][n - 1 - i] = 1;
            auto PAP = oracle::matmul(f, P, oracle::matmul(f, A, P));
            CHECK(PAP == oracle::transpose(A));
        }
    }
}

TEST_CASE("dihedral verification") {
    Field f2(2, 1);
    DoubleCirculantCode code(f2, 3, Poly(f2, {0, 1}));
    REQUIRE(code.is_self_dual());
    auto rep = verify_dihedral(code);
    CHECK(rep.all_pass());
    CHECK(rep.group_order == 6);

    // tau-conjugation relation at n = 5 and group order 10, independent of
    // any particular code.
    MonomialTransform rot = dihedral_rotation(f2, 5);
    MonomialTransform refl = dihedral_reflection(f2, 5);
    CHECK(compose(refl, compose(rot, refl)) == rot.inverse());
    DoubleCirculantCode c5(f2, 5, Poly(f2, {0, 1}));
    auto rep5 = verify_dihedral(c5);
    CHECK(rep5.all_pass());
    CHECK(rep5.group_order == 10);

    // Non-self-dual input fails the first check but still reports.
    DoubleCirculantCode bad(f2, 3, Poly(f2, {1, 1}));
    auto repb = verify_dihedral(bad);
    CHECK(!repb.all_pass());
    CHECK(repb.checks[0].name == "self_dual");
    CHECK(!repb.checks[0].pass);

    CHECK_THROWS_AS(verify_dihedral(DoubleCirculantCode(Field(5, 1), 3, Poly::constant(Field(5, 1), 2))),
                    precondition_error);
}

TEST_CASE("consta-dihedral verification") {
    Field f5(5, 1);
    DoubleCirculantCode code(f5, 3, Poly::constant(f5, 2));
    REQUIRE(code.is_self_dual());
    auto rep = verify_constadihedral(code);
    CHECK(rep.all_pass());
    CHECK(rep.group_order == 6);
    CHECK(!rep.conjugation_scalars.empty());

    CHECK_THROWS_AS(verify_constadihedral(DoubleCirculantCode(Field(2, 1), 3, Poly::constant(Field(2, 1), 1))),
                    precondition_error);
}
