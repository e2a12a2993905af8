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

#include <set>

#include "dcc/field.hpp"

using namespace dcc;

namespace {

// All prime powers p^m <= limit, smallest first.
std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_powers_up_to(std::uint32_t limit) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t p = 2; p <= limit; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t q = p;
        std::uint32_t m = 1;
        while (q <= limit) {
            out.push_back({p, m});
            q *= p;
            ++m;
        }
    }
    return out;
}

// Exhaustive squaring oracle.
std::set<felem> all_squares(const Field& f) {
    std::set<felem> sq;
    for (felem x = 0; x < f.size(); ++x) sq.insert(f.mul(x, x));
    return sq;
}

}  // namespace

TEST_CASE("canonical fields") {
    Field f2(2, 1);
    CHECK(f2.size() == 2);
    CHECK(f2.modulus() == std::vector<std::uint32_t>{0, 1});  // x

    Field f4(2, 2);
    CHECK(f4.size() == 4);
    CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});  // x^2+x+1

    Field f5(5, 1);
    CHECK(f5.size() == 5);
    CHECK(f5.to_string() == "5");
    CHECK(f4.to_string() == "2^2");

    // Repeated construction yields the identical spec.
    CHECK(Field(2, 2).modulus() == f4.modulus());
    CHECK(Field(2, 2) == f4);

    CHECK_THROWS_AS(Field(4, 1), precondition_error);
    CHECK_THROWS_AS(Field(6, 2), precondition_error);
    CHECK_THROWS_AS(Field(2, 0), precondition_error);
    CHECK_THROWS_AS(Field(2, 21), precondition_error);
}

TEST_CASE("basic arithmetic") {
    Field f5(5, 1);
    CHECK(f5.mul(2, 3) == 1);
    CHECK(f5.inv(2) == 3);
    CHECK(f5.add(4, 3) == 2);
    CHECK(f5.neg(2) == 3);
    CHECK(f5.pow(2, -1) == 3);
    CHECK(f5.pow(3, 0) == 1);
    CHECK_THROWS_AS(f5.inv(0), precondition_error);

    Field f4(2, 2);
    felem w = 2;  // class of x
    CHECK(f4.mul(w, w) == f4.add(w, 1));  // w^2 = w+1
    CHECK(f4.mul(w, f4.add(w, 1)) == 1);  // w * w^2 = w^3 = 1

    Field f9(3, 2);
    for (felem x = 1; x < f9.size(); ++x) CHECK(f9.mul(x, f9.inv(x)) == 1);
}

TEST_CASE("field axioms across small fields") {
    for (auto [p, m] : prime_powers_up_to(256)) {
        Field f(p, m);
        for (felem x = 0; x < f.size(); ++x) {
            CHECK(f.add(x, f.neg(x)) == 0);
            if (x != 0) CHECK(f.mul(x, f.inv(x)) == 1);
        }
    }
}

TEST_CASE("frobenius is additive") {
    for (auto [p, m] : prime_powers_up_to(64)) {
        Field f(p, m);
        for (felem x = 0; x < f.size(); ++x)
            for (felem y = 0; y < f.size(); ++y)
                CHECK(f.pow(f.add(x, y), p) == f.add(f.pow(x, p), f.pow(y, p)));
    }
}

TEST_CASE("minus one square classification vs exhaustive oracle") {
    for (auto [p, m] : prime_powers_up_to(169)) {
        Field f(p, m);
        bool oracle = all_squares(f).count(f.neg(1)) > 0;
        CHECK(minus_one_is_square(f) == oracle);
    }
}

TEST_CASE("sqrt of minus one") {
    CHECK(sqrt_of_minus_one(Field(5, 1)) == felem{2});
    CHECK(sqrt_of_minus_one(Field(2, 1)) == felem{1});
    CHECK(!sqrt_of_minus_one(Field(3, 1)).has_value());
    for (auto [p, m] : prime_powers_up_to(128)) {
        Field f(p, m);
        auto r = sqrt_of_minus_one(f);
        CHECK(r.has_value() == minus_one_is_square(f));
        if (r) CHECK(f.mul(*r, *r) == f.neg(1));
    }
}

TEST_CASE("embedding") {
    Field f4(2, 2), f16(2, 4);
    Embedding e(f4, f16);
    // Ring morphism on every pair.
    for (felem a = 0; a < 4; ++a)
        for (felem b = 0; b < 4; ++b) {
            CHECK(e(f4.add(a, b)) == f16.add(e(a), e(b)));
            CHECK(e(f4.mul(a, b)) == f16.mul(e(a), e(b)));
        }
    CHECK(e(0) == 0);
    CHECK(e(1) == 1);
    CHECK(e.preimage(e(2)) == felem{2});
    // Prime subfield embeds identically.
    Field f5(5, 1), f25(5, 2);
    Embedding e5(f5, f25);
    for (felem a = 0; a < 5; ++a) CHECK(e5(a) == a);
    CHECK_THROWS_AS(Embedding(Field(2, 2), Field(2, 3)), precondition_error);
}

TEST_CASE("parse field") {
    CHECK(parse_field("2^2") == Field(2, 2));
    CHECK(parse_field("4") == Field(2, 2));
    CHECK(parse_field("5") == Field(5, 1));
    CHECK(parse_field("13") == Field(13, 1));
    CHECK(parse_field("169") == Field(13, 2));
    CHECK_THROWS_AS(parse_field("6"), precondition_error);
    CHECK_THROWS_AS(parse_field("1"), precondition_error);
    CHECK_THROWS_AS(parse_field("abc"), precondition_error);
}
