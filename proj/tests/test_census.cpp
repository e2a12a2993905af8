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

#include <algorithm>
#include <cmath>

#include "dcc/census.hpp"
#include "oracles.hpp"

using namespace dcc;

TEST_CASE("count formula values") {
    CHECK(count_self_dual_codes(3, Field(2, 1)).count == 3);
    CHECK(count_self_dual_codes(5, Field(2, 1)).count == 5);
    CHECK(count_self_dual_codes(11, Field(2, 1)).count == 33);
    CHECK(count_self_dual_codes(3, Field(5, 1)).count == 12);
    CHECK(count_self_dual_codes(15, Field(2, 1)).count == 225);
    CHECK(count_self_dual_codes(3, Field(2, 2)).count == 3);
    CHECK(count_self_dual_codes(3, Field(13, 1)).count == 24);

    auto none = count_self_dual_codes(5, Field(3, 1));
    CHECK(!none.exists);
    CHECK(none.count == 0);
    CHECK(none.branch == CountBranch::no_codes);

    // Even n over odd q: the four-fold branch.
    auto even = count_self_dual_codes(2, Field(5, 1));
    CHECK(even.branch == CountBranch::odd_q_even_n);
    CHECK(even.count == 4);

    CHECK_THROWS_AS(count_self_dual_codes(4, Field(2, 1)), precondition_error);
}

TEST_CASE("count formula matches the brute-force oracle across branches") {
    struct Case {
        std::uint32_t p, m, n;
    };
    for (auto [p, m, n] : {Case{2, 1, 3}, Case{2, 1, 5}, Case{2, 1, 7}, Case{2, 1, 9},
                           Case{2, 2, 3}, Case{5, 1, 3}, Case{13, 1, 3}, Case{5, 1, 2},
                           Case{13, 1, 2}, Case{3, 1, 4}, Case{3, 1, 2}}) {
        Field f(p, m);
        auto rep = count_self_dual_codes(n, f);
        auto brute = enumerate_brute_force(n, f);
        CHECK(rep.count == brute.size());
        // Cross-check against the independent matrix-criterion scan.
        auto matrix_side = oracle::self_dual_rows_matrix(f, n);
        CHECK(brute.size() == matrix_side.size());
        CHECK(std::equal(brute.begin(), brute.end(), matrix_side.begin()));
    }
}

TEST_CASE("count formula is invariant under factor reordering") {
    // The product form only consumes the multiset of (d_j), (e_j).
    auto rep = count_self_dual_codes(15, Field(2, 1));
    std::uint64_t c = 1;
    std::vector<std::uint32_t> ds = rep.factors.d, es = rep.factors.e;
    std::sort(ds.rbegin(), ds.rend());
    std::sort(es.rbegin(), es.rend());
    for (auto d : ds) c *= 1 + (1ull << d);
    for (auto e : es) c *= (1ull << e) - 1;
    CHECK(c == rep.count);
}

TEST_CASE("brute force examples") {
    Field f2(2, 1), f3(3, 1);
    auto s3 = enumerate_brute_force(3, f2);
    REQUIRE(s3.size() == 3);
    CHECK(s3[0] == Poly(f2, {1}));
    CHECK(s3[1] == Poly(f2, {0, 1}));
    CHECK(s3[2] == Poly(f2, {0, 0, 1}));

    auto s5 = enumerate_brute_force(5, f2);
    REQUIRE(s5.size() == 5);
    for (std::uint32_t i = 0; i < 5; ++i) CHECK(s5[i] == Poly::x_power(f2, i));

    CHECK(enumerate_brute_force(3, f3).empty());
    CHECK_THROWS_AS(enumerate_brute_force(30, f2, 1 << 20), budget_error);
}

TEST_CASE("crt enumeration equals brute force") {
    struct Case {
        std::uint32_t p, m, n;
    };
    for (auto [p, m, n] : {Case{2, 1, 3}, Case{2, 1, 5}, Case{2, 1, 7}, Case{2, 1, 9},
                           Case{2, 2, 3}, Case{5, 1, 3}, Case{13, 1, 3}, Case{5, 1, 2},
                           Case{2, 1, 11}, Case{2, 1, 15}}) {
        Field f(p, m);
        auto crt = enumerate_crt(n, f);
        auto brute = enumerate_brute_force(n, f);
        CHECK(crt.size() == brute.size());
        CHECK(std::equal(crt.begin(), crt.end(), brute.begin()));
        CHECK(crt.size() == count_self_dual_codes(n, f).count);
        // Every member is self-dual and invertible mod x^n - 1.
        for (const auto& a : crt) {
            CHECK(DoubleCirculantCode(f, n, a).is_self_dual());
            CHECK(gcd(a, xn_minus_1(f, n)).degree() == 0);
        }
    }
    CHECK_THROWS_AS(enumerate_crt(5, Field(3, 1)), precondition_error);
}

TEST_CASE("membership counts") {
    Field f2(2, 1);
    // u = (e1 | e2): only a = x fits.
    CHECK(membership_count(5, f2, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}) == 1);
    // u = (1 + x | x + x^2): CRT forces a = x.
    CHECK(membership_count(5, f2, {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}) == 1);
    // The all-ones word is constant and lies in many codes.
    CHECK(membership_count(5, f2, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}) == 15);
}

TEST_CASE("membership audit") {
    Field f2(2, 1);
    auto audit = membership_count_audit(5, f2);
    CHECK(audit.words_checked == 1024);
    CHECK(audit.candidates == 15);
    CHECK(audit.bound == 1);
    CHECK(audit.max_nonconstant == 1);
    CHECK(audit.violations == 0);
    CHECK(audit.constant_words == 4);
    CHECK(audit.max_constant == 15);

    // (2, 7) does not satisfy the two-factor hypothesis and is rejected.
    CHECK_THROWS_AS(membership_count_audit(7, f2), precondition_error);

    // A second field for contrast.
    auto audit3 = membership_count_audit(5, Field(3, 1));
    CHECK(audit3.bound == 2);
    CHECK(audit3.max_nonconstant <= 2);
    CHECK(audit3.violations == 0);
}

TEST_CASE("entropy") {
    CHECK(qary_entropy(2, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(qary_entropy(2, 0.0) == 0.0);
    CHECK(qary_entropy(4, 0.75) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(qary_entropy(2, 0.6), precondition_error);
    CHECK_THROWS_AS(qary_entropy(2, -0.1), precondition_error);

    CHECK(qary_entropy_inverse(2, 1.0) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(qary_entropy_inverse(2, 0.0) == doctest::Approx(0.0).epsilon(1e-9));
    double g2 = gv_quarter(2);
    CHECK(g2 > 0.04);
    CHECK(g2 < 0.043);
    CHECK(std::abs(qary_entropy(2, g2) - 0.25) <= 1e-9);

    // Mutual inversion on a grid.
    for (std::uint64_t q : {2, 3, 4, 5}) {
        for (int i = 0; i <= 100; ++i) {
            double y = i / 100.0;
            double x = qary_entropy_inverse(q, y);
            CHECK(std::abs(qary_entropy(q, x) - y) <= 1e-9);
        }
    }

    // Strictly increasing on the domain.
    for (int i = 1; i <= 50; ++i)
        CHECK(qary_entropy(3, i / 100.0) > qary_entropy(3, (i - 1) / 100.0));
}

TEST_CASE("census rows") {
    Field f2(2, 1);
    CensusOptions opt;
    auto rows = run_census(f2, 3, 13, opt);
    REQUIRE(rows.size() == 11);

    // Artin primitive flag across 3,5,7,11,13 (even n rows fail gcd).
    std::map<std::uint32_t, bool> primitive;
    for (const auto& r : rows)
        if (r.artin) primitive[r.n] = r.artin->primitive;
    CHECK(primitive.at(3));
    CHECK(primitive.at(5));
    CHECK(!primitive.at(7));
    CHECK(!primitive.at(9));
    CHECK(primitive.at(11));
    CHECK(primitive.at(13));

    const auto& r3 = rows[0];
    CHECK(r3.n == 3);
    CHECK(*r3.count == 3);
    CHECK(*r3.d_best == 2);
    CHECK(*r3.delta == doctest::Approx(1.0 / 3));

    const auto& r11 = rows[8];
    CHECK(r11.n == 11);
    CHECK(*r11.count == 33);
    CHECK(*r11.examined == 33);
    CHECK(r11.d_best.has_value());

    // Even n rows record the gcd failure and keep going.
    const auto& r4 = rows[1];
    CHECK(r4.n == 4);
    CHECK(!r4.error.empty());
    CHECK(!r4.count.has_value());
}

TEST_CASE("census sampling is deterministic and distinct from full enumeration") {
    Field f2(2, 1);
    CensusOptions small;
    small.sample_size = 10;
    auto a = run_census(f2, 11, 11, small);
    auto b = run_census(f2, 11, 11, small);
    REQUIRE(a.size() == 1);
    CHECK(*a[0].examined == 10);  // sampled: count 33 > 10
    CHECK(*a[0].d_best == *b[0].d_best);

    CensusOptions other = small;
    other.seed = 1;
    auto c = run_census(f2, 11, 11, other);
    CHECK(*c[0].examined == 10);

    // CSV determinism (timings excluded by default).
    auto rows1 = run_census(f2, 3, 9, small);
    auto rows2 = run_census(f2, 3, 9, small);
    CHECK(census_csv(rows1) == census_csv(rows2));
    CHECK(census_csv(rows1, true) != census_csv(rows1, false));
}

TEST_CASE("census csv shape") {
    Field f5(5, 1);
    auto rows = run_census(f5, 2, 3, {});
    auto csv = census_csv(rows);
    auto header_end = csv.find('\n');
    CHECK(csv.substr(0, header_end) ==
          "n,q,artin_prime,artin_primitive,two_factor,exists,count,examined,d_best,delta,gv_delta,ms");
    // Two data lines, each with 11 commas.
    std::size_t lines = 0, pos = header_end + 1;
    while (pos < csv.size()) {
        auto eol = csv.find('\n', pos);
        std::string line = csv.substr(pos, eol - pos);
        CHECK(std::count(line.begin(), line.end(), ',') == 11);
        ++lines;
        pos = eol + 1;
    }
    CHECK(lines == 2);
}
