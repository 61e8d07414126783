/*
   Copyright 2026 The tracecodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch2/catch_amalgamated.hpp>

#include "tracecodes/families.hpp"

using namespace tracecodes;

TEST_CASE("catalog validity grid") {
    CHECK(family_valid(FamilyId::f1, 3));
    CHECK_FALSE(family_valid(FamilyId::f1, 4));
    CHECK_FALSE(family_valid(FamilyId::f2, 3));
    CHECK(family_valid(FamilyId::f2, 5));
    CHECK(family_valid(FamilyId::f6, 4));
    CHECK_FALSE(family_valid(FamilyId::f8, 4));
    CHECK(family_valid(FamilyId::f8, 6));
    CHECK(family_valid(FamilyId::F1_intro, 2));
    CHECK(family_extrapolated(FamilyId::f2, 5));
    CHECK(family_extrapolated(FamilyId::f5, 5));
    CHECK(family_extrapolated(FamilyId::f7, 4));
    CHECK_FALSE(family_extrapolated(FamilyId::f7, 6));
}

TEST_CASE("family names round trip") {
    for (FamilyId id : all_families()) CHECK(family_from_name(family_name(id)) == id);
    CHECK_THROWS_AS(family_from_name("f9"), std::invalid_argument);
}

TEST_CASE("evaluation basics") {
    const FieldSpec& f5 = FieldSpec::bundled(5);
    CHECK(evaluate_family(FamilyId::f3, 5, gf_zero(f5)).is_zero());
    // three terms at x = 1 over GF(2)
    CHECK(evaluate_family(FamilyId::f3, 5, gf_one(f5)) == gf_one(f5));

    const FieldSpec& f4f = FieldSpec::bundled(4);
    FieldElement a = gf_alpha(f4f);
    FieldElement direct = a + pow(a, 4) + pow(a, 13);  // exponents 1, 2^2, 2^4-2^2+1
    CHECK(evaluate_family(FamilyId::f6, 4, a) == direct);
}

TEST_CASE("evaluation matches exponent list everywhere (m=6)") {
    const FieldSpec& fs = FieldSpec::bundled(6);
    for (FamilyId id : {FamilyId::f6, FamilyId::f7, FamilyId::f8, FamilyId::F1_intro}) {
        auto exps = family_exponents(id, 6);
        for (std::uint32_t x = 0; x < 64; ++x) {
            FieldElement e(x, fs), acc = gf_zero(fs);
            for (auto ee : exps) acc = acc + pow(e, ee);
            CHECK(evaluate_family(id, 6, e) == acc);
        }
    }
}

TEST_CASE("permutation verdicts match the published claims up to m=12") {
    for (FamilyId id : all_families()) {
        for (int m = 2; m <= 12; ++m) {
            if (!family_valid(id, m)) continue;
            PermClaim claim = family_permutation_claim(id, m);
            REQUIRE(claim != PermClaim::unspecified);
            CHECK(is_permutation(id, m) == (claim == PermClaim::permutation));
        }
    }
}

TEST_CASE("exp3") {
    CHECK(exp3(1) == 0);
    CHECK(exp3(9) == 2);
    CHECK(exp3(54) == 3);
    CHECK_THROWS_AS(exp3(0), std::domain_error);
    // 3 | 2^(m/2) + 1 whenever m = 2 mod 4
    for (int m : {6, 10, 14, 18}) CHECK(exp3((1ll << (m / 2)) + 1) >= 1);
}

TEST_CASE("kasami exponent identity") {
    // (2^2h - 2^h + 1)(2^h + 1) = 2^3h + 1 as integers
    for (int m : {5, 7, 9, 11, 13}) {
        const long long h = (m - 1) / 2;
        const long long kas = (1ll << (2 * h)) - (1ll << h) + 1;
        CHECK(kas * ((1ll << h) + 1) == (1ll << (3 * h)) + 1);
    }
}
