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
#include <cstdio>
#include <fstream>
#include <random>

#include "tracecodes/gf2m.hpp"

using namespace tracecodes;

TEST_CASE("polynomial text round trip") {
    CHECK(poly_mask_to_string(0x13) == "x^4+x+1");
    CHECK(poly_mask_from_string("x^4+x+1") == 0x13);
    CHECK(poly_mask_from_string("x^7+x^3+1") == 0x89);
    CHECK(poly_mask_from_string("1") == 1);
    CHECK_THROWS_AS(poly_mask_from_string("x^4 * x"), std::invalid_argument);
    CHECK_THROWS_AS(poly_mask_from_string(""), std::invalid_argument);
}

TEST_CASE("field construction rejects non-primitive moduli") {
    // x^8+x^4+x^3+x+1 is irreducible but its root has order 51
    CHECK_THROWS_AS(FieldSpec(8, 0x11B), std::invalid_argument);
    CHECK_FALSE(verify_primitive(8, 0x11B));
    // x^4+x^3+x^2+x+1 is irreducible with root of order 5
    CHECK_THROWS_AS(FieldSpec(4, 0x1F), std::invalid_argument);
    // reducible
    CHECK_THROWS_AS(FieldSpec(4, 0x11), std::invalid_argument);
    CHECK_NOTHROW(FieldSpec(8, 0x11D));
    CHECK(verify_primitive(8, 0x11D));
}

TEST_CASE("bundled moduli are primitive by the independent oracle") {
    for (int m = 2; m <= 20; ++m) CHECK(verify_primitive(m, FieldSpec::default_poly(m)));
}

TEST_CASE("multiplication basics") {
    const FieldSpec& fs = FieldSpec::bundled(5);
    FieldElement zero = gf_zero(fs), one = gf_one(fs), a = gf_alpha(fs);
    CHECK((zero * a) == zero);
    CHECK((one * a) == a);
    // alpha^30 * alpha = 1: build alpha^30 by iterated multiplication
    FieldElement x = one;
    for (int i = 0; i < 30; ++i) x = x * a;
    CHECK((x * a) == one);
    // mismatched fields
    const FieldSpec other(5, 0x29);  // x^5+x^3+1
    CHECK_THROWS_AS(a * gf_alpha(other), std::invalid_argument);
}

TEST_CASE("pow and element orders") {
    const FieldSpec& f5 = FieldSpec::bundled(5);
    CHECK(pow(gf_alpha(f5), 0) == gf_one(f5));
    CHECK(pow(gf_alpha(f5), 31) == gf_one(f5));
    CHECK_THROWS_AS(pow(gf_zero(f5), -1), std::domain_error);

    // m=4: alpha^5 generates the order-3 subgroup
    const FieldSpec& f4 = FieldSpec::bundled(4);
    FieldElement b = pow(gf_alpha(f4), 5);
    int order = 0;
    FieldElement acc = gf_one(f4);
    for (int i = 1; i <= 15; ++i) {
        acc = acc * b;
        if (acc == gf_one(f4)) {
            order = i;
            break;
        }
    }
    CHECK(order == 3);
}

TEST_CASE("trace values and balance") {
    CHECK(trace(gf_zero(FieldSpec::bundled(5))) == 0);
    CHECK(trace(gf_one(FieldSpec::bundled(5))) == 1);  // m odd
    CHECK(trace(gf_one(FieldSpec::bundled(4))) == 0);  // m even

    for (int m : {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}) {
        const FieldSpec& fs = FieldSpec::bundled(m);
        int ones = 0;
        for (std::uint32_t x = 0; x < (1u << m); ++x) {
            FieldElement e(x, fs);
            CHECK(trace(e) == trace(e * e));  // Frobenius invariance
            ones += trace(e);
        }
        CHECK(ones == 1 << (m - 1));  // balance
    }
}

TEST_CASE("trace linearity on random pairs") {
    const FieldSpec& fs = FieldSpec::bundled(11);
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        FieldElement a(rng() % (1u << 11), fs), b(rng() % (1u << 11), fs);
        CHECK(((trace(a) + trace(b)) & 1) == trace(a + b));
    }
}

TEST_CASE("exponent arithmetic in the cyclic group") {
    const FieldSpec& fs = FieldSpec::bundled(9);
    std::mt19937 rng(777);
    for (int t = 0; t < 100; ++t) {
        std::int64_t i = rng() % fs.period(), j = rng() % fs.period();
        CHECK(pow(gf_alpha(fs), i) * pow(gf_alpha(fs), j) ==
              pow(gf_alpha(fs), (i + j) % fs.period()));
    }
}

TEST_CASE("dlog inverts pow") {
    const FieldSpec& fs = FieldSpec::bundled(5);
    CHECK(dlog(gf_one(fs)) == 0);
    CHECK(dlog(gf_alpha(fs)) == 1);
    CHECK(dlog(pow(gf_alpha(fs), 17)) == 17);
    for (std::uint32_t i = 0; i < fs.period(); ++i)
        CHECK(dlog(pow(gf_alpha(fs), i)) == i);
    CHECK_THROWS_AS(dlog(gf_zero(fs)), std::domain_error);
}

TEST_CASE("inverse and negative powers") {
    const FieldSpec& fs = FieldSpec::bundled(7);
    std::mt19937 rng(31337);
    for (int t = 0; t < 50; ++t) {
        FieldElement a(1 + rng() % ((1u << 7) - 1), fs);
        CHECK(a * inverse(a) == gf_one(fs));
        CHECK(pow(a, -3) * pow(a, 3) == gf_one(fs));
    }
}

TEST_CASE("frobenius closure: x^(2^m) = x") {
    for (int m : {3, 6, 10}) {
        const FieldSpec& fs = FieldSpec::bundled(m);
        std::mt19937 rng(m);
        for (int t = 0; t < 40; ++t) {
            FieldElement a(rng() % (1u << m), fs);
            FieldElement y = a;
            for (int i = 0; i < m; ++i) y = y * y;
            CHECK(y == a);
        }
    }
}

TEST_CASE("config overrides") {
    // x^7+x^3+1 is the selectable alternate for m=7
    CHECK_NOTHROW(FieldSpec(7, poly_mask_from_string("x^7+x^3+1")));
    CHECK_THROWS_AS(FieldSpec::override_default(8, 0x11B), std::invalid_argument);

    const char* path = "tracecodes_test_poly.conf";
    {
        std::ofstream out(path);
        out << "# temporary override\n";
        out << "m=9 poly=x^9+x^5+1\n";
    }
    FieldSpec::load_config(path);
    CHECK(FieldSpec::default_poly(9) == poly_mask_from_string("x^9+x^5+1"));
    FieldSpec::override_default(9, 0x211);  // restore the shipped default
    std::remove(path);
    CHECK_THROWS_AS(FieldSpec::load_config("does-not-exist.conf"), std::invalid_argument);
}
