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

#include "tracecodes/predict.hpp"
#include "tracecodes/report.hpp"

using namespace tracecodes;

TEST_CASE("welch prediction at m=5") {
    Prediction p = predict(FamilyId::f3, 5, CosetTable::bundled(5));
    CHECK(p.span == 16);
    CHECK(p.dim == 15);
    CHECK(p.includes_zero);
    CHECK(p.leaders == std::vector<std::uint32_t>{1, 3, 5});
    CHECK(p.d_lo == 8);
    CHECK(p.d_hi == 8);
    CHECK(p.formula_matches_set);
}

TEST_CASE("smallest odd-m prediction") {
    Prediction p = predict(FamilyId::f1, 3, CosetTable::bundled(3));
    CHECK(p.span == 4);
    CHECK(p.dim == 3);
    CHECK(p.d_lo == 4);
    CHECK(p.d_hi == 4);
}

TEST_CASE("extrapolated three-coset prediction collapses at m=5") {
    // at m=5 two of the displayed cosets coincide and cancel
    Prediction p = predict(FamilyId::f2, 5, CosetTable::bundled(5));
    CHECK(p.extrapolated);
    CHECK(p.span == 6);
    CHECK(p.dim == 25);
    CHECK(p.leaders == std::vector<std::uint32_t>{7});
    CHECK(p.formula_span == -1);  // stated formula requires m >= 7
}

TEST_CASE("even-m half-shift family: stated span disagrees with its own display") {
    // The stated arithmetic span counts the coset of 1 + 2^(m/2) at half
    // size, but that coset's trace terms vanish identically, and at m >= 8
    // the displayed product also repeats the coset of 5 + 2^(m/2+1).  The
    // set-built span is the computable truth; the flat formula is not.
    Prediction p6 = predict(FamilyId::f8, 6, CosetTable::bundled(6));
    CHECK(p6.formula_span == 35);  // stated: 6m - 1
    CHECK(p6.span == 32);
    CHECK_FALSE(p6.formula_matches_set);
    CHECK(p6.dim == 31);

    Prediction p8 = predict(FamilyId::f8, 8, CosetTable::bundled(8));
    CHECK(p8.formula_span == 132);  // stated: m(2^(m/2)+1) - m/2
    CHECK(p8.span == 112);
    CHECK_FALSE(p8.formula_matches_set);

    Prediction p10 = predict(FamilyId::f8, 10, CosetTable::bundled(10));
    CHECK(p10.formula_span == 305);
    CHECK(p10.span == 280);
}

TEST_CASE("predictions crosscheck against computed analyses") {
    for (FamilyId id : all_families()) {
        for (int m = 2; m <= 11; ++m) {
            if (!family_valid(id, m)) continue;
            const FieldSpec& fs = FieldSpec::bundled(m);
            const CosetTable& tab = CosetTable::bundled(m);
            Prediction p = predict(id, m, tab);
            SequenceAnalysis a = analyze_dft(generate(id, fs));
            CrosscheckReport r = crosscheck(p, a, fs, tab);
            INFO(family_name(id) << " m=" << m);
            CHECK(r.ok());
            CHECK(p.dim == fs.period() - a.linear_span);
        }
    }
}

TEST_CASE("deliberately corrupted prediction is reported with a leader diff") {
    const FieldSpec& fs = FieldSpec::bundled(5);
    const CosetTable& tab = CosetTable::bundled(5);
    Prediction p = predict(FamilyId::f3, 5, tab);
    p.leaders = {1, 7};  // drop 3 and 5, add 7
    p.span = 16;
    SequenceAnalysis a = analyze_dft(generate(FamilyId::f3, fs));
    CrosscheckReport r = crosscheck(p, a, fs, tab);
    CHECK_FALSE(r.ok());
    CHECK(r.missing_leaders == std::vector<std::uint32_t>{7});
    CHECK(r.extra_leaders == std::vector<std::uint32_t>{3, 5});
    CHECK_FALSE(r.generator_ok);
}

TEST_CASE("spans and index-set shapes do not depend on the field modulus") {
    // the generator polynomial itself does depend on which primitive
    // polynomial defines alpha; the leader set and span never do
    const FieldSpec a(7, poly_mask_from_string("x^7+x+1"));
    const FieldSpec b(7, poly_mask_from_string("x^7+x^3+1"));
    const CosetTable& tab = CosetTable::bundled(7);
    for (FamilyId id : {FamilyId::f2, FamilyId::f4, FamilyId::f5}) {
        SequenceAnalysis sa = analyze_dft(generate(id, a));
        SequenceAnalysis sb = analyze_dft(generate(id, b));
        CHECK(sa.linear_span == sb.linear_span);
        CHECK(index_set_shape(sa, tab).leaders == index_set_shape(sb, tab).leaders);
        CHECK_FALSE(sa.minimal_poly == sb.minimal_poly);
        Prediction p = predict(id, 7, tab);
        CHECK(crosscheck(p, sa, a, tab).ok());
        CHECK(crosscheck(p, sb, b, tab).ok());
    }
}

TEST_CASE("prediction rejects invalid pairs") {
    CHECK_THROWS_AS(predict(FamilyId::f1, 4, CosetTable::bundled(4)), std::invalid_argument);
    CHECK_THROWS_AS(predict(FamilyId::f8, 4, CosetTable::bundled(4)), std::invalid_argument);
}

TEST_CASE("reports are byte-deterministic") {
    // includes the threaded distance search: the minimum is order-independent
    auto render = [] {
        const FieldSpec& fs = FieldSpec::bundled(6);
        CodeRecord code = build_code(analyze_dft(generate(FamilyId::f8, fs)).minimal_poly, fs);
        return json_code_report(FamilyId::f8, 6, fs, code, true).dump(2);
    };
    std::string a = render(), b = render();
    CHECK(a == b);
    CHECK(a.find("\"k\": 31") != std::string::npos);
}

TEST_CASE("parity structure of the odd-m gamma-ladder leader sets") {
    // m = 1 mod 4 keeps the explicit cosets of 1 and 3; m = 3 mod 4 keeps 5
    Prediction p9 = predict(FamilyId::f4, 9, CosetTable::bundled(9));
    CHECK(std::find(p9.leaders.begin(), p9.leaders.end(), 1) != p9.leaders.end());
    CHECK(std::find(p9.leaders.begin(), p9.leaders.end(), 3) != p9.leaders.end());
    Prediction p11 = predict(FamilyId::f4, 11, CosetTable::bundled(11));
    CHECK(std::find(p11.leaders.begin(), p11.leaders.end(), 5) != p11.leaders.end());
    CHECK(std::find(p11.leaders.begin(), p11.leaders.end(), 1) == p11.leaders.end());
    CHECK(std::find(p11.leaders.begin(), p11.leaders.end(), 3) == p11.leaders.end());
}
