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
#include <random>

#include "tracecodes/sequence.hpp"

using namespace tracecodes;

TEST_CASE("trace sequence closed forms at small m") {
    // s_t = Tr(alpha^t) + 1 for the first odd-m trinomial
    const FieldSpec& f5 = FieldSpec::bundled(5);
    TraceSequence s = generate(FamilyId::f1, f5);
    for (std::uint32_t t = 0; t < f5.period(); ++t)
        CHECK(s.bits[t] == (trace(pow(gf_alpha(f5), t)) ^ 1));

    // s_t = Tr(sum_{i=0}^{2^{h+1}-1} (alpha^t)^i) for the even-m s=1 trinomial
    for (int m : {4, 6}) {
        const FieldSpec& fs = FieldSpec::bundled(m);
        const int h = m / 2;
        TraceSequence s6 = generate(FamilyId::f6, fs);
        for (std::uint32_t t = 0; t < fs.period(); ++t) {
            FieldElement x = pow(gf_alpha(fs), t), acc = gf_zero(fs);
            for (std::int64_t i = 0; i < (1ll << (h + 1)); ++i) acc = acc + pow(x, i);
            CHECK(int(s6.bits[t]) == trace(acc));
        }
    }
}

TEST_CASE("spectral analysis of the single-coset family") {
    const FieldSpec& fs = FieldSpec::bundled(5);
    const CosetTable& tab = CosetTable::bundled(5);
    SequenceAnalysis a = analyze_dft(generate(FamilyId::f1, fs));
    CHECK(a.linear_span == 6);
    IndexSetShape shape = index_set_shape(a, tab);
    CHECK(shape.includes_zero);
    CHECK(shape.leaders == std::vector<std::uint32_t>{1});
    CHECK(shape.coset_closed);
    // round trip: s_t = sum a_i alpha^{it}
    TraceSequence s = generate(FamilyId::f1, fs);
    for (std::uint32_t t = 0; t < fs.period(); ++t) {
        std::uint32_t acc = 0;
        for (std::uint32_t i = 0; i < fs.period(); ++i)
            if (a.dft[i]) acc ^= fs.mul_raw(a.dft[i], fs.alpha_pow(std::int64_t(i) * t));
        CHECK(acc == s.bits[t]);
    }
}

TEST_CASE("welch family span is 3m + 1") {
    SequenceAnalysis a = analyze_dft(generate(FamilyId::f3, FieldSpec::bundled(5)));
    CHECK(a.linear_span == 16);
    CHECK(a.minimal_poly.degree() == 16);
}

TEST_CASE("degenerate sequences") {
    const FieldSpec& fs = FieldSpec::bundled(4);
    TraceSequence zeros = wrap_sequence(std::vector<std::uint8_t>(15, 0), fs);
    CHECK(analyze_dft(zeros).linear_span == 0);
    CHECK(analyze_dft(zeros).minimal_poly == BinaryPoly::one());
    CHECK(analyze_bm(zeros).linear_span == 0);

    TraceSequence ones = wrap_sequence(std::vector<std::uint8_t>(15, 1), fs);
    SequenceAnalysis b = analyze_bm(ones);
    CHECK(b.linear_span == 1);
    CHECK(b.minimal_poly == BinaryPoly::parse("x+1"));
}

TEST_CASE("recurrence route agrees with spectral route on the catalog") {
    for (FamilyId id : all_families()) {
        for (int m = 2; m <= 8; ++m) {
            if (!family_valid(id, m)) continue;
            const FieldSpec& fs = FieldSpec::bundled(m);
            TraceSequence s = generate(id, fs);
            SequenceAnalysis dft = analyze_dft(s), bm = analyze_bm(s);
            INFO(family_name(id) << " m=" << m);
            CHECK(dft.minimal_poly == bm.minimal_poly);
            CHECK(dft.linear_span == bm.linear_span);
            CHECK(annihilates(dft.minimal_poly, s));
        }
    }
}

TEST_CASE("f4 span at m=5 is 16") {
    SequenceAnalysis a = analyze_bm(generate(FamilyId::f4, FieldSpec::bundled(5)));
    CHECK(a.linear_span == 16);
}

TEST_CASE("index sets are coset-closed and reassemble the generator") {
    for (FamilyId id : all_families()) {
        for (int m = 4; m <= 8; ++m) {
            if (!family_valid(id, m)) continue;
            const FieldSpec& fs = FieldSpec::bundled(m);
            const CosetTable& tab = CosetTable::bundled(m);
            SequenceAnalysis a = analyze_dft(generate(id, fs));
            IndexSetShape shape = index_set_shape(a, tab);
            INFO(family_name(id) << " m=" << m);
            CHECK(shape.coset_closed);
            CHECK(assemble_generator(shape, fs, tab) == a.minimal_poly);
        }
    }
}

TEST_CASE("both routes agree on random periodic sequences") {
    std::mt19937 rng(424242);
    for (int m : {3, 4, 5, 6}) {
        const FieldSpec& fs = FieldSpec::bundled(m);
        for (int rep = 0; rep < 25; ++rep) {
            std::vector<std::uint8_t> bits(fs.period());
            for (auto& b : bits) b = rng() & 1;
            TraceSequence s = wrap_sequence(bits, fs);
            SequenceAnalysis dft = analyze_dft(s), bm = analyze_bm(s);
            CHECK(dft.minimal_poly == bm.minimal_poly);
            CHECK(dft.linear_span == bm.linear_span);
            CHECK(annihilates(bm.minimal_poly, s));
        }
    }
}
