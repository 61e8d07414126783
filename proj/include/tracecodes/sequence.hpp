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

#ifndef TRACECODES_SEQUENCE_HPP
#define TRACECODES_SEQUENCE_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tracecodes/cosets.hpp"
#include "tracecodes/families.hpp"
#include "tracecodes/gf2m.hpp"
#include "tracecodes/polyring.hpp"

namespace tracecodes {

/// One period of s_t = Tr(F(alpha^t + 1)).
struct TraceSequence {
    std::vector<std::uint8_t> bits;
    const FieldSpec* spec = nullptr;
};

inline TraceSequence generate(FamilyId id, const FieldSpec& fs) {
    const int m = fs.m();
    if (!family_valid(id, m))
        throw std::invalid_argument(family_name(id) + " is not defined at m=" + std::to_string(m));
    TraceSequence seq;
    seq.spec = &fs;
    seq.bits.resize(fs.period());
    std::vector<std::int64_t> exps = family_exponents(id, m);
    for (auto& e : exps) e %= fs.period();
    for (std::uint32_t t = 0; t < fs.period(); ++t) {
        const std::uint32_t x = fs.alpha_pow(t) ^ 1u;  // alpha^t + 1
        std::uint32_t y = 0;
        if (x != 0) {
            const std::uint32_t lx = fs.log_raw(x);
            for (std::int64_t e : exps) y ^= fs.alpha_pow(std::int64_t(lx) * e);
        }
        seq.bits[t] = static_cast<std::uint8_t>(fs.trace_raw(y));
    }
    return seq;
}

/// Arbitrary periodic bit sequence wrapper (for the oracle-equivalence tests).
inline TraceSequence wrap_sequence(std::vector<std::uint8_t> bits, const FieldSpec& fs) {
    if (bits.size() != fs.period()) throw std::invalid_argument("bit count must equal 2^m - 1");
    TraceSequence s;
    s.bits = std::move(bits);
    s.spec = &fs;
    return s;
}

struct SequenceAnalysis {
    BinaryPoly minimal_poly;               // the sequence's minimal polynomial g_s
    std::uint32_t linear_span = 0;         // deg g_s
    std::vector<std::uint32_t> index_set;  // sorted i with a_i != 0 (DFT route only)
    std::vector<std::uint32_t> dft;        // a_i values (DFT route only)
    bool has_spectrum = false;
};

/// Mattson-Solomon route: a_i = sum_t s_t alpha^{-it}, I_s = {i : a_i != 0},
/// g_s = prod_{j in I_s} (1 - alpha^j x) expanded over GF(2^m).  Every
/// coefficient of the product must land in GF(2); anything else signals a
/// field-arithmetic bug, not bad input.
inline SequenceAnalysis analyze_dft(const TraceSequence& seq) {
    const FieldSpec& fs = *seq.spec;
    const std::uint32_t v = fs.period();
    SequenceAnalysis out;
    out.has_spectrum = true;
    out.dft.assign(v, 0);
    for (std::uint32_t i = 0; i < v; ++i) {
        std::uint32_t acc = 0, e = 0;
        const std::uint32_t step = v - i;  // alpha^{-i} = alpha^{v-i}
        for (std::uint32_t t = 0; t < v; ++t) {
            if (seq.bits[t]) acc ^= fs.alpha_pow(e);
            e += step;
            if (e >= v) e -= v;
        }
        out.dft[i] = acc;
        if (acc) out.index_set.push_back(i);
    }
    out.linear_span = static_cast<std::uint32_t>(out.index_set.size());
    // expand prod (1 - alpha^j x); coefficient of x^k accumulates in GF(2^m)
    std::vector<std::uint32_t> coeffs{1};
    coeffs.reserve(out.index_set.size() + 1);
    for (std::uint32_t j : out.index_set) {
        const std::uint32_t aj = fs.alpha_pow(j);
        std::vector<std::uint32_t> next(coeffs.size() + 1, 0);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k] ^= coeffs[k];
            next[k + 1] ^= fs.mul_raw(coeffs[k], aj);
        }
        coeffs = std::move(next);
    }
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] > 1) throw std::logic_error("spectral product coefficient escaped GF(2)");
        if (coeffs[k]) out.minimal_poly.set_coeff(static_cast<std::uint32_t>(k), true);
    }
    return out;
}

/// Berlekamp-Massey over GF(2) on the sequence repeated to length 2v, enough
/// to converge for any span <= v.  Returns the same minimal polynomial as the
/// spectral route; the spectrum fields stay empty.
inline SequenceAnalysis analyze_bm(const TraceSequence& seq) {
    const std::uint32_t v = seq.spec->period();
    const std::size_t n2 = 2 * std::size_t(v);
    auto bit = [&](std::size_t i) { return seq.bits[i % v]; };

    BinaryPoly C = BinaryPoly::one(), B = BinaryPoly::one();
    std::uint32_t L = 0, shift = 1;
    for (std::size_t n = 0; n < n2; ++n) {
        int d = bit(n);
        for (std::uint32_t i = 1; i <= static_cast<std::uint32_t>(C.degree()); ++i)
            if (C.coeff(i) && n >= i) d ^= bit(n - i);
        if (d == 0) {
            ++shift;
        } else if (2 * L <= n) {
            BinaryPoly T = C;
            C = C + (B * BinaryPoly::monomial(shift));
            B = T;
            L = static_cast<std::uint32_t>(n + 1 - L);
            shift = 1;
        } else {
            C = C + (B * BinaryPoly::monomial(shift));
            ++shift;
        }
    }
    SequenceAnalysis out;
    out.minimal_poly = C;
    out.linear_span = L;
    return out;
}

/// Checks that g annihilates the sequence under the LFSR convention:
/// sum_k g_k s_{t-k} = 0 over one full period.
inline bool annihilates(const BinaryPoly& g, const TraceSequence& seq) {
    const std::uint32_t v = seq.spec->period();
    if (g.is_zero()) return false;
    for (std::uint32_t t = 0; t < v; ++t) {
        int acc = 0;
        for (std::uint32_t k = 0; k <= static_cast<std::uint32_t>(g.degree()); ++k)
            if (g.coeff(k)) acc ^= seq.bits[(t + v - k % v) % v];
        if (acc) return false;
    }
    return true;
}

/// Leaders of the cosets forming index_set \ {0}, plus a flag for 0.
struct IndexSetShape {
    std::vector<std::uint32_t> leaders;
    bool includes_zero = false;
    bool coset_closed = false;  // index_set \ {0} is an exact union of cosets
};

inline IndexSetShape index_set_shape(const SequenceAnalysis& a, const CosetTable& tab) {
    IndexSetShape s;
    std::vector<std::uint32_t> want;
    for (std::uint32_t i : a.index_set) {
        if (i == 0) {
            s.includes_zero = true;
            continue;
        }
        if (s.leaders.empty() || s.leaders.back() != tab.leader(i))
            if (std::find(s.leaders.begin(), s.leaders.end(), tab.leader(i)) == s.leaders.end())
                s.leaders.push_back(tab.leader(i));
    }
    std::sort(s.leaders.begin(), s.leaders.end());
    for (std::uint32_t lead : s.leaders)
        for (std::uint32_t e : tab.coset(lead)) want.push_back(e);
    if (s.includes_zero) want.push_back(0);
    std::sort(want.begin(), want.end());
    s.coset_closed = want == a.index_set;
    return s;
}

/// Reassembles g_s as prod over leaders i of the minimal polynomial of
/// alpha^{-i}, times (x - 1) when 0 is present.
inline BinaryPoly assemble_generator(const IndexSetShape& shape, const FieldSpec& fs,
                                     const CosetTable& tab) {
    BinaryPoly g = BinaryPoly::one();
    if (shape.includes_zero) g = BinaryPoly::from_exponents({1, 0});  // x + 1
    for (std::uint32_t lead : shape.leaders) {
        const std::uint32_t neg = (fs.period() - lead % fs.period()) % fs.period();
        g = g * minimal_polynomial(neg, fs, tab);
    }
    return g;
}

}  // namespace tracecodes

#endif  // TRACECODES_SEQUENCE_HPP
