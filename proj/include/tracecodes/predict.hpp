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

#ifndef TRACECODES_PREDICT_HPP
#define TRACECODES_PREDICT_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tracecodes/cosets.hpp"
#include "tracecodes/families.hpp"
#include "tracecodes/polyring.hpp"
#include "tracecodes/sequence.hpp"

namespace tracecodes {

/// Closed-form prediction for one (family, m) pair.
///
/// `leaders`/`includes_zero`/`span` come from the generator-product displays
/// evaluated with exact coset bookkeeping: every displayed trace term toggles
/// its coset with parity (m / coset size) mod 2, so repeated cosets cancel and
/// cosets whose trace contribution vanishes identically (even m / coset-size
/// ratio) never enter.  `formula_span` is the flat arithmetic expression the
/// closed form states for the linear span; the two agree wherever the stated
/// expression is consistent with its own display.
struct Prediction {
    FamilyId fam{};
    int m = 0;
    std::uint32_t v = 0;
    std::vector<std::uint32_t> leaders;  // coset leaders of I_s \ {0}, sorted
    bool includes_zero = false;          // the (x - 1) factor
    std::uint32_t span = 0;              // |I_s| from leaders + sizes
    std::uint32_t dim = 0;               // v - span
    std::int64_t formula_span = -1;      // stated arithmetic span (-1: no stated formula)
    bool formula_matches_set = false;
    int d_lo = 2, d_hi = 0;              // stated distance bounds
    bool extrapolated = false;           // m outside the theorem hypothesis, example-backed
    std::string source;                  // which closed form produced this
};

namespace detail {

/// One displayed family of trace terms: x^{i + shift} for i in
/// gamma_set(t) \ (gamma_set(t_excl) or {1}).
struct TermBlock {
    int t;
    int t_excl;        // -1: no set exclusion
    bool drop_one;     // exclude i = 1
    std::uint64_t shift;
};

struct TermPattern {
    std::vector<TermBlock> blocks;
    std::vector<std::uint64_t> singles;  // explicit exponents
    bool constant = false;               // the "+1" term -> 0 in I_s
};

inline TermPattern family_pattern(FamilyId id, int m) {
    TermPattern pat;
    auto p2 = [](int e) { return std::uint64_t(1) << e; };
    switch (id) {
        case FamilyId::F1_intro: {
            pat.singles = {1};
            break;
        }
        case FamilyId::f1: {
            pat.singles = {1};
            pat.constant = true;
            break;
        }
        case FamilyId::f2: {
            const int h = (m - 1) / 2;
            pat.singles = {3, p2(h - 1) + 1, p2(h) + p2(h - 1) + 1};
            pat.constant = true;
            break;
        }
        case FamilyId::f3: {
            const int h = (m - 1) / 2;
            pat.singles = {1, 3, p2(h) + 1};
            pat.constant = true;
            break;
        }
        case FamilyId::f4: {
            const int h = (m - 1) / 2;
            pat.blocks.push_back({h - 1, -1, false, p2(h)});
            for (int j = 2; j <= h - 2; j += 2) {
                pat.blocks.push_back({h - j, -1, false, p2(h + 1 - j)});
                pat.blocks.push_back({h - j, h - j - 1, false, p2(h - j)});
            }
            if (m % 4 == 1)
                pat.singles = {3, 1};
            else
                pat.singles = {5};
            pat.constant = true;
            break;
        }
        case FamilyId::f5: {
            const int h = (m - 1) / 2;
            pat.blocks.push_back({h, -1, true, p2(h + 1)});
            pat.blocks.push_back({h - 1, -1, true, p2(h)});
            for (int j = 1; j <= h - 3; j += 2) {
                pat.blocks.push_back({h - j, h - j - 1, false, p2(h - j)});
                pat.blocks.push_back({h - j - 2, -1, false, p2(h - j - 1)});
            }
            if (m % 4 == 1)
                pat.singles = {3, 1};
            else
                pat.singles = {7};
            pat.constant = true;
            break;
        }
        case FamilyId::f6: {
            const int h = m / 2;
            pat.blocks.push_back({h, -1, true, p2(h)});
            const int start = (m % 4 == 0) ? 2 : 1;
            for (int j = start; j <= h - 2; j += 2) pat.blocks.push_back({j, -1, false, p2(j)});
            if (m % 4 == 0) pat.singles = {1};
            break;
        }
        case FamilyId::f7: {
            const int h = m / 2;
            pat.blocks.push_back({h, h - 1, false, p2(h)});
            for (int j = 1; j <= h - 2; ++j) pat.blocks.push_back({j, -1, false, p2(j + 1)});
            break;
        }
        case FamilyId::f8: {
            const int h = m / 2;
            pat.blocks.push_back({h, -1, false, p2(h + 1)});
            pat.blocks.push_back({h - 1, -1, false, p2(h)});
            for (int j = 1; j <= h - 3; j += 2) {
                pat.blocks.push_back({h - j, h - j - 1, false, p2(h - j)});
                pat.blocks.push_back({h - 2 - j, -1, false, p2(h - 1 - j)});
            }
            if (m % 4 == 0)
                pat.singles = {3, 1};
            else
                pat.singles = {7};
            break;
        }
    }
    return pat;
}

inline std::int64_t stated_formula_span(FamilyId id, int m) {
    auto p2 = [](int e) { return std::int64_t(1) << e; };
    switch (id) {
        case FamilyId::F1_intro: return m;
        case FamilyId::f1: return m + 1;
        case FamilyId::f2: return m >= 7 ? 3 * m + 1 : -1;
        case FamilyId::f3: return 3 * m + 1;
        case FamilyId::f4: return 1 + m * (p2((m - 3) / 2) + (m % 4 == 1 ? 1 : -1));
        case FamilyId::f5: return m >= 7 ? 1 + m * (p2((m - 1) / 2) - (m % 4 == 1 ? 1 : 3)) : -1;
        case FamilyId::f6: return std::int64_t(m) * (p2(m / 2 + 1) - (m % 4 == 0 ? 2 : 4)) / 3;
        case FamilyId::f7: return std::int64_t(m) * (p2((m - 2) / 2) - 1);
        case FamilyId::f8:
            if (m == 6) return 6 * m - 1;
            return std::int64_t(m) * (p2(m / 2) + (m % 4 == 0 ? 1 : -1)) - m / 2;
    }
    return -1;
}

inline const char* prediction_source(FamilyId id) {
    switch (id) {
        case FamilyId::F1_intro: return "hamming-collapse closed form";
        case FamilyId::f1: return "single-coset closed form";
        case FamilyId::f2: return "three-coset closed form";
        case FamilyId::f3: return "three-coset closed form";
        case FamilyId::f4: return "gamma-ladder closed form (odd m, shifted blocks)";
        case FamilyId::f5: return "gamma-ladder closed form (Kasami monomial)";
        case FamilyId::f6: return "gamma-ladder closed form (even m, s=1)";
        case FamilyId::f7: return "gamma-ladder closed form (even m, s=2)";
        case FamilyId::f8: return "gamma-ladder closed form (even m, s=half)";
    }
    return "?";
}

}  // namespace detail

/// Builds the closed-form prediction.  Throws for (family, m) outside both the
/// theorem hypotheses and the worked examples.
inline Prediction predict(FamilyId id, int m, const CosetTable& tab) {
    if (!family_valid(id, m))
        throw std::invalid_argument("no prediction: " + family_name(id) + " invalid at m=" +
                                    std::to_string(m));
    if (tab.m() != m) throw std::invalid_argument("coset table does not match m");
    const std::uint32_t v = tab.v();

    Prediction p;
    p.fam = id;
    p.m = m;
    p.v = v;
    p.extrapolated = family_extrapolated(id, m);
    p.source = detail::prediction_source(id);

    // toggle parity per coset leader
    detail::TermPattern pat = detail::family_pattern(id, m);
    std::map<std::uint32_t, int> parity;
    auto add_exponent = [&](std::uint64_t e) {
        const std::uint32_t r = static_cast<std::uint32_t>(e % v);
        if (r == 0) throw std::logic_error("displayed exponent reduced to zero");
        const std::uint32_t lead = tab.leader(r);
        const int contrib = (m / static_cast<int>(tab.size(lead))) & 1;
        if (contrib) parity[lead] ^= 1;
    };
    for (const auto& blk : pat.blocks) {
        std::vector<std::uint32_t> is =
            blk.t_excl >= 0 ? gamma_set_diff(blk.t, blk.t_excl) : gamma_set(blk.t);
        for (std::uint32_t i : is) {
            if (blk.drop_one && i == 1) continue;
            add_exponent(i + blk.shift);
        }
    }
    for (std::uint64_t e : pat.singles) add_exponent(e);

    p.includes_zero = pat.constant;  // Tr(1) = 1 on the odd-m side only, already folded
    std::uint32_t span = p.includes_zero ? 1 : 0;
    for (const auto& [lead, par] : parity) {
        if (!par) continue;
        p.leaders.push_back(lead);
        span += tab.size(lead);
    }
    p.span = span;
    p.dim = v - span;
    p.formula_span = detail::stated_formula_span(id, m);
    p.formula_matches_set = p.formula_span == static_cast<std::int64_t>(p.span);

    // stated distance bounds
    auto p2i = [](int e) { return 1 << e; };
    const std::int64_t Ls = p.formula_span >= 0 ? p.formula_span : p.span;
    switch (id) {
        case FamilyId::F1_intro: p.d_lo = 3; p.d_hi = 3; break;
        case FamilyId::f1: p.d_lo = 4; p.d_hi = 4; break;
        case FamilyId::f2: p.d_lo = 4; p.d_hi = 8; break;
        case FamilyId::f3: p.d_lo = 8; p.d_hi = 8; break;
        case FamilyId::f4:
            p.d_lo = std::max(m % 4 == 1 ? 8 : 2, p2i((m - 5) / 2) + 2);
            p.d_hi = static_cast<int>(Ls);
            break;
        case FamilyId::f5:
            p.d_lo = p2i((m - 3) / 2);
            p.d_hi = static_cast<int>(Ls);
            break;
        case FamilyId::f6:
            p.d_lo = p2i((m - 2) / 2);
            p.d_hi = static_cast<int>(Ls) + 1;
            break;
        case FamilyId::f7:
            p.d_lo = p2i((m - 4) / 2) + 1;
            p.d_hi = static_cast<int>(Ls) + 1;
            break;
        case FamilyId::f8:
            p.d_lo = std::max(m % 4 == 0 ? 7 : 2, p2i((m - 2) / 2) + 1);
            p.d_hi = static_cast<int>(Ls) + 1;
            break;
    }
    p.d_lo = std::max(p.d_lo, 2);
    if (p.d_hi < p.d_lo) p.d_hi = p.d_lo;
    return p;
}

/// Structured comparison of a prediction against a computed sequence analysis.
struct CrosscheckReport {
    bool span_ok = false;
    bool leaders_ok = false;
    bool zero_ok = false;
    bool generator_ok = false;
    bool formula_ok = false;  // the stated arithmetic formula also agrees
    std::vector<std::uint32_t> missing_leaders;  // predicted but not computed
    std::vector<std::uint32_t> extra_leaders;    // computed but not predicted
    std::uint32_t predicted_span = 0, computed_span = 0;
    bool ok() const { return span_ok && leaders_ok && zero_ok && generator_ok; }
};

inline CrosscheckReport crosscheck(const Prediction& pred, const SequenceAnalysis& comp,
                                   const FieldSpec& fs, const CosetTable& tab) {
    CrosscheckReport r;
    r.predicted_span = pred.span;
    r.computed_span = comp.linear_span;
    r.span_ok = pred.span == comp.linear_span;
    r.formula_ok = pred.formula_span == static_cast<std::int64_t>(comp.linear_span);

    IndexSetShape shape = index_set_shape(comp, tab);
    r.zero_ok = shape.includes_zero == pred.includes_zero;
    std::set_difference(pred.leaders.begin(), pred.leaders.end(), shape.leaders.begin(),
                        shape.leaders.end(), std::back_inserter(r.missing_leaders));
    std::set_difference(shape.leaders.begin(), shape.leaders.end(), pred.leaders.begin(),
                        pred.leaders.end(), std::back_inserter(r.extra_leaders));
    r.leaders_ok = r.missing_leaders.empty() && r.extra_leaders.empty();

    IndexSetShape predicted_shape;
    predicted_shape.leaders = pred.leaders;
    predicted_shape.includes_zero = pred.includes_zero;
    r.generator_ok = assemble_generator(predicted_shape, fs, tab) == comp.minimal_poly;
    return r;
}

}  // namespace tracecodes

#endif  // TRACECODES_PREDICT_HPP
