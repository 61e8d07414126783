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

#ifndef TRACECODES_FAMILIES_HPP
#define TRACECODES_FAMILIES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tracecodes/gf2m.hpp"

namespace tracecodes {

/// The catalog of monomials / trinomials over GF(2^m) whose trace sequences
/// drive the code constructions.  F1_intro is the even-m trinomial whose code
/// collapses to the Hamming code; f1..f5 live on odd m, f6..f8 on even m.
enum class FamilyId { F1_intro, f1, f2, f3, f4, f5, f6, f7, f8 };

inline const std::vector<FamilyId>& all_families() {
    static const std::vector<FamilyId> v{FamilyId::F1_intro, FamilyId::f1, FamilyId::f2,
                                         FamilyId::f3,       FamilyId::f4, FamilyId::f5,
                                         FamilyId::f6,       FamilyId::f7, FamilyId::f8};
    return v;
}

inline std::string family_name(FamilyId id) {
    switch (id) {
        case FamilyId::F1_intro: return "F1_intro";
        case FamilyId::f1: return "f1";
        case FamilyId::f2: return "f2";
        case FamilyId::f3: return "f3";
        case FamilyId::f4: return "f4";
        case FamilyId::f5: return "f5";
        case FamilyId::f6: return "f6";
        case FamilyId::f7: return "f7";
        case FamilyId::f8: return "f8";
    }
    return "?";
}

inline FamilyId family_from_name(std::string_view name) {
    for (FamilyId id : all_families())
        if (family_name(id) == name) return id;
    throw std::invalid_argument("unknown family: " + std::string(name));
}

/// Raw exponent list of the defining polynomial F(x) = sum x^e at degree m.
/// Exponents are plain integers below 2^m; reduction mod 2^m - 1 happens at
/// evaluation time.
inline std::vector<std::int64_t> family_exponents(FamilyId id, int m) {
    const std::int64_t P = std::int64_t(1) << m;
    auto p2 = [](int e) { return std::int64_t(1) << e; };
    switch (id) {
        case FamilyId::F1_intro: return {1, p2((m + 2) / 2) - 1, P - p2(m / 2) + 1};
        case FamilyId::f1: return {1, p2((m + 1) / 2) - 1, P - p2((m + 1) / 2) + 1};
        case FamilyId::f2: return {3 * p2((m + 1) / 2) + 4, p2((m + 1) / 2) + 2, p2((m + 1) / 2)};
        case FamilyId::f3: return {1, 3, p2((m + 1) / 2) + 1};
        case FamilyId::f4: return {1, 3, P - p2((m + 3) / 2) + 2};
        case FamilyId::f5: return {p2(m - 1) - p2((m - 1) / 2) + 1};
        case FamilyId::f6: return {1, p2(m / 2), P - p2(m / 2) + 1};
        case FamilyId::f7: return {1, p2(m / 2 + 1) - 1, P - p2(m / 2 + 1) + 2};
        case FamilyId::f8: return {1, p2(m / 2), p2(m - 1) - p2(m / 2 - 1) + 1};
    }
    throw std::invalid_argument("unknown family id");
}

/// Smallest m at which the construction is exercised (worked examples
/// included); parity must match the family's side of the catalog.
inline bool family_valid(FamilyId id, int m) {
    if (m < 2 || m > 20) return false;
    const bool even = m % 2 == 0;
    switch (id) {
        case FamilyId::F1_intro: return even && m >= 2;
        case FamilyId::f1: return !even && m >= 3;
        case FamilyId::f2: return !even && m >= 5;
        case FamilyId::f3: return !even && m >= 5;
        case FamilyId::f4: return !even && m >= 5;
        case FamilyId::f5: return !even && m >= 5;
        case FamilyId::f6: return even && m >= 4;
        case FamilyId::f7: return even && m >= 4;
        case FamilyId::f8: return even && m >= 6;
    }
    return false;
}

/// True where the closed-form theorem's hypothesis excludes this m but a
/// worked example still exercises it (f2 and f5 at m=5, f7 at m=4).
inline bool family_extrapolated(FamilyId id, int m) {
    return (id == FamilyId::f2 && m == 5) || (id == FamilyId::f5 && m == 5) ||
           (id == FamilyId::f7 && m == 4);
}

enum class PermClaim { permutation, non_permutation, unspecified };

/// The published permutation status of the family at this m.
inline PermClaim family_permutation_claim(FamilyId id, int m) {
    if (!family_valid(id, m)) return PermClaim::unspecified;
    switch (id) {
        case FamilyId::F1_intro:
        case FamilyId::f1:
        case FamilyId::f2:
        case FamilyId::f3:
        case FamilyId::f4:
        case FamilyId::f5:
            return PermClaim::permutation;
        case FamilyId::f6:
        case FamilyId::f7:
            return m % 4 == 0 ? PermClaim::permutation : PermClaim::non_permutation;
        case FamilyId::f8:
            return m % 6 != 0 ? PermClaim::permutation : PermClaim::non_permutation;
    }
    return PermClaim::unspecified;
}

/// F(x) by modular exponentiation.  F(0) = 0 term-by-term (every catalog
/// exponent is >= 1); for nonzero x the exponents reduce mod 2^m - 1.
inline FieldElement evaluate_family(FamilyId id, int m, FieldElement x) {
    if (x.spec().m() != m) throw std::invalid_argument("element does not live in GF(2^m) for this m");
    FieldElement acc = gf_zero(x.spec());
    for (std::int64_t e : family_exponents(id, m)) {
        if (e < 1) throw std::logic_error("catalog exponent must be positive");
        acc = acc + pow(x, e);
    }
    return acc;
}

/// Exhaustive bijectivity check of x -> F(x) on GF(2^m) by image counting.
inline bool is_permutation(FamilyId id, int m, const FieldSpec& fs) {
    if (fs.m() != m) throw std::invalid_argument("field spec does not match m");
    const std::size_t n = std::size_t(1) << m;
    std::vector<bool> seen(n, false);
    // reduce exponents once; evaluate via log stepping
    std::vector<std::int64_t> exps = family_exponents(id, m);
    seen[0] = true;  // F(0) = 0
    for (std::uint32_t t = 0; t < fs.period(); ++t) {
        std::uint32_t y = 0;
        for (std::int64_t e : exps) y ^= fs.alpha_pow(std::int64_t(t) * (e % fs.period()));
        if (seen[y]) return false;
        seen[y] = true;
    }
    return true;
}

inline bool is_permutation(FamilyId id, int m) { return is_permutation(id, m, FieldSpec::bundled(m)); }

/// Largest e with 3^e dividing i.
inline int exp3(std::int64_t i) {
    if (i <= 0) throw std::domain_error("exp3 requires a positive integer");
    int e = 0;
    while (i % 3 == 0) {
        i /= 3;
        ++e;
    }
    return e;
}

}  // namespace tracecodes

#endif  // TRACECODES_FAMILIES_HPP
