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

#ifndef TRACECODES_COSETS_HPP
#define TRACECODES_COSETS_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tracecodes {

/// Number of ones in the binary expansion.
inline int weight2(std::uint64_t i) { return std::popcount(i); }

/// The partition of Z_v, v = 2^m - 1, into 2-cyclotomic cosets
/// C_i = {i, 2i, 4i, ...} mod v.  Flat leader array for O(1) queries.
class CosetTable {
   public:
    explicit CosetTable(int m) : m_(m) {
        if (m < 2 || m > 20) throw std::invalid_argument("m must be in [2, 20]");
        v_ = (std::uint32_t(1) << m) - 1;
        leader_of_.assign(v_, UINT32_MAX);
        for (std::uint32_t i = 0; i < v_; ++i) {
            if (leader_of_[i] != UINT32_MAX) continue;
            std::uint32_t lead = i, x = i;
            do {
                if (x < lead) lead = x;
                x = x << 1 >= v_ ? (x << 1) - v_ : x << 1;
            } while (x != i);
            std::uint32_t size = 0;
            x = i;
            do {
                leader_of_[x] = lead;
                ++size;
                x = x << 1 >= v_ ? (x << 1) - v_ : x << 1;
            } while (x != i);
            leaders_.push_back(lead);
            sizes_[lead] = size;
        }
    }

    int m() const { return m_; }
    std::uint32_t v() const { return v_; }
    std::uint32_t leader(std::uint32_t i) const { return leader_of_.at(i % v_); }
    const std::vector<std::uint32_t>& leaders() const { return leaders_; }

    std::uint32_t size(std::uint32_t i) const { return sizes_.at(leader(i)); }

    std::vector<std::uint32_t> coset(std::uint32_t i) const {
        std::vector<std::uint32_t> out;
        std::uint32_t x = leader(i);
        do {
            out.push_back(x);
            x = x << 1 >= v_ ? (x << 1) - v_ : x << 1;
        } while (x != out.front());
        return out;
    }

    bool same_coset(std::uint32_t i, std::uint32_t j) const { return leader(i) == leader(j); }

    static const CosetTable& bundled(int m) {
        static std::map<int, CosetTable> cache;
        static std::mutex mu;
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(m);
        if (it == cache.end()) it = cache.emplace(m, CosetTable(m)).first;
        return it->second;
    }

   private:
    int m_;
    std::uint32_t v_;
    std::vector<std::uint32_t> leader_of_;
    std::vector<std::uint32_t> leaders_;
    std::map<std::uint32_t, std::uint32_t> sizes_;
};

/// The unique lambda in [0, l_j) with i * 2^lambda = j (mod v), if i and j
/// share a coset; nullopt otherwise.
inline std::optional<std::uint32_t> rotation_exponent(std::uint32_t i, std::uint32_t j,
                                                      const CosetTable& tab) {
    const std::uint32_t v = tab.v();
    i %= v;
    j %= v;
    if (!tab.same_coset(i, j)) return std::nullopt;
    std::uint32_t x = i;
    for (std::uint32_t lam = 0; lam < tab.size(j); ++lam) {
        if (x == j) return lam;
        x = x << 1 >= v ? (x << 1) - v : x << 1;
    }
    return std::nullopt;  // unreachable for a consistent table
}

/// The doubling-orbit bookkeeping on {1, ..., 2^t - 1}: for each odd j the
/// set B_j = {j, 2j, ..., j*2^(eps_j - 1)} and the parity kappa_j = eps_j mod 2.
/// The B_j partition {1, ..., 2^t - 1}.
struct GammaMachinery {
    int t = 0;
    std::vector<std::uint32_t> gamma;                       // odd integers in [1, 2^t - 1]
    std::map<std::uint32_t, std::uint32_t> eps;             // j -> eps_j
    std::map<std::uint32_t, std::uint32_t> kappa;           // j -> eps_j mod 2
    std::map<std::uint32_t, std::vector<std::uint64_t>> b_sets;
};

inline GammaMachinery build_gamma(int t) {
    if (t < 1 || t > 30) throw std::invalid_argument("gamma parameter t must be in [1, 30]");
    GammaMachinery g;
    g.t = t;
    const std::uint64_t top = (std::uint64_t(1) << t) - 1;
    for (std::uint64_t j = 1; j <= top; j += 2) {
        std::uint32_t e;
        if (j == top) {
            e = 1;
        } else {
            // eps_j = ceil(log2((2^t - 1) / j)): smallest e with j * 2^e > 2^t - 1...
            e = 0;
            std::uint64_t q = top / j + (top % j != 0);  // ceil
            while ((std::uint64_t(1) << e) < q) ++e;
        }
        g.gamma.push_back(static_cast<std::uint32_t>(j));
        g.eps[j] = e;
        g.kappa[j] = e & 1;
        std::vector<std::uint64_t> b;
        for (std::uint32_t i = 0; i < e; ++i) b.push_back(j << i);
        g.b_sets[j] = std::move(b);
    }
    return g;
}

/// Odd integers in [1, 2^t - 1]; empty for t <= 0.
inline std::vector<std::uint32_t> gamma_set(int t) {
    std::vector<std::uint32_t> out;
    if (t < 1) return out;
    for (std::uint32_t j = 1; j <= (std::uint32_t(1) << t) - 1; j += 2) out.push_back(j);
    return out;
}

/// gamma_set(t) minus gamma_set(t_minus): odd integers in (2^t_minus - 1, 2^t - 1].
inline std::vector<std::uint32_t> gamma_set_diff(int t, int t_minus) {
    std::vector<std::uint32_t> out;
    if (t < 1) return out;
    const std::uint32_t lo = t_minus < 1 ? 0 : (std::uint32_t(1) << t_minus) - 1;
    for (std::uint32_t j : gamma_set(t))
        if (j > lo) out.push_back(j);
    return out;
}

// ---------------------------------------------------------------------------
// Coset-intersection verification harness.
//
// Each law states, for a structured pair of indices, whether two cosets meet.
// The harness evaluates both the claim and the brute-force truth from the
// table; tests assert where they agree (and document where they do not).
// The production pipeline never consumes the claim side.
// ---------------------------------------------------------------------------

enum class CosetLaw {
    shifted_pairs_disjoint,  // m odd: distinct i,j in A: C_{i+2^h} vs C_{j+2^h}
    shift_meets_plain,       // m odd: i in A, odd j in A: C_{i+2^h} vs C_j
    kasami_leaders,          // m odd: leader/size of C_{j+2^{h+1}}, j in gamma(h)
    kasami_crossings,        // m odd: C_{i+2^h} vs C_{j+2^{h+1}} and C_j vs C_{j+2^{h+1}}
    halfspread_pairs,        // m even: i in [1,2^{h-1}-1], j in gamma(h): C_{i+2^h} vs C_{j+2^h}
    doubled_leaders,         // m even: leader/size of C_{j+2^{h+1}}, j in gamma(h)
    doubled_meets_plain,     // m even: i in [1,2^h-1], j in gamma(h): C_{i+2^{h+1}} vs C_j
};

struct LawVerdict {
    bool claimed;  // the closed form's verdict (true = intersect / leader-as-stated)
    bool actual;   // brute force from the table
    bool agree() const { return claimed == actual; }
    std::string note;
};

inline LawVerdict coset_intersection_expected(CosetLaw law, int m, std::uint32_t i, std::uint32_t j,
                                              const CosetTable& tab) {
    if (tab.m() != m) throw std::invalid_argument("table built for different m");
    LawVerdict out{false, false, ""};
    auto odd_part = [](std::uint32_t x, std::uint32_t& s) {
        s = 0;
        while (!(x & 1)) {
            x >>= 1;
            ++s;
        }
        return x;
    };
    switch (law) {
        case CosetLaw::shifted_pairs_disjoint: {
            if (m < 5 || m % 2 == 0) throw std::invalid_argument("law requires odd m >= 5");
            const std::uint32_t h = (m - 1) / 2, amax = (1u << (h - 1)) - 1;
            if (i < 1 || i > amax || j < 1 || j > amax || i == j)
                throw std::invalid_argument("indices outside the stated range");
            out.claimed = false;  // always disjoint
            out.actual = tab.same_coset(i + (1u << h), j + (1u << h));
            break;
        }
        case CosetLaw::shift_meets_plain: {
            if (m < 5 || m % 2 == 0) throw std::invalid_argument("law requires odd m >= 5");
            const std::uint32_t h = (m - 1) / 2, amax = (1u << (h - 1)) - 1;
            if (i < 1 || i > amax || j < 1 || j > amax || !(j & 1))
                throw std::invalid_argument("indices outside the stated range");
            bool meets = false;
            if (!(i & 1)) {
                std::uint32_t s, i1 = odd_part(i, s);
                // stated pattern: (i, j) = (2^s i1, i1 + 2^{h-s}), s in {2..h-2},
                // i1 odd below 2^{h-1-s}
                if (s >= 2 && s <= h - 2 && i1 < (1u << (h - 1 - s)) && j == i1 + (1u << (h - s)))
                    meets = true;
            }
            out.claimed = meets;
            out.actual = tab.same_coset(i + (1u << h), j);
            break;
        }
        case CosetLaw::kasami_leaders: {
            if (m < 7 || m % 2 == 0) throw std::invalid_argument("law requires odd m >= 7");
            const std::uint32_t h = (m - 1) / 2;
            if (!(j & 1) || j < 1 || j > (1u << h) - 1)
                throw std::invalid_argument("j outside gamma(h)");
            std::uint32_t e = j + (1u << (h + 1));
            std::uint32_t claimed_leader = (j == 1) ? 1 + (1u << h) : e;
            out.claimed = true;
            out.actual = (tab.leader(e) == claimed_leader) && (tab.size(e) == std::uint32_t(m));
            out.note = "leader " + std::to_string(tab.leader(e)) + " size " + std::to_string(tab.size(e));
            break;
        }
        case CosetLaw::kasami_crossings: {
            if (m < 7 || m % 2 == 0) throw std::invalid_argument("law requires odd m >= 7");
            const std::uint32_t h = (m - 1) / 2, amax = (1u << (h - 1)) - 1;
            if (i < 1 || i > amax || !(j & 1) || j < 1 || j > (1u << h) - 1)
                throw std::invalid_argument("indices outside the stated range");
            out.claimed = (i == 1 && j == 1);
            out.actual = tab.same_coset(i + (1u << h), j + (1u << (h + 1)));
            break;
        }
        case CosetLaw::halfspread_pairs: {
            if (m < 4 || m % 2) throw std::invalid_argument("law requires even m >= 4");
            const std::uint32_t h = m / 2;
            if (i < 1 || i > (1u << (h - 1)) - 1 || !(j & 1) || j > (1u << h) - 1)
                throw std::invalid_argument("indices outside the stated range");
            out.claimed = (i == j) && j <= (1u << (h - 1)) - 1;
            out.actual = tab.same_coset(i + (1u << h), j + (1u << h));
            break;
        }
        case CosetLaw::doubled_leaders: {
            if (m < 6 || m % 2) throw std::invalid_argument("law requires even m >= 6");
            const std::uint32_t h = m / 2;
            if (!(j & 1) || j < 1 || j > (1u << h) - 1)
                throw std::invalid_argument("j outside gamma(h)");
            std::uint32_t e = j + (1u << (h + 1));
            std::uint32_t claimed_leader = e, claimed_size = m;
            if (j == 1) claimed_leader = 1 + (1u << (h - 1));
            if (j == 3) claimed_leader = 1 + (1u << (h - 1)) + (1u << h);
            if (j == 5 && h == 3) claimed_size = 2;
            out.claimed = true;
            out.actual = (tab.leader(e) == claimed_leader) && (tab.size(e) == claimed_size);
            out.note = "leader " + std::to_string(tab.leader(e)) + " size " + std::to_string(tab.size(e));
            break;
        }
        case CosetLaw::doubled_meets_plain: {
            if (m < 6 || m % 2) throw std::invalid_argument("law requires even m >= 6");
            const std::uint32_t h = m / 2;
            if (i < 1 || i > (1u << h) - 1 || !(j & 1) || j > (1u << h) - 1)
                throw std::invalid_argument("indices outside the stated range");
            bool meets = false;
            if (!(i & 1)) {
                std::uint32_t s, i1 = odd_part(i, s);
                if (s >= 2 && s <= h - 1 && i1 <= (1u << (h - s)) - 1 && j == i1 + (1u << (h + 1 - s)))
                    meets = true;
            }
            out.claimed = meets;
            out.actual = tab.same_coset(i + (1u << (h + 1)), j);
            break;
        }
    }
    return out;
}

}  // namespace tracecodes

#endif  // TRACECODES_COSETS_HPP
