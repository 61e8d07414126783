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

#ifndef TRACECODES_CODES_HPP
#define TRACECODES_CODES_HPP

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tracecodes/cosets.hpp"
#include "tracecodes/gf2m.hpp"
#include "tracecodes/polyring.hpp"

namespace tracecodes {

using bigint = boost::multiprecision::cpp_int;

struct Distance {
    enum class Kind { unknown, exact, interval } kind = Kind::unknown;
    std::uint32_t lo = 0, hi = 0;
    static Distance exact(std::uint32_t d) { return {Kind::exact, d, d}; }
    static Distance interval(std::uint32_t lo, std::uint32_t hi) { return {Kind::interval, lo, hi}; }
    bool is_exact() const { return kind == Kind::exact; }
    bool contains(std::uint32_t d) const { return kind != Kind::unknown && lo <= d && d <= hi; }
};

/// A binary cyclic code of length v given by its generator polynomial.
struct CodeRecord {
    std::uint32_t n = 0, k = 0;
    BinaryPoly generator, check_poly;
    std::vector<std::uint32_t> defining_set;  // sorted; {i : g(alpha^i) = 0}
    Distance distance;
    std::string method;
};

inline CodeRecord build_code(const BinaryPoly& g, const FieldSpec& fs) {
    const std::uint32_t n = fs.period();
    if (g.is_zero() || g.degree() > static_cast<int>(n))
        throw std::invalid_argument("generator degree out of range");
    auto [h, rem] = divmod(BinaryPoly::xn_plus_1(n), g);
    if (!rem.is_zero()) throw std::invalid_argument("generator does not divide x^n + 1");
    CodeRecord c;
    c.n = n;
    c.k = n - static_cast<std::uint32_t>(g.degree());
    c.generator = g;
    c.check_poly = h;
    c.defining_set.reserve(g.degree());
    for (std::uint32_t i = 0; i < n; ++i)
        if (g.eval(FieldElement(fs.alpha_pow(i), fs)).is_zero()) c.defining_set.push_back(i);
    if (c.defining_set.size() != static_cast<std::size_t>(g.degree()))
        throw std::logic_error("defining set size disagrees with generator degree");
    return c;
}

/// The dual code, generated by the reciprocal of the check polynomial.
inline CodeRecord dual(const CodeRecord& c, const FieldSpec& fs) {
    return build_code(c.check_poly.reciprocal(), fs);
}

namespace detail {

/// Generator matrix in systematic form over the first k coordinates
/// (always an information set for a cyclic code: the k shifts of g restricted
/// to columns [0, k) are triangular with unit diagonal).  Rows are bitsets of
/// ceil(n/64) words.
class SystematicRows {
   public:
    SystematicRows(const CodeRecord& c) : n_(c.n), k_(c.k), words_((c.n + 63) / 64) {
        rows_.assign(k_, std::vector<std::uint64_t>(words_, 0));
        for (std::uint32_t r = 0; r < k_; ++r)
            for (std::uint32_t i = 0; i <= static_cast<std::uint32_t>(c.generator.degree()); ++i)
                if (c.generator.coeff(i)) set(rows_[r], r + i);
        // eliminate to identity on columns [0, k)
        for (std::uint32_t col = 0; col < k_; ++col) {
            std::uint32_t piv = col;
            while (piv < k_ && !get(rows_[piv], col)) ++piv;
            if (piv == k_) throw std::logic_error("cyclic window failed to be an information set");
            std::swap(rows_[col], rows_[piv]);
            for (std::uint32_t r = 0; r < k_; ++r)
                if (r != col && get(rows_[r], col))
                    for (std::uint32_t w = 0; w < words_; ++w) rows_[r][w] ^= rows_[col][w];
        }
    }

    std::uint32_t n() const { return n_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t words() const { return words_; }
    const std::vector<std::uint64_t>& row(std::uint32_t i) const { return rows_[i]; }

    static void set(std::vector<std::uint64_t>& v, std::uint32_t i) {
        v[i / 64] |= std::uint64_t(1) << (i % 64);
    }
    static bool get(const std::vector<std::uint64_t>& v, std::uint32_t i) {
        return v[i / 64] >> (i % 64) & 1;
    }

   private:
    std::uint32_t n_, k_, words_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

inline int weight_of(const std::vector<std::uint64_t>& v) {
    int w = 0;
    for (auto word : v) w += std::popcount(word);
    return w;
}

inline double binom_approx(std::uint32_t n, std::uint32_t k) {
    if (k > n) return 0;
    double r = 1;
    for (std::uint32_t i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
    return r;
}

}  // namespace detail

/// Exact minimum distance by full codeword enumeration (Gray walk over the
/// 2^k - 1 nonzero messages).  Refuses beyond the threshold.
inline std::uint32_t min_distance_enum(const CodeRecord& c, std::uint32_t threshold_k = 26,
                                       int jobs = 0) {
    if (c.k > threshold_k)
        throw std::invalid_argument("dimension " + std::to_string(c.k) +
                                    " exceeds enumeration threshold " + std::to_string(threshold_k));
    detail::SystematicRows rows(c);
    const std::uint32_t k = c.k, words = rows.words();
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    const std::uint32_t split = k > 18 ? 4 : 0;  // parallelize over the top bits
    const std::uint32_t blocks = 1u << split, low = k - split;
    std::atomic<std::uint32_t> best{c.n + 1};
    auto worker = [&](std::uint32_t b0, std::uint32_t b1) {
        std::vector<std::uint64_t> cw(words);
        std::uint32_t local = c.n + 1;
        for (std::uint32_t b = b0; b < b1; ++b) {
            std::fill(cw.begin(), cw.end(), 0);
            for (std::uint32_t i = 0; i < split; ++i)
                if (b >> i & 1)
                    for (std::uint32_t w = 0; w < words; ++w) cw[w] ^= rows.row(low + i)[w];
            if (b) local = std::min(local, static_cast<std::uint32_t>(detail::weight_of(cw)));
            for (std::uint64_t g = 1; g < (std::uint64_t(1) << low); ++g) {
                const int bitidx = std::countr_zero(g);
                const auto& r = rows.row(static_cast<std::uint32_t>(bitidx));
                for (std::uint32_t w = 0; w < words; ++w) cw[w] ^= r[w];
                local = std::min(local, static_cast<std::uint32_t>(detail::weight_of(cw)));
            }
        }
        std::uint32_t cur = best.load();
        while (local < cur && !best.compare_exchange_weak(cur, local)) {
        }
    };
    std::vector<std::thread> pool;
    const std::uint32_t per = std::max(1u, blocks / static_cast<std::uint32_t>(jobs));
    for (std::uint32_t b = 0; b < blocks; b += per)
        pool.emplace_back(worker, b, std::min(blocks, b + per));
    for (auto& t : pool) t.join();
    return best.load();
}

/// Full weight distribution A_0..A_n by the same enumeration.
inline std::vector<std::uint64_t> weight_enumerator(const CodeRecord& c,
                                                    std::uint32_t threshold_k = 26) {
    if (c.k > threshold_k)
        throw std::invalid_argument("dimension " + std::to_string(c.k) +
                                    " exceeds enumeration threshold " + std::to_string(threshold_k));
    detail::SystematicRows rows(c);
    const std::uint32_t words = rows.words();
    std::vector<std::uint64_t> dist(c.n + 1, 0);
    std::vector<std::uint64_t> cw(words, 0);
    dist[0] = 1;
    for (std::uint64_t g = 1; g < (std::uint64_t(1) << c.k); ++g) {
        const auto& r = rows.row(static_cast<std::uint32_t>(std::countr_zero(g)));
        for (std::uint32_t w = 0; w < words; ++w) cw[w] ^= r[w];
        ++dist[static_cast<std::uint32_t>(detail::weight_of(cw))];
    }
    return dist;
}

/// Binary MacWilliams transform: weight distribution of the dual of the code
/// whose distribution is given.  Exact big-integer arithmetic; a non-integer
/// or negative output signals an inconsistent input distribution.
inline std::vector<bigint> macwilliams(const std::vector<bigint>& a, std::uint32_t n,
                                       std::uint32_t k) {
    if (a.size() != n + 1) throw std::invalid_argument("distribution must have n + 1 entries");
    // Krawtchouk table K[j][i], built by K_j(i) = K_j(i-1) - K_{j-1}(i-1) - K_{j-1}(i)
    std::vector<std::vector<bigint>> K(n + 1, std::vector<bigint>(n + 1));
    for (std::uint32_t i = 0; i <= n; ++i) K[0][i] = 1;
    for (std::uint32_t j = 1; j <= n; ++j) {
        K[j][0] = K[j - 1][0] * (n - j + 1) / j;  // C(n, j)
        for (std::uint32_t i = 1; i <= n; ++i)
            K[j][i] = K[j][i - 1] - K[j - 1][i - 1] - K[j - 1][i];
    }
    const bigint size = bigint(1) << k;
    std::vector<bigint> b(n + 1);
    for (std::uint32_t j = 0; j <= n; ++j) {
        bigint acc = 0;
        for (std::uint32_t i = 0; i <= n; ++i)
            if (a[i] != 0) acc += a[i] * K[j][i];
        if (acc < 0 || acc % size != 0)
            throw std::logic_error("MacWilliams transform output is not a valid distribution");
        b[j] = acc / size;
    }
    return b;
}

inline std::vector<bigint> to_bigint(const std::vector<std::uint64_t>& a) {
    return std::vector<bigint>(a.begin(), a.end());
}

struct BzOptions {
    std::uint64_t budget = 400'000'000;  // combinations examined before stopping
    std::uint32_t max_w = 64;
    int jobs = 0;
};

/// Minimum-distance search on the cyclic structure: enumerate messages of
/// weight 1..w over one information window of k consecutive coordinates.
/// Every codeword of weight d has a cyclic shift whose window restriction has
/// weight at most floor(d k / n), so after completing weight w with best found
/// weight ub, any unseen codeword weighs at least ceil((w+1) n / k).  Returns
/// exact when the bound meets the best found weight, else the interval at
/// budget exhaustion.
inline Distance min_distance_bz(const CodeRecord& c, BzOptions opt = {}) {
    detail::SystematicRows rows(c);
    const std::uint32_t k = c.k, words = rows.words(), n = c.n;
    if (opt.jobs <= 0) opt.jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (opt.jobs < 1) opt.jobs = 1;

    std::atomic<std::uint32_t> best{n};  // some nonzero codeword weighs <= n
    double spent = 0;
    std::uint32_t certified = 1;

    for (std::uint32_t w = 1; w <= std::min(opt.max_w, k); ++w) {
        const double pass_cost = detail::binom_approx(k, w);
        if (spent + pass_cost > double(opt.budget)) break;
        std::atomic<std::uint32_t> next_start{0};
        auto worker = [&] {
            // level[d] = xor of the d rows chosen so far
            std::vector<std::vector<std::uint64_t>> level(w + 1,
                                                          std::vector<std::uint64_t>(words, 0));
            auto note = [&](const std::vector<std::uint64_t>& cw) {
                const auto wt = static_cast<std::uint32_t>(detail::weight_of(cw));
                std::uint32_t cur = best.load(std::memory_order_relaxed);
                while (wt < cur && !best.compare_exchange_weak(cur, wt)) {
                }
            };
            auto rec = [&](auto&& self, std::uint32_t depth, std::uint32_t start) -> void {
                for (std::uint32_t i = start; i + (w - depth) <= k; ++i) {
                    const auto& r = rows.row(i);
                    for (std::uint32_t ww = 0; ww < words; ++ww)
                        level[depth + 1][ww] = level[depth][ww] ^ r[ww];
                    if (depth + 1 == w)
                        note(level[w]);
                    else
                        self(self, depth + 1, i + 1);
                }
            };
            for (;;) {
                const std::uint32_t i0 = next_start.fetch_add(1);
                if (i0 + w > k) break;
                const auto& r = rows.row(i0);
                for (std::uint32_t ww = 0; ww < words; ++ww) level[1][ww] = r[ww];
                if (w == 1)
                    note(level[1]);
                else
                    rec(rec, 1, i0 + 1);
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < opt.jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        spent += pass_cost;
        certified = static_cast<std::uint32_t>(((std::uint64_t(w) + 1) * n + k - 1) / k);
        if (certified >= best.load()) return Distance::exact(best.load());
    }
    return Distance::interval(std::min(certified, best.load()), best.load());
}

// ---------------------------------------------------------------------------
// Bounds on the defining set.
// ---------------------------------------------------------------------------

struct HtWitness {
    bool reversed = false;     // bound achieved on the mirrored defining set
    std::uint32_t run_start = 0, delta = 1, b = 0, s = 0;
};

struct HtCaps {
    std::uint32_t max_delta = 64;
    std::uint32_t max_s = 64;
};

namespace detail {

inline std::vector<bool> member_bitmap(const std::vector<std::uint32_t>& zs, std::uint32_t n,
                                       bool mirrored) {
    std::vector<bool> in(n, false);
    for (std::uint32_t z : zs) in[mirrored ? (n - z % n) % n : z % n] = true;
    return in;
}

inline std::uint32_t longest_cyclic_run(const std::vector<bool>& in, std::uint32_t n) {
    std::uint32_t total = 0;
    for (bool b : in) total += b;
    if (total == n) return n;  // whole ring
    std::uint32_t best = 0;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (!in[s] || in[(s + n - 1) % n]) continue;  // run starts here
        std::uint32_t len = 0, x = s;
        while (in[x]) {
            ++len;
            x = x + 1 == n ? 0 : x + 1;
        }
        best = std::max(best, len);
    }
    return best;
}

}  // namespace detail

/// BCH bound: one plus the longest run of consecutive defining-set elements,
/// maximized over the set and its mirror (the reciprocal code has the same
/// weight distribution).
inline std::uint32_t bch_bound(const std::vector<std::uint32_t>& defining_set, std::uint32_t n) {
    std::uint32_t best = 0;
    for (bool mirrored : {false, true}) {
        auto in = detail::member_bitmap(defining_set, n, mirrored);
        best = std::max(best, detail::longest_cyclic_run(in, n));
    }
    return best + 1;
}

/// Verifies one explicit witness: S = {run_start, ..., run_start + delta - 2},
/// T = {j b : 0 <= j <= s}, S + T inside the defining set (or its mirror) and
/// gcd(b, n) < delta.  Returns the implied bound delta + s, or nullopt.
inline std::optional<std::uint32_t> ht_witness_bound(const std::vector<std::uint32_t>& defining_set,
                                                     std::uint32_t n, const HtWitness& wit) {
    if (wit.delta < 2 && wit.s > 0) return std::nullopt;
    if (std::gcd(wit.b, n) >= wit.delta) return std::nullopt;
    auto in = detail::member_bitmap(defining_set, n, wit.reversed);
    for (std::uint32_t j = 0; j <= wit.s; ++j)
        for (std::uint32_t i = 0; i + 1 < wit.delta; ++i)
            if (!in[(wit.run_start + i + std::uint64_t(j) * wit.b) % n]) return std::nullopt;
    return wit.delta + wit.s;
}

/// Exhaustive Hartmann-Tzeng search within caps, both orientations:
/// d >= delta + s whenever a stride-1 run of delta - 1 defining-set elements
/// can be translated s extra times by some b with gcd(b, n) < delta while
/// staying inside the set.
inline std::pair<std::uint32_t, HtWitness> hartmann_tzeng_bound(
    const std::vector<std::uint32_t>& defining_set, std::uint32_t n, HtCaps caps = {}) {
    std::uint32_t best = 1;
    HtWitness best_wit;
    best_wit.b = 1;
    if (defining_set.size() >= n) return {n + 1, HtWitness{false, 0, n + 1, 1, 0}};
    for (bool mirrored : {false, true}) {
        auto in = detail::member_bitmap(defining_set, n, mirrored);
        for (std::uint32_t st = 0; st < n; ++st) {
            if (!in[st] || in[(st + n - 1) % n]) continue;
            std::uint32_t len = 0, x = st;
            while (in[x] && len < n) {
                ++len;
                x = x + 1 == n ? 0 : x + 1;
            }
            if (len + 1 > best) {
                best = len + 1;
                best_wit = HtWitness{mirrored, st, len + 1, 1, 0};
            }
        }
    }
    for (bool mirrored : {false, true}) {
        auto in = detail::member_bitmap(defining_set, n, mirrored);
        std::vector<std::uint32_t> chain(n);
        for (std::uint32_t b = 1; b < n; ++b) {
            const std::uint32_t g = std::gcd(b, n);
            if (g >= caps.max_delta) continue;
            // chain[x] = #translates x, x+b, ... staying in the set (capped)
            const std::uint32_t cap = caps.max_s + 2;
            std::fill(chain.begin(), chain.end(), 0);
            for (std::uint32_t start = 0; start < g; ++start) {
                // walk the cycle of stride b twice to resolve wrap-around
                const std::uint32_t cyc = n / g;
                std::uint32_t x = start, run = 0;
                // find a point outside the set; if none, the whole cycle is in
                bool all_in = true;
                for (std::uint32_t t = 0; t < cyc; ++t) {
                    if (!in[x]) {
                        all_in = false;
                        break;
                    }
                    x = (x + b) % n;
                }
                if (all_in) {
                    x = start;
                    for (std::uint32_t t = 0; t < cyc; ++t) {
                        chain[x] = cap;
                        x = (x + b) % n;
                    }
                    continue;
                }
                // x is outside the set; walk backwards filling chain lengths
                std::uint32_t cur = x;
                for (std::uint32_t t = 0; t < cyc; ++t) {
                    cur = (cur + n - b % n) % n;
                    run = in[cur] ? std::min(run + 1, cap) : 0;
                    chain[cur] = run;
                }
            }
            // maximal stride-1 runs, tracking the min chain length over the run
            for (std::uint32_t st = 0; st < n; ++st) {
                if (!in[st] || in[(st + n - 1) % n]) continue;
                std::uint32_t minchain = UINT32_MAX, x = st, len = 0;
                while (in[x] && len + 1 < caps.max_delta) {
                    ++len;
                    minchain = std::min(minchain, chain[x]);
                    const std::uint32_t delta = len + 1;
                    if (delta > g) {
                        const std::uint32_t s = std::min(minchain - 1, caps.max_s);
                        if (delta + s > best) {
                            best = delta + s;
                            best_wit = HtWitness{mirrored, st, delta, b, s};
                        }
                    }
                    x = x + 1 == n ? 0 : x + 1;
                    if (x == st) break;
                }
            }
        }
    }
    return {best, best_wit};
}

/// Exact sphere-packing feasibility: could an [n, k, d + 1] code exist?
inline bool sphere_packing_admits(std::uint32_t n, std::uint32_t k, std::uint32_t d_plus_1) {
    const std::uint32_t t = (d_plus_1 - 1) / 2;
    bigint sum = 0, binom = 1;
    for (std::uint32_t i = 0; i <= t; ++i) {
        sum += binom;
        binom = binom * (n - i) / (i + 1);
    }
    return sum <= (bigint(1) << (n - k));
}

enum class SpVerdict { optimal, not_optimal, undecided };

inline std::string to_string(SpVerdict v) {
    switch (v) {
        case SpVerdict::optimal: return "optimal";
        case SpVerdict::not_optimal: return "not_optimal";
        case SpVerdict::undecided: return "undecided";
    }
    return "?";
}

/// Optimality in the sphere-packing sense: [n, k, d] is optimal when no
/// [n, k, d + 1] code can satisfy the Hamming bound.  Interval distances
/// straddling the threshold come back undecided.
inline SpVerdict sphere_packing_check(std::uint32_t n, std::uint32_t k, const Distance& d) {
    if (d.kind == Distance::Kind::unknown) return SpVerdict::undecided;
    const bool lo_optimal = !sphere_packing_admits(n, k, d.lo + 1);
    const bool hi_optimal = !sphere_packing_admits(n, k, d.hi + 1);
    if (d.is_exact()) return lo_optimal ? SpVerdict::optimal : SpVerdict::not_optimal;
    if (lo_optimal == hi_optimal) return lo_optimal ? SpVerdict::optimal : SpVerdict::not_optimal;
    return SpVerdict::undecided;
}

/// Rounds a lower bound up to the next even integer; only valid for
/// even-weight codes, i.e. (x + 1) | g, i.e. 0 in the defining set.
inline std::uint32_t even_weight_lift(const CodeRecord& c, std::uint32_t lower) {
    if (c.defining_set.empty() || c.defining_set.front() != 0)
        throw std::invalid_argument("even-weight lift requires (x + 1) | generator");
    return lower + (lower & 1);
}

struct DistanceOptions {
    std::uint32_t enum_threshold = 26;
    BzOptions bz;
};

/// Routes to the cheapest exact method: direct enumeration, dual enumeration
/// plus MacWilliams, or the budgeted information-set search.
inline Distance certify_distance(CodeRecord& c, const FieldSpec& fs, DistanceOptions opt = {}) {
    if (c.k <= opt.enum_threshold) {
        c.method = "enum";
        c.distance = Distance::exact(min_distance_enum(c, opt.enum_threshold, opt.bz.jobs));
        return c.distance;
    }
    if (c.n - c.k <= opt.enum_threshold) {
        c.method = "dual-macwilliams";
        CodeRecord d = dual(c, fs);
        auto dist = macwilliams(to_bigint(weight_enumerator(d, opt.enum_threshold)), c.n, d.k);
        for (std::uint32_t w = 1; w <= c.n; ++w)
            if (dist[w] != 0) {
                c.distance = Distance::exact(w);
                return c.distance;
            }
        throw std::logic_error("zero code where nonzero code expected");
    }
    c.method = "bz";
    c.distance = min_distance_bz(c, opt.bz);
    return c.distance;
}

}  // namespace tracecodes

#endif  // TRACECODES_CODES_HPP
