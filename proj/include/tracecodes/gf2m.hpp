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

#ifndef TRACECODES_GF2M_HPP
#define TRACECODES_GF2M_HPP

#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tracecodes {

/// Renders a small GF(2) polynomial bitmask as "x^6+x^2+x+1" (descending degree).
inline std::string poly_mask_to_string(std::uint64_t mask) {
    if (mask == 0) return "0";
    std::string out;
    for (int d = 63; d >= 0; --d) {
        if (!(mask >> d & 1)) continue;
        if (!out.empty()) out += '+';
        if (d == 0)
            out += '1';
        else if (d == 1)
            out += 'x';
        else
            out += "x^" + std::to_string(d);
    }
    return out;
}

/// Parses "x^6+x^2+x+1" (monomials joined by '+', descending or any order).
inline std::uint64_t poly_mask_from_string(std::string_view text) {
    std::uint64_t mask = 0;
    std::size_t pos = 0;
    auto fail = [&] { throw std::invalid_argument("malformed polynomial text: " + std::string(text)); };
    while (pos < text.size()) {
        std::size_t next = text.find('+', pos);
        if (next == std::string_view::npos) next = text.size();
        std::string_view term = text.substr(pos, next - pos);
        while (!term.empty() && term.front() == ' ') term.remove_prefix(1);
        while (!term.empty() && term.back() == ' ') term.remove_suffix(1);
        if (term.empty()) fail();
        if (term == "1") {
            mask |= 1;
        } else if (term == "x") {
            mask |= 2;
        } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
            int d = 0;
            for (char c : term.substr(2)) {
                if (c < '0' || c > '9') fail();
                d = d * 10 + (c - '0');
                if (d > 63) fail();
            }
            mask |= std::uint64_t(1) << d;
        } else {
            fail();
        }
        pos = next + 1;
    }
    if (mask == 0) fail();
    return mask;
}

namespace detail {

inline std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> ps;
    for (std::uint32_t p = 2; std::uint64_t(p) * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace detail

/// GF(2^m) in polynomial basis over a fixed primitive polynomial.
///
/// Construction builds full power/log tables of the primitive element alpha
/// (desk scale, m <= 20) and rejects any modulus whose root does not have
/// multiplicative order exactly v = 2^m - 1.  Immutable afterwards, safe to
/// share across threads.
class FieldSpec {
   public:
    FieldSpec(int m, std::uint64_t poly) : m_(m), poly_(static_cast<std::uint32_t>(poly)) {
        if (m < 2 || m > 20) throw std::invalid_argument("extension degree m must be in [2, 20]");
        if (poly >> (m + 1) || !(poly >> m & 1) || !(poly & 1))
            throw std::invalid_argument("modulus must have degree exactly m and nonzero constant term");
        v_ = (std::uint32_t(1) << m) - 1;
        pow_.assign(v_, 0);
        log_.assign(std::size_t(1) << m, UINT32_MAX);
        std::uint32_t a = 1;
        for (std::uint32_t i = 0; i < v_; ++i) {
            if (log_[a] != UINT32_MAX)
                throw std::invalid_argument("polynomial is not primitive: " + poly_mask_to_string(poly));
            pow_[i] = a;
            log_[a] = i;
            a <<= 1;
            if (a >> m & 1) a ^= poly_;
        }
        if (a != 1) throw std::invalid_argument("polynomial is not primitive: " + poly_mask_to_string(poly));
        // Tr is GF(2)-linear; fold the traces of the basis into one mask.
        trace_mask_ = 0;
        for (int i = 0; i < m; ++i) {
            std::uint32_t y = std::uint32_t(1) << i, t = 0;
            for (int j = 0; j < m; ++j) {
                t ^= y;
                y = mul_raw(y, y);
            }
            if (t & 1) trace_mask_ |= std::uint32_t(1) << i;
        }
    }

    int m() const { return m_; }
    std::uint32_t modulus() const { return poly_; }
    std::uint32_t period() const { return v_; }

    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= v_) s -= v_;
        return pow_[s];
    }

    std::uint32_t alpha_pow(std::int64_t e) const {
        e %= v_;
        if (e < 0) e += v_;
        return pow_[static_cast<std::uint32_t>(e)];
    }

    std::uint32_t log_raw(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("discrete log of zero");
        return log_[a];
    }

    int trace_raw(std::uint32_t a) const { return std::popcount(a & trace_mask_) & 1; }

    bool operator==(const FieldSpec& o) const { return m_ == o.m_ && poly_ == o.poly_; }

    /// Bundled default modulus for each m.  The m = 6, 7, 8 entries are the
    /// polynomials that reproduce the reference generator polynomials bundled
    /// under data/ (see README); all entries are verified primitive on use.
    static std::uint64_t default_poly(int m) {
        std::lock_guard<std::mutex> lk(override_mutex());
        return default_poly_nolock(m);
    }

    static void override_default(int m, std::uint64_t poly) {
        FieldSpec probe(m, poly);  // validates
        std::lock_guard<std::mutex> lk(override_mutex());
        override_map()[m] = poly;
    }

    /// Plain-text config, one line per m: `m=7 poly=x^7+x^3+1`.
    /// Lines starting with '#' are comments.
    static void load_config(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open polynomial config: " + path);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ls(line);
            std::string mtok, ptok;
            if (!(ls >> mtok)) continue;
            if (!(ls >> ptok) || mtok.rfind("m=", 0) != 0 || ptok.rfind("poly=", 0) != 0)
                throw std::invalid_argument("malformed config line: " + line);
            int m = std::stoi(mtok.substr(2));
            override_default(m, poly_mask_from_string(ptok.substr(5)));
        }
    }

    /// Shared, cached spec for the bundled default modulus of m.
    static const FieldSpec& bundled(int m) {
        std::lock_guard<std::mutex> lk(override_mutex());
        static std::map<std::pair<int, std::uint64_t>, FieldSpec> cache;
        std::uint64_t p = default_poly_nolock(m);
        auto key = std::make_pair(m, p);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, FieldSpec(m, p)).first;
        return it->second;
    }

   private:
    static std::map<int, std::uint64_t>& override_map() {
        static std::map<int, std::uint64_t> m;
        return m;
    }
    static std::mutex& override_mutex() {
        static std::mutex mu;
        return mu;
    }
    static std::uint64_t default_poly_nolock(int m) {
        auto& ov = override_map();
        if (auto it = ov.find(m); it != ov.end()) return it->second;
        switch (m) {
            case 2: return 0x7;        // x^2+x+1
            case 3: return 0xB;        // x^3+x+1
            case 4: return 0x13;       // x^4+x+1
            case 5: return 0x25;       // x^5+x^2+1
            case 6: return 0x5B;       // x^6+x^4+x^3+x+1
            case 7: return 0x83;       // x^7+x+1
            case 8: return 0x11D;      // x^8+x^4+x^3+x^2+1
            case 9: return 0x211;      // x^9+x^4+1
            case 10: return 0x409;     // x^10+x^3+1
            case 11: return 0x805;     // x^11+x^2+1
            case 12: return 0x1053;    // x^12+x^6+x^4+x+1
            case 13: return 0x201B;    // x^13+x^4+x^3+x+1
            case 14: return 0x4443;    // x^14+x^10+x^6+x+1
            case 15: return 0x8003;    // x^15+x+1
            case 16: return 0x1100B;   // x^16+x^12+x^3+x+1
            case 17: return 0x20009;   // x^17+x^3+1
            case 18: return 0x40081;   // x^18+x^7+1
            case 19: return 0x80027;   // x^19+x^5+x^2+x+1
            case 20: return 0x100009;  // x^20+x^3+1
            default: throw std::invalid_argument("no bundled primitive polynomial for m=" + std::to_string(m));
        }
    }

    int m_;
    std::uint32_t poly_;
    std::uint32_t v_;
    std::vector<std::uint32_t> pow_;
    std::vector<std::uint32_t> log_;
    std::uint32_t trace_mask_;
};

/// Independent primitivity oracle: x^v = 1 and x^{v/p} != 1 for every prime
/// p | v, computed by shift-xor square-and-multiply without the tables.
inline bool verify_primitive(int m, std::uint64_t poly) {
    if (m < 2 || m > 20 || poly >> (m + 1) || !(poly >> m & 1)) return false;
    const std::uint32_t v = (std::uint32_t(1) << m) - 1;
    auto clmul = [&](std::uint32_t a, std::uint32_t b) {
        std::uint64_t acc = 0;
        while (b) {
            acc ^= std::uint64_t(a) << std::countr_zero(b);
            b &= b - 1;
        }
        for (int d = 2 * m - 2; d >= m; --d)
            if (acc >> d & 1) acc ^= poly << (d - m);
        return static_cast<std::uint32_t>(acc);
    };
    auto xpow = [&](std::uint32_t e) {
        std::uint32_t r = 1, base = 2;
        while (e) {
            if (e & 1) r = clmul(r, base);
            base = clmul(base, base);
            e >>= 1;
        }
        return r;
    };
    if (xpow(v) != 1) return false;
    for (std::uint32_t p : detail::prime_factors(v))
        if (xpow(v / p) == 1) return false;
    return true;
}

/// An element of GF(2^m), bit i = coefficient of alpha^i.
class FieldElement {
   public:
    FieldElement() : val_(0), fs_(nullptr) {}
    FieldElement(std::uint32_t val, const FieldSpec& fs) : val_(val), fs_(&fs) {
        if (val > fs.period()) throw std::invalid_argument("element value out of range");
    }

    std::uint32_t value() const { return val_; }
    const FieldSpec& spec() const {
        if (!fs_) throw std::invalid_argument("default-constructed field element has no field");
        return *fs_;
    }
    bool is_zero() const { return val_ == 0; }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        a.check_same(b);
        return FieldElement(a.val_ ^ b.val_, a.spec());
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        a.check_same(b);
        return FieldElement(a.spec().mul_raw(a.val_, b.val_), a.spec());
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        return a.val_ == b.val_;
    }

   private:
    void check_same(const FieldElement& o) const {
        if (!fs_ || !o.fs_ || !(*fs_ == *o.fs_))
            throw std::invalid_argument("field elements belong to different fields");
    }
    std::uint32_t val_;
    const FieldSpec* fs_;
};

inline FieldElement gf_zero(const FieldSpec& fs) { return FieldElement(0, fs); }
inline FieldElement gf_one(const FieldSpec& fs) { return FieldElement(1, fs); }
inline FieldElement gf_alpha(const FieldSpec& fs) { return FieldElement(fs.alpha_pow(1), fs); }

inline FieldElement pow(FieldElement a, std::int64_t e) {
    const FieldSpec& fs = a.spec();
    if (a.is_zero()) {
        if (e < 0) throw std::domain_error("negative power of zero");
        return e == 0 ? gf_one(fs) : gf_zero(fs);
    }
    std::int64_t t = std::int64_t(fs.log_raw(a.value())) * (e % fs.period());
    return FieldElement(fs.alpha_pow(t), fs);
}

inline FieldElement inverse(FieldElement a) { return pow(a, -1); }

inline int trace(FieldElement a) { return a.spec().trace_raw(a.value()); }

/// The unique t in [0, v) with alpha^t = a.
inline std::uint32_t dlog(FieldElement a) { return a.spec().log_raw(a.value()); }

}  // namespace tracecodes

#endif  // TRACECODES_GF2M_HPP
