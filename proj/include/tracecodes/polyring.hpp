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

#ifndef TRACECODES_POLYRING_HPP
#define TRACECODES_POLYRING_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tracecodes/cosets.hpp"
#include "tracecodes/gf2m.hpp"

namespace tracecodes {

/// Dense polynomial over GF(2), bit i of the word vector = coefficient of x^i.
/// Canonical: no words beyond the degree word; the zero polynomial has
/// degree() == -1.  Degrees up to 2^20 (desk scale).
class BinaryPoly {
   public:
    BinaryPoly() = default;

    static BinaryPoly zero() { return BinaryPoly(); }
    static BinaryPoly one() { return from_mask(1); }

    static BinaryPoly from_mask(std::uint64_t bits) {
        BinaryPoly p;
        if (bits) p.w_.push_back(bits);
        p.trim();
        return p;
    }

    static BinaryPoly monomial(std::uint32_t d) {
        BinaryPoly p;
        p.w_.assign(d / 64 + 1, 0);
        p.w_[d / 64] = std::uint64_t(1) << (d % 64);
        p.deg_ = static_cast<int>(d);
        return p;
    }

    static BinaryPoly from_exponents(std::initializer_list<std::uint32_t> es) {
        BinaryPoly p;
        for (auto e : es) p.set_coeff(e, true);
        return p;
    }

    /// x^n + 1.
    static BinaryPoly xn_plus_1(std::uint32_t n) {
        BinaryPoly p = monomial(n);
        p.set_coeff(0, true);
        return p;
    }

    static BinaryPoly parse(std::string_view text) {
        BinaryPoly p;
        std::size_t pos = 0;
        auto fail = [&] { throw std::invalid_argument("malformed polynomial text: " + std::string(text)); };
        if (text == "0") return p;
        while (pos <= text.size()) {
            std::size_t next = text.find('+', pos);
            if (next == std::string_view::npos) next = text.size();
            std::string_view term = text.substr(pos, next - pos);
            while (!term.empty() && term.front() == ' ') term.remove_prefix(1);
            while (!term.empty() && term.back() == ' ') term.remove_suffix(1);
            if (term.empty()) fail();
            if (term == "1") {
                p.set_coeff(0, true);
            } else if (term == "x") {
                p.set_coeff(1, true);
            } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
                std::uint64_t d = 0;
                for (char c : term.substr(2)) {
                    if (c < '0' || c > '9') fail();
                    d = d * 10 + std::uint64_t(c - '0');
                    if (d > (1u << 20)) fail();
                }
                p.set_coeff(static_cast<std::uint32_t>(d), true);
            } else {
                fail();
            }
            if (next == text.size()) break;
            pos = next + 1;
        }
        return p;
    }

    /// Hex form of the coefficient bit string, LSB = constant term
    /// (so "0x13" is x^4+x+1).
    static BinaryPoly from_hex(std::string_view text) {
        if (text.substr(0, 2) == "0x" || text.substr(0, 2) == "0X") text.remove_prefix(2);
        if (text.empty()) throw std::invalid_argument("empty hex polynomial");
        BinaryPoly p;
        std::uint32_t bitpos = 0;
        for (std::size_t i = text.size(); i-- > 0;) {
            char c = text[i];
            int nib;
            if (c >= '0' && c <= '9') nib = c - '0';
            else if (c >= 'a' && c <= 'f') nib = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') nib = c - 'A' + 10;
            else throw std::invalid_argument("bad hex digit in polynomial");
            for (int b = 0; b < 4; ++b)
                if (nib >> b & 1) p.set_coeff(bitpos + b, true);
            bitpos += 4;
        }
        return p;
    }

    int degree() const { return deg_; }
    bool is_zero() const { return deg_ < 0; }

    bool coeff(std::uint32_t i) const {
        if (deg_ < 0 || i > static_cast<std::uint32_t>(deg_)) return false;
        return w_[i / 64] >> (i % 64) & 1;
    }

    void set_coeff(std::uint32_t i, bool val) {
        if (i / 64 >= w_.size()) {
            if (!val) return;
            w_.resize(i / 64 + 1, 0);
        }
        if (val)
            w_[i / 64] |= std::uint64_t(1) << (i % 64);
        else
            w_[i / 64] &= ~(std::uint64_t(1) << (i % 64));
        trim();
    }

    int weight() const {
        int w = 0;
        for (auto word : w_) w += std::popcount(word);
        return w;
    }

    std::uint64_t to_mask() const {
        if (deg_ > 63) throw std::domain_error("polynomial degree exceeds 63-bit mask");
        return w_.empty() ? 0 : w_[0];
    }

    friend BinaryPoly operator+(const BinaryPoly& a, const BinaryPoly& b) {
        BinaryPoly r = a;
        if (r.w_.size() < b.w_.size()) r.w_.resize(b.w_.size(), 0);
        for (std::size_t i = 0; i < b.w_.size(); ++i) r.w_[i] ^= b.w_[i];
        r.trim();
        return r;
    }

    friend BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        BinaryPoly r;
        r.w_.assign((a.deg_ + b.deg_) / 64 + 1, 0);
        for (std::uint32_t i = 0; i <= static_cast<std::uint32_t>(a.deg_); ++i) {
            if (!a.coeff(i)) continue;
            const std::uint32_t word = i / 64, sh = i % 64;
            for (std::size_t j = 0; j < b.w_.size(); ++j) {
                r.w_[word + j] ^= b.w_[j] << sh;
                if (sh && word + j + 1 < r.w_.size()) r.w_[word + j + 1] ^= b.w_[j] >> (64 - sh);
            }
        }
        r.trim();
        return r;
    }

    /// Quotient and remainder with deg(r) < deg(b); b must be nonzero.
    friend std::pair<BinaryPoly, BinaryPoly> divmod(const BinaryPoly& a, const BinaryPoly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        BinaryPoly q, r = a;
        while (r.deg_ >= b.deg_) {
            std::uint32_t sh = static_cast<std::uint32_t>(r.deg_ - b.deg_);
            q.set_coeff(sh, true);
            r.xor_shifted(b, sh);
        }
        return {q, r};
    }

    friend BinaryPoly operator/(const BinaryPoly& a, const BinaryPoly& b) { return divmod(a, b).first; }
    friend BinaryPoly operator%(const BinaryPoly& a, const BinaryPoly& b) { return divmod(a, b).second; }

    friend bool operator==(const BinaryPoly& a, const BinaryPoly& b) {
        return a.deg_ == b.deg_ && a.w_ == b.w_;
    }

    /// x^deg * p(1/x); requires a nonzero constant term so degree is preserved.
    BinaryPoly reciprocal() const {
        if (!coeff(0)) throw std::domain_error("reciprocal requires nonzero constant term");
        BinaryPoly r;
        for (std::uint32_t i = 0; i <= static_cast<std::uint32_t>(deg_); ++i)
            if (coeff(i)) r.set_coeff(static_cast<std::uint32_t>(deg_) - i, true);
        return r;
    }

    FieldElement eval(FieldElement x) const {
        const FieldSpec& fs = x.spec();
        FieldElement acc = gf_zero(fs);
        for (int i = deg_; i >= 0; --i) {
            acc = acc * x;
            if (coeff(static_cast<std::uint32_t>(i))) acc = acc + gf_one(fs);
        }
        return acc;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int d = deg_; d >= 0; --d) {
            if (!coeff(static_cast<std::uint32_t>(d))) continue;
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

    std::string to_hex() const {
        if (is_zero()) return "0x0";
        std::string out;
        bool leading = true;
        for (int nib = deg_ / 4; nib >= 0; --nib) {
            int val = 0;
            for (int b = 0; b < 4; ++b)
                if (coeff(static_cast<std::uint32_t>(nib * 4 + b))) val |= 1 << b;
            if (leading && val == 0) continue;
            leading = false;
            out += "0123456789abcdef"[val];
        }
        return "0x" + out;
    }

   private:
    void trim() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
        deg_ = w_.empty() ? -1 : static_cast<int>(w_.size() * 64 - 1 - std::countl_zero(w_.back()));
    }

    // r ^= b << (sh bits); assumes capacity
    void xor_shifted(const BinaryPoly& b, std::uint32_t sh) {
        const std::uint32_t word = sh / 64, bits = sh % 64;
        if ((b.deg_ + static_cast<int>(sh)) / 64 >= static_cast<int>(w_.size()))
            w_.resize((b.deg_ + sh) / 64 + 1, 0);
        for (std::size_t j = 0; j < b.w_.size(); ++j) {
            w_[word + j] ^= b.w_[j] << bits;
            if (bits && word + j + 1 < w_.size()) w_[word + j + 1] ^= b.w_[j] >> (64 - bits);
        }
        trim();
    }

    std::vector<std::uint64_t> w_;
    int deg_ = -1;
};

inline BinaryPoly reciprocal(const BinaryPoly& p) { return p.reciprocal(); }

/// Minimal polynomial of alpha^i over GF(2): expand prod_{s in C_i} (x - alpha^s)
/// in GF(2^m)[x]; every coefficient must land in {0, 1} (the product is fixed
/// by Frobenius), which doubles as a self-test of the field arithmetic.
inline BinaryPoly minimal_polynomial(std::uint32_t i, const FieldSpec& fs, const CosetTable& tab) {
    if (fs.m() != tab.m()) throw std::invalid_argument("field and coset table disagree on m");
    const std::vector<std::uint32_t> cs = tab.coset(i % fs.period());
    std::vector<std::uint32_t> coeffs{1};  // GF(2^m) coefficients, low degree first
    coeffs.reserve(cs.size() + 1);
    for (std::uint32_t s : cs) {
        const std::uint32_t root = fs.alpha_pow(s);
        std::vector<std::uint32_t> next(coeffs.size() + 1, 0);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next[j + 1] ^= coeffs[j];                    // x * c_j
            next[j] ^= fs.mul_raw(coeffs[j], root);      // root * c_j
        }
        coeffs = std::move(next);
    }
    BinaryPoly out;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] > 1)
            throw std::logic_error("minimal polynomial coefficient escaped GF(2)");
        if (coeffs[j]) out.set_coeff(static_cast<std::uint32_t>(j), true);
    }
    return out;
}

/// Complete factorization x^v - 1 = prod over coset leaders of the minimal
/// polynomial of alpha^leader.
inline std::vector<std::pair<std::uint32_t, BinaryPoly>> factor_xv_minus_1(const FieldSpec& fs,
                                                                           const CosetTable& tab) {
    std::vector<std::pair<std::uint32_t, BinaryPoly>> out;
    out.reserve(tab.leaders().size());
    for (std::uint32_t lead : tab.leaders())
        out.emplace_back(lead, minimal_polynomial(lead, fs, tab));
    return out;
}

}  // namespace tracecodes

#endif  // TRACECODES_POLYRING_HPP
