/*
   Copyright 2026 quadalg contributors

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

#ifndef QUADALG_FIELD_HPP
#define QUADALG_FIELD_HPP

#include <cassert>
#include <cctype>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quadalg/base_field.hpp"

namespace quadalg {

/// Tower of quadratic extensions over Q or F_p. Step i adjoins a
/// generator r_{i+1} with minimal polynomial r^2 + p_i r + q_i, where
/// p_i, q_i live in the tower built so far. Height is capped at 2:
/// two quadratic relations never need more.
///
/// Towers are immutable and shared via shared_ptr; elements hold a
/// pointer to their tower plus a coordinate vector over the 2^height
/// basis of generator products. Representation is always fully reduced,
/// so equality is coordinate-wise.
template <typename K>
class ExtensionTower {
   public:
    struct Step {
        std::vector<K> p;  // coefficients over the basis of the tower below
        std::vector<K> q;
    };

    static std::shared_ptr<const ExtensionTower> make_base(const BaseField& f) {
        return std::shared_ptr<const ExtensionTower>(new ExtensionTower(f, {}));
    }
    std::shared_ptr<const ExtensionTower> extended(std::vector<K> p, std::vector<K> q) const {
        std::vector<Step> steps = steps_;
        steps.push_back(Step{std::move(p), std::move(q)});
        return std::shared_ptr<const ExtensionTower>(new ExtensionTower(base_, std::move(steps)));
    }

    const BaseField& base() const { return base_; }
    std::size_t height() const { return steps_.size(); }
    std::size_t dim() const { return std::size_t(1) << steps_.size(); }
    const Step& step(std::size_t i) const { return steps_[i]; }

    K zero_scalar() const { return scalar_zero(base_, static_cast<const K*>(nullptr)); }
    K scalar(long n) const { return scalar_from_long(n, base_, static_cast<const K*>(nullptr)); }

    bool same_structure(const ExtensionTower& o) const {
        if (base_ != o.base_ || steps_.size() != o.steps_.size()) return false;
        for (std::size_t i = 0; i < steps_.size(); ++i)
            if (steps_[i].p != o.steps_[i].p || steps_[i].q != o.steps_[i].q) return false;
        return true;
    }
    bool is_prefix_of(const ExtensionTower& o) const {
        if (base_ != o.base_ || steps_.size() > o.steps_.size()) return false;
        for (std::size_t i = 0; i < steps_.size(); ++i)
            if (steps_[i].p != o.steps_[i].p || steps_[i].q != o.steps_[i].q) return false;
        return true;
    }

    // --- coordinate-span arithmetic -------------------------------------
    // Level h operates on spans of length 2^h; the element type below
    // always passes h = height().

    void add_into(std::span<const K> a, std::span<const K> b, std::span<K> out) const {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    }
    void sub_into(std::span<const K> a, std::span<const K> b, std::span<K> out) const {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    }

    std::vector<K> mul(std::size_t h, std::span<const K> a, std::span<const K> b) const {
        const std::size_t n = std::size_t(1) << h;
        assert(a.size() == n && b.size() == n);
        if (h == 0) return {a[0] * b[0]};
        const std::size_t half = n / 2;
        auto a0 = a.subspan(0, half), a1 = a.subspan(half);
        auto b0 = b.subspan(0, half), b1 = b.subspan(half);
        std::vector<K> t00 = mul(h - 1, a0, b0);
        std::vector<K> t11 = mul(h - 1, a1, b1);
        std::vector<K> t01 = mul(h - 1, a0, b1);
        std::vector<K> t10 = mul(h - 1, a1, b0);
        const Step& st = steps_[h - 1];
        std::vector<K> qt = mul(h - 1, std::span<const K>(st.q), std::span<const K>(t11));
        std::vector<K> pt = mul(h - 1, std::span<const K>(st.p), std::span<const K>(t11));
        std::vector<K> out(n, zero_scalar());
        for (std::size_t i = 0; i < half; ++i) {
            out[i] = t00[i] - qt[i];
            out[half + i] = t01[i] + t10[i] - pt[i];
        }
        return out;
    }

    std::vector<K> inv(std::size_t h, std::span<const K> a) const {
        const std::size_t n = std::size_t(1) << h;
        if (h == 0) {
            return {scalar_inverse(a[0])};
        }
        const std::size_t half = n / 2;
        auto a0 = a.subspan(0, half), a1 = a.subspan(half);
        const Step& st = steps_[h - 1];
        // conjugate of a0 + a1 r is (a0 - p a1) - a1 r; the product is the
        // norm, an element of the tower below.
        std::vector<K> pa1 = mul(h - 1, std::span<const K>(st.p), a1);
        std::vector<K> conj(n, zero_scalar());
        for (std::size_t i = 0; i < half; ++i) {
            conj[i] = a0[i] - pa1[i];
            conj[half + i] = -a1[i];
        }
        std::vector<K> prod = mul(h, a, std::span<const K>(conj));
        for (std::size_t i = half; i < n; ++i) assert(scalar_is_zero(prod[i]));
        std::vector<K> norm(prod.begin(), prod.begin() + half);
        bool zero = true;
        for (const K& c : norm)
            if (!scalar_is_zero(c)) zero = false;
        if (zero) throw domain_error("division by zero in extension tower");
        std::vector<K> ninv = inv(h - 1, std::span<const K>(norm));
        std::vector<K> out(n, zero_scalar());
        std::vector<K> lo = mul(h - 1, std::span<const K>(conj).subspan(0, half), std::span<const K>(ninv));
        std::vector<K> hi = mul(h - 1, std::span<const K>(conj).subspan(half), std::span<const K>(ninv));
        for (std::size_t i = 0; i < half; ++i) {
            out[i] = lo[i];
            out[half + i] = hi[i];
        }
        return out;
    }

   private:
    ExtensionTower(BaseField f, std::vector<Step> steps) : base_(f), steps_(std::move(steps)) {}
    BaseField base_;
    std::vector<Step> steps_;
};

template <typename K>
using TowerPtr = std::shared_ptr<const ExtensionTower<K>>;

/// Element of a tower field in canonical reduced coordinates.
template <typename K>
class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(TowerPtr<K> tower, std::vector<K> coords) : tower_(std::move(tower)), coords_(std::move(coords)) {
        assert(coords_.size() == tower_->dim());
    }

    static FieldElement zero(const TowerPtr<K>& t) {
        return FieldElement(t, std::vector<K>(t->dim(), t->zero_scalar()));
    }
    static FieldElement one(const TowerPtr<K>& t) { return from_long(1, t); }
    static FieldElement from_long(long n, const TowerPtr<K>& t) {
        std::vector<K> c(t->dim(), t->zero_scalar());
        c[0] = t->scalar(n);
        return FieldElement(t, std::move(c));
    }
    static FieldElement from_scalar(const K& s, const TowerPtr<K>& t) {
        std::vector<K> c(t->dim(), t->zero_scalar());
        c[0] = s;
        return FieldElement(t, std::move(c));
    }
    /// The k-th adjoined generator (0-based), printed as r{k+1}.
    static FieldElement generator(std::size_t k, const TowerPtr<K>& t) {
        if (k >= t->height()) throw domain_error("tower has no generator r" + std::to_string(k + 1));
        std::vector<K> c(t->dim(), t->zero_scalar());
        c[std::size_t(1) << k] = t->scalar(1);
        return FieldElement(t, std::move(c));
    }

    const TowerPtr<K>& tower() const { return tower_; }
    const std::vector<K>& coords() const { return coords_; }

    bool is_zero() const {
        for (const K& c : coords_)
            if (!scalar_is_zero(c)) return false;
        return true;
    }
    bool is_one() const { return *this == one(tower_); }

    /// True when the element lies in the base field (all extension
    /// coordinates vanish).
    bool in_base() const {
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (!scalar_is_zero(coords_[i])) return false;
        return true;
    }
    const K& base_coord() const { return coords_[0]; }

    FieldElement lifted_to(const TowerPtr<K>& t) const {
        if (tower_->same_structure(*t)) return FieldElement(t, coords_);
        if (!tower_->is_prefix_of(*t)) throw domain_error("element does not embed into target tower");
        std::vector<K> c(t->dim(), t->zero_scalar());
        for (std::size_t i = 0; i < coords_.size(); ++i) c[i] = coords_[i];
        return FieldElement(t, std::move(c));
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        auto [x, y] = unify(a, b);
        std::vector<K> out(x.coords_.size(), x.tower_->zero_scalar());
        x.tower_->add_into(x.coords_, y.coords_, out);
        return FieldElement(x.tower_, std::move(out));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        auto [x, y] = unify(a, b);
        std::vector<K> out(x.coords_.size(), x.tower_->zero_scalar());
        x.tower_->sub_into(x.coords_, y.coords_, out);
        return FieldElement(x.tower_, std::move(out));
    }
    FieldElement operator-() const {
        std::vector<K> out;
        out.reserve(coords_.size());
        for (const K& c : coords_) out.push_back(-c);
        return FieldElement(tower_, std::move(out));
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        auto [x, y] = unify(a, b);
        return FieldElement(x.tower_, x.tower_->mul(x.tower_->height(), x.coords_, y.coords_));
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
    FieldElement inverse() const {
        return FieldElement(tower_, tower_->inv(tower_->height(), coords_));
    }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const {
        if (tower_->same_structure(*o.tower_)) return coords_ == o.coords_;
        auto [x, y] = unify(*this, o);
        return x.coords_ == y.coords_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Lexicographic comparison of coordinate vectors; the fixed total
    /// order behind deterministic root ordering.
    int cmp(const FieldElement& o) const {
        auto [x, y] = unify(*this, o);
        for (std::size_t i = 0; i < x.coords_.size(); ++i) {
            int c = scalar_cmp(x.coords_[i], y.coords_[i]);
            if (c != 0) return c;
        }
        return 0;
    }

    std::string to_string() const;

    static std::pair<FieldElement, FieldElement> unify(const FieldElement& a, const FieldElement& b) {
        if (a.tower_->same_structure(*b.tower_)) return {a, FieldElement(a.tower_, b.coords_)};
        if (b.tower_->is_prefix_of(*a.tower_)) return {a, b.lifted_to(a.tower_)};
        if (a.tower_->is_prefix_of(*b.tower_)) return {a.lifted_to(b.tower_), b};
        throw domain_error("cannot mix elements of unrelated towers");
    }

   private:
    TowerPtr<K> tower_;
    std::vector<K> coords_;
};

template <typename K>
std::string FieldElement<K>::to_string() const {
    std::string out;
    const K one_s = tower_->scalar(1);
    const K minus_one_s = tower_->scalar(-1);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const K& c = coords_[i];
        if (scalar_is_zero(c)) continue;
        std::string mono;
        for (std::size_t k = 0; k < tower_->height(); ++k)
            if (i & (std::size_t(1) << k)) {
                if (!mono.empty()) mono += "*";
                mono += "r" + std::to_string(k + 1);
            }
        std::string cs = scalar_to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        const bool neg_unit = !(c == one_s) && c == minus_one_s && !mono.empty();
        std::string mag = neg ? cs.substr(1) : cs;
        std::string term;
        if (mono.empty())
            term = mag;
        else if (c == one_s || neg_unit)
            term = mono;
        else
            term = mag + "*" + mono;
        if (out.empty())
            out = (neg || neg_unit) ? "-" + term : term;
        else
            out += (neg || neg_unit) ? " - " + term : " + " + term;
    }
    return out.empty() ? "0" : out;
}

/// Parses the rendering produced by to_string: a +/- separated sum of
/// terms, each a '*'-separated product of rational literals and
/// generators r1, r2.
template <typename K>
FieldElement<K> parse_field_element(const std::string& src, const TowerPtr<K>& tower) {
    FieldElement<K> total = FieldElement<K>::zero(tower);
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < src.size() && isspace(static_cast<unsigned char>(src[i]))) ++i;
    };
    skip_ws();
    if (i == src.size()) throw domain_error("empty field element");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == src.size()) {
            if (first) throw domain_error("empty field element");
            break;
        }
        int sign = 1;
        if (src[i] == '+' || src[i] == '-') {
            if (src[i] == '-') sign = -1;
            ++i;
        } else if (!first) {
            throw domain_error("expected '+' or '-' at position " + std::to_string(i));
        }
        first = false;
        FieldElement<K> term = FieldElement<K>::from_long(sign, tower);
        bool any_factor = false;
        while (true) {
            skip_ws();
            if (i < src.size() && src[i] == 'r') {
                std::size_t j = i + 1, k = 0;
                while (j < src.size() && isdigit(static_cast<unsigned char>(src[j]))) {
                    k = k * 10 + static_cast<std::size_t>(src[j] - '0');
                    ++j;
                }
                if (j == i + 1 || k == 0) throw domain_error("bad generator at position " + std::to_string(i));
                term *= FieldElement<K>::generator(k - 1, tower);
                i = j;
            } else if (i < src.size() && (isdigit(static_cast<unsigned char>(src[i])))) {
                std::size_t j = i;
                while (j < src.size() && (isdigit(static_cast<unsigned char>(src[j])) || src[j] == '/')) ++j;
                K s = scalar_parse(src.substr(i, j - i), tower->base(), static_cast<const K*>(nullptr));
                term *= FieldElement<K>::from_scalar(s, tower);
                i = j;
            } else {
                throw domain_error("expected coefficient or generator at position " + std::to_string(i));
            }
            any_factor = true;
            skip_ws();
            if (i < src.size() && src[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!any_factor) throw domain_error("empty term at position " + std::to_string(i));
        total += term;
    }
    return total;
}

// --- square roots and root adjunction ----------------------------------

namespace detail {

template <typename K>
std::optional<std::vector<K>> sqrt_coords(const ExtensionTower<K>& tw, std::size_t h, std::span<const K> d);

template <typename K>
bool coords_zero(std::span<const K> v) {
    for (const K& c : v)
        if (!scalar_is_zero(c)) return false;
    return true;
}

/// In characteristic 2 every finite-field element is a square; the
/// Frobenius inverse is (2^h - 1)-fold squaring at tower height h.
template <typename K>
std::vector<K> sqrt_coords_char2(const ExtensionTower<K>& tw, std::span<const K> d) {
    std::vector<K> s(d.begin(), d.end());
    const std::size_t m = std::size_t(1) << tw.height();
    for (std::size_t i = 0; i + 1 < m; ++i) s = tw.mul(tw.height(), std::span<const K>(s), std::span<const K>(s));
    return s;
}

template <typename K>
std::optional<std::vector<K>> sqrt_coords(const ExtensionTower<K>& tw, std::size_t h, std::span<const K> d) {
    const std::size_t n = std::size_t(1) << h;
    if (coords_zero(d)) return std::vector<K>(d.begin(), d.end());
    if (h == 0) {
        auto r = scalar_sqrt(d[0], tw.base());
        if (!r) return std::nullopt;
        return std::vector<K>{*r};
    }
    const std::size_t half = n / 2;
    auto d0 = d.subspan(0, half), d1 = d.subspan(half);
    const auto& st = tw.step(h - 1);
    std::span<const K> p(st.p), q(st.q);
    const auto sub = [&](const std::vector<K>& a, const std::vector<K>& b) {
        std::vector<K> o(half, tw.zero_scalar());
        for (std::size_t i = 0; i < half; ++i) o[i] = a[i] - b[i];
        return o;
    };
    const auto scale = [&](long k, std::span<const K> a) {
        std::vector<K> o(half, tw.zero_scalar());
        for (std::size_t i = 0; i < half; ++i) o[i] = tw.scalar(k) * a[i];
        return o;
    };
    const auto mulh = [&](std::span<const K> a, std::span<const K> b) { return tw.mul(h - 1, a, b); };
    const auto verify = [&](std::vector<K> cand) -> std::optional<std::vector<K>> {
        std::vector<K> sq = tw.mul(h, std::span<const K>(cand), std::span<const K>(cand));
        for (std::size_t i = 0; i < n; ++i)
            if (!(sq[i] == d[i])) return std::nullopt;
        return cand;
    };
    const auto assemble = [&](const std::vector<K>& x0, const std::vector<K>& x1) {
        std::vector<K> s(n, tw.zero_scalar());
        for (std::size_t i = 0; i < half; ++i) {
            s[i] = x0[i];
            s[half + i] = x1[i];
        }
        return s;
    };
    // A = p^2 - 4q is the step discriminant, nonzero by irreducibility.
    std::vector<K> A = sub(mulh(p, p), scale(4, q));
    std::vector<K> invA = tw.inv(h - 1, std::span<const K>(A));
    const std::vector<K> half_scalar = [&] {
        std::vector<K> o(half, tw.zero_scalar());
        o[0] = scalar_inverse(tw.scalar(2));
        return o;
    }();
    if (coords_zero(d1)) {
        if (auto r = sqrt_coords(tw, h - 1, d0)) {
            std::vector<K> zero(half, tw.zero_scalar());
            return assemble(*r, zero);
        }
        // pure-extension branch: x0 = p x1 / 2 with x1^2 = 4 d0 / (p^2 - 4q)
        std::vector<K> X = mulh(std::span<const K>(scale(4, d0)), std::span<const K>(invA));
        if (auto x1 = sqrt_coords(tw, h - 1, std::span<const K>(X))) {
            std::vector<K> x0 = mulh(std::span<const K>(mulh(p, std::span<const K>(*x1))), std::span<const K>(half_scalar));
            if (auto ok = verify(assemble(x0, *x1))) return ok;
        }
        return std::nullopt;
    }
    // d1 != 0: x1 satisfies (p^2-4q) X^2 + (2 p d1 - 4 d0) X + d1^2 = 0
    // with X = x1^2, and then x0 = (d1 + p x1^2) / (2 x1).
    std::vector<K> B = sub(scale(2, std::span<const K>(mulh(p, d1))), scale(4, d0));
    std::vector<K> C = mulh(d1, d1);
    std::vector<K> disc = sub(mulh(std::span<const K>(B), std::span<const K>(B)),
                              scale(4, std::span<const K>(mulh(std::span<const K>(A), std::span<const K>(C)))));
    auto rt = sqrt_coords(tw, h - 1, std::span<const K>(disc));
    if (!rt) return std::nullopt;
    for (int sgn : {1, -1}) {
        std::vector<K> num(half, tw.zero_scalar());
        for (std::size_t i = 0; i < half; ++i) num[i] = -B[i] + tw.scalar(sgn) * (*rt)[i];
        std::vector<K> X = mulh(std::span<const K>(mulh(std::span<const K>(num), std::span<const K>(invA))),
                                std::span<const K>(half_scalar));
        auto x1 = sqrt_coords(tw, h - 1, std::span<const K>(X));
        if (!x1 || coords_zero(std::span<const K>(*x1))) continue;
        std::vector<K> px1sq = mulh(p, std::span<const K>(mulh(std::span<const K>(*x1), std::span<const K>(*x1))));
        std::vector<K> numer(half, tw.zero_scalar());
        for (std::size_t i = 0; i < half; ++i) numer[i] = d1[i] + px1sq[i];
        std::vector<K> twox1(half, tw.zero_scalar());
        for (std::size_t i = 0; i < half; ++i) twox1[i] = tw.scalar(2) * (*x1)[i];
        std::vector<K> x0 = mulh(std::span<const K>(numer), std::span<const K>(tw.inv(h - 1, std::span<const K>(twox1))));
        if (auto ok = verify(assemble(x0, *x1))) return ok;
    }
    return std::nullopt;
}

}  // namespace detail

/// Exact square root within the element's tower, if one exists there.
template <typename K>
std::optional<FieldElement<K>> try_sqrt(const FieldElement<K>& e) {
    const auto& tw = *e.tower();
    if (tw.base().characteristic() == 2)
        return FieldElement<K>(e.tower(), detail::sqrt_coords_char2(tw, std::span<const K>(e.coords())));
    auto c = detail::sqrt_coords(tw, tw.height(), std::span<const K>(e.coords()));
    if (!c) return std::nullopt;
    return FieldElement<K>(e.tower(), std::move(*c));
}

template <typename K>
struct AdjoinResult {
    TowerPtr<K> tower;
    FieldElement<K> eta1;
    FieldElement<K> eta2;
    bool adjoined = false;
};

/// Splits x^2 + a x + b over the given tower, adjoining one quadratic
/// generator when necessary. The root pair is sorted by the fixed
/// coordinate order, so downstream normalization is reproducible.
template <typename K>
AdjoinResult<K> adjoin_root(const TowerPtr<K>& tower, const FieldElement<K>& a_in, const FieldElement<K>& b_in) {
    FieldElement<K> a = a_in.lifted_to(tower);
    FieldElement<K> b = b_in.lifted_to(tower);
    const auto sorted = [](TowerPtr<K> t, FieldElement<K> r1, FieldElement<K> r2, bool adj) {
        if (r1.cmp(r2) > 0) std::swap(r1, r2);
        return AdjoinResult<K>{std::move(t), std::move(r1), std::move(r2), adj};
    };
    const auto adjoin_new = [&]() {
        if (tower->height() >= 2)
            throw domain_error("internal misuse: adjunction beyond tower height 2");
        TowerPtr<K> bigger = tower->extended(a.coords(), b.coords());
        FieldElement<K> theta = FieldElement<K>::generator(bigger->height() - 1, bigger);
        FieldElement<K> other = -a.lifted_to(bigger) - theta;
        return sorted(bigger, theta, other, true);
    };
    if (tower->base().characteristic() == 2) {
        if (a.is_zero()) {
            // inseparable case: double root sqrt(b), always in the field
            FieldElement<K> s = *try_sqrt(b);
            return AdjoinResult<K>{tower, s, s, false};
        }
        // Artin-Schreier-like case: exhaustive search (the char-2 towers
        // here have at most 16 elements)
        const std::size_t dim = tower->dim();
        std::vector<K> digits(dim, tower->zero_scalar());
        const std::uint64_t p = tower->base().p();
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < dim; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t rem = idx;
            for (std::size_t i = 0; i < dim; ++i) {
                digits[i] = *scalar_enumerate(rem % p, tower->base(), static_cast<const K*>(nullptr));
                rem /= p;
            }
            FieldElement<K> r(tower, digits);
            if ((r * r + a * r + b).is_zero()) return sorted(tower, r, r + a, false);
        }
        return adjoin_new();
    }
    FieldElement<K> disc = a * a - FieldElement<K>::from_long(4, tower) * b;
    if (auto s = try_sqrt(disc)) {
        FieldElement<K> inv2 = FieldElement<K>::from_long(2, tower).inverse();
        FieldElement<K> r1 = (-a - *s) * inv2;
        FieldElement<K> r2 = (-a + *s) * inv2;
        return sorted(tower, r1, r2, false);
    }
    return adjoin_new();
}

/// Deterministic enumeration of tower elements: index digits in base
/// |enumeration of K| across coordinates, least significant first.
/// Exhausts finite fields; over Q it walks scalar multiples only as far
/// as callers need (t0 sample points use base elements anyway).
template <typename K>
std::optional<FieldElement<K>> enumerate_element(std::uint64_t idx, const TowerPtr<K>& tower) {
    if (tower->base().is_rationals()) {
        // base-field elements only; enough for sample points over Q
        auto s = scalar_enumerate(idx, tower->base(), static_cast<const K*>(nullptr));
        if (!s) return std::nullopt;
        return FieldElement<K>::from_scalar(*s, tower);
    }
    const std::uint64_t p = tower->base().p();
    std::vector<K> c(tower->dim(), tower->zero_scalar());
    std::uint64_t rem = idx;
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = *scalar_enumerate(rem % p, tower->base(), static_cast<const K*>(nullptr));
        rem /= p;
    }
    if (rem != 0) return std::nullopt;
    return FieldElement<K>(tower, std::move(c));
}

/// Minimal polynomial header line for CLI output: "r1: r1^2 + a*r1 + b".
template <typename K>
std::string tower_header(const TowerPtr<K>& tower) {
    std::string out;
    for (std::size_t i = 0; i < tower->height(); ++i) {
        TowerPtr<K> below = ExtensionTower<K>::make_base(tower->base());
        for (std::size_t j = 0; j < i; ++j) below = below->extended(tower->step(j).p, tower->step(j).q);
        FieldElement<K> p(below, tower->step(i).p), q(below, tower->step(i).q);
        std::string g = "r" + std::to_string(i + 1);
        if (!out.empty()) out += "; ";
        out += g + "^2";
        if (!p.is_zero()) out += " + (" + p.to_string() + ")*" + g;
        if (!q.is_zero()) out += " + (" + q.to_string() + ")";
        out += " = 0";
    }
    return out;
}

}  // namespace quadalg

#endif
