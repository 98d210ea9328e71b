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

#ifndef QUADALG_POLY_HPP
#define QUADALG_POLY_HPP

#include <string>
#include <tuple>
#include <vector>

#include "quadalg/field.hpp"

namespace quadalg {

/// Dense univariate polynomial over a tower field. The variable is a
/// plain tag ('t' for matrix entries, 'z' for the center, 'v' for the
/// Weiss check); no trailing zero coefficients are stored.
/// degree() returns -1 for the zero polynomial.
template <typename K>
class Poly {
   public:
    Poly(TowerPtr<K> tower, char var) : tower_(std::move(tower)), var_(var) {}
    Poly(TowerPtr<K> tower, char var, std::vector<FieldElement<K>> coeffs)
        : tower_(std::move(tower)), var_(var), coeffs_(std::move(coeffs)) {
        prune();
    }

    static Poly zero(const TowerPtr<K>& t, char var) { return Poly(t, var); }
    static Poly constant(const FieldElement<K>& c, char var) {
        return Poly(c.tower(), var, {c});
    }
    static Poly from_long(long n, const TowerPtr<K>& t, char var) {
        return constant(FieldElement<K>::from_long(n, t), var);
    }
    static Poly variable(const TowerPtr<K>& t, char var) {
        return Poly(t, var, {FieldElement<K>::zero(t), FieldElement<K>::one(t)});
    }
    /// c * X^d
    static Poly monomial(const FieldElement<K>& c, int d, char var) {
        std::vector<FieldElement<K>> cs(static_cast<std::size_t>(d) + 1, FieldElement<K>::zero(c.tower()));
        cs.back() = c;
        return Poly(c.tower(), var, std::move(cs));
    }

    const TowerPtr<K>& tower() const { return tower_; }
    char var() const { return var_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    FieldElement<K> coeff(std::size_t d) const {
        if (d >= coeffs_.size()) return FieldElement<K>::zero(tower_);
        return coeffs_[d];
    }
    const FieldElement<K>& leading() const {
        if (coeffs_.empty()) throw domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_var(b);
        std::vector<FieldElement<K>> out;
        const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeff(i) + b.coeff(i));
        return Poly(widest(a, b), a.var_, std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check_var(b);
        std::vector<FieldElement<K>> out;
        const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeff(i) - b.coeff(i));
        return Poly(widest(a, b), a.var_, std::move(out));
    }
    Poly operator-() const {
        std::vector<FieldElement<K>> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(-c);
        return Poly(tower_, var_, std::move(out));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_var(b);
        if (a.is_zero() || b.is_zero()) return zero(widest(a, b), a.var_);
        std::vector<FieldElement<K>> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                                         FieldElement<K>::zero(widest(a, b)));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(widest(a, b), a.var_, std::move(out));
    }
    friend Poly operator*(const FieldElement<K>& s, const Poly& p) {
        std::vector<FieldElement<K>> out;
        out.reserve(p.coeffs_.size());
        for (const auto& c : p.coeffs_) out.push_back(s * c);
        TowerPtr<K> t = s.tower()->height() >= p.tower_->height() ? s.tower() : p.tower_;
        return Poly(t, p.var_, std::move(out));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const {
        if (coeffs_.size() != o.coeffs_.size()) return false;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != o.coeffs_[i]) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    FieldElement<K> evaluate(const FieldElement<K>& x) const {
        FieldElement<K> acc = FieldElement<K>::zero(tower_);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    /// Substitution: this(inner). The result carries inner's variable tag.
    Poly compose(const Poly& inner) const {
        Poly acc = zero(inner.tower_, inner.var_);
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * inner + constant(coeffs_[i].lifted_to(inner.tower_), inner.var_);
        return acc;
    }

    Poly pow(unsigned e) const {
        Poly acc = from_long(1, tower_, var_);
        for (unsigned i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return leading().inverse() * *this;
    }

    /// Exact division with remainder over the coefficient field.
    std::pair<Poly, Poly> divrem(const Poly& d) const {
        if (d.is_zero()) throw domain_error("polynomial division by zero");
        Poly q = zero(tower_, var_), r = *this;
        const FieldElement<K> lead_inv = d.leading().inverse();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            FieldElement<K> c = r.leading() * lead_inv;
            int shift = r.degree() - d.degree();
            Poly term = monomial(c, shift, var_);
            q += term;
            r -= term * d;
        }
        return {q, r};
    }

    /// True when only even powers occur.
    bool is_even() const {
        for (std::size_t i = 1; i < coeffs_.size(); i += 2)
            if (!coeffs_[i].is_zero()) return false;
        return true;
    }

    std::string to_string() const;
    std::vector<std::string> coeff_strings() const {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(c.to_string());
        return out;
    }

   private:
    void prune() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    void check_var(const Poly& o) const {
        if (var_ != o.var_) throw domain_error("mixed polynomial variables");
    }
    static TowerPtr<K> widest(const Poly& a, const Poly& b) {
        return a.tower_->height() >= b.tower_->height() ? a.tower_ : b.tower_;
    }
    TowerPtr<K> tower_;
    char var_;
    std::vector<FieldElement<K>> coeffs_;
};

template <typename K>
std::string Poly<K>::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const auto& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool composite = cs.find(' ') != std::string::npos;
        bool neg = !composite && !cs.empty() && cs[0] == '-';
        std::string mag = neg ? cs.substr(1) : cs;
        std::string xp;
        if (i == 1)
            xp = std::string(1, var_);
        else if (i > 1)
            xp = std::string(1, var_) + "^" + std::to_string(i);
        std::string term;
        if (xp.empty())
            term = composite ? "(" + mag + ")" : mag;
        else if (!composite && mag == "1")
            term = xp;
        else
            term = (composite ? "(" + mag + ")" : mag) + "*" + xp;
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += neg ? " - " + term : " + " + term;
    }
    return out;
}

/// Small dense square matrix over the polynomial ring. Dimensions 2 and 3
/// are all this artifact needs but nothing depends on that.
template <typename K>
class PolyMatrix {
   public:
    PolyMatrix(std::size_t n, const TowerPtr<K>& tower, char var)
        : n_(n), entries_(n * n, Poly<K>::zero(tower, var)) {}
    PolyMatrix(std::size_t n, std::vector<Poly<K>> entries) : n_(n), entries_(std::move(entries)) {
        if (entries_.size() != n_ * n_) throw domain_error("matrix entry count mismatch");
    }

    static PolyMatrix identity(std::size_t n, const TowerPtr<K>& tower, char var) {
        PolyMatrix m(n, tower, var);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly<K>::from_long(1, tower, var);
        return m;
    }

    std::size_t dim() const { return n_; }
    const TowerPtr<K>& tower() const { return entries_[0].tower(); }
    char var() const { return entries_[0].var(); }

    Poly<K>& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const Poly<K>& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
        a.check(b);
        PolyMatrix out = a;
        for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
        return out;
    }
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
        a.check(b);
        PolyMatrix out = a;
        for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
        return out;
    }
    PolyMatrix operator-() const {
        PolyMatrix out = *this;
        for (auto& e : out.entries_) e = -e;
        return out;
    }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        a.check(b);
        PolyMatrix out(a.n_, a.tower(), a.var());
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t j = 0; j < a.n_; ++j) {
                Poly<K> s = Poly<K>::zero(a.tower(), a.var());
                for (std::size_t k = 0; k < a.n_; ++k) s += a.at(i, k) * b.at(k, j);
                out.at(i, j) = s;
            }
        return out;
    }
    friend PolyMatrix operator*(const Poly<K>& s, const PolyMatrix& m) {
        PolyMatrix out = m;
        for (auto& e : out.entries_) e = s * e;
        return out;
    }
    friend PolyMatrix operator*(const FieldElement<K>& s, const PolyMatrix& m) {
        PolyMatrix out = m;
        for (auto& e : out.entries_) e = s * e;
        return out;
    }
    PolyMatrix& operator+=(const PolyMatrix& o) { return *this = *this + o; }
    PolyMatrix& operator-=(const PolyMatrix& o) { return *this = *this - o; }

    bool operator==(const PolyMatrix& o) const {
        if (n_ != o.n_) return false;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i] != o.entries_[i]) return false;
        return true;
    }
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    PolyMatrix pow(unsigned e) const {
        PolyMatrix acc = identity(n_, tower(), var());
        for (unsigned i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    Poly<K> trace() const {
        Poly<K> s = Poly<K>::zero(tower(), var());
        for (std::size_t i = 0; i < n_; ++i) s += at(i, i);
        return s;
    }

    /// Entrywise evaluation at a point of the coefficient field; the
    /// result is a constant matrix (degree-0 entries).
    PolyMatrix evaluate(const FieldElement<K>& x) const {
        PolyMatrix out(n_, tower(), var());
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                out.at(i, j) = Poly<K>::constant(at(i, j).evaluate(x), var());
        return out;
    }

    int max_entry_degree() const {
        int d = -1;
        for (const auto& e : entries_) d = std::max(d, e.degree());
        return d;
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < n_; ++i) {
            out += i == 0 ? "[" : " [";
            for (std::size_t j = 0; j < n_; ++j) {
                out += at(i, j).to_string();
                if (j + 1 < n_) out += ", ";
            }
            out += "]";
            if (i + 1 < n_) out += ",\n";
        }
        return out + "]";
    }

   private:
    void check(const PolyMatrix& o) const {
        if (n_ != o.n_) throw domain_error("matrix dimension mismatch");
        if (var() != o.var()) throw domain_error("mixed matrix variables");
    }
    std::size_t n_;
    std::vector<Poly<K>> entries_;
};

/// Cayley-Hamilton data for a 2x2 matrix: trace, determinant, and the
/// residual A^2 - tr(A) A + det(A) I, which must vanish identically.
template <typename K>
std::tuple<Poly<K>, Poly<K>, PolyMatrix<K>> trace_det_ch2(const PolyMatrix<K>& a) {
    if (a.dim() != 2) throw domain_error("trace_det_ch2 requires a 2x2 matrix");
    Poly<K> tr = a.trace();
    Poly<K> det = a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
    PolyMatrix<K> residual = a * a - tr * a + det * PolyMatrix<K>::identity(2, a.tower(), a.var());
    return {tr, det, residual};
}

}  // namespace quadalg

#endif
