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

#ifndef QUADALG_BASE_FIELD_HPP
#define QUADALG_BASE_FIELD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace quadalg {

/// Thrown for mathematically invalid requests (division by zero,
/// non-prime modulus, dimension mismatches, malformed input).
class domain_error : public std::runtime_error {
   public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

bool is_prime_u64(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);

/// The coefficient field the user selects: Q or F_p with p prime.
/// Primality is checked at construction; everything downstream may
/// rely on it.
class BaseField {
   public:
    enum class Kind { Rationals, PrimeField };

    static BaseField rationals() { return BaseField(Kind::Rationals, 0); }
    static BaseField prime_field(std::uint64_t p) {
        if (!is_prime_u64(p)) throw domain_error("F_p modulus must be prime, got " + std::to_string(p));
        return BaseField(Kind::PrimeField, p);
    }
    /// Parses the CLI spelling: "Q" or "Fp:<prime>".
    static BaseField parse(const std::string& spec);

    Kind kind() const { return kind_; }
    std::uint64_t p() const { return p_; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }
    std::uint64_t characteristic() const { return kind_ == Kind::Rationals ? 0 : p_; }

    std::string to_string() const {
        return kind_ == Kind::Rationals ? "Q" : "Fp:" + std::to_string(p_);
    }

    bool operator==(const BaseField& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const BaseField& o) const { return !(*this == o); }

   private:
    BaseField(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

/// Prime field scalar. Each value carries its modulus so that mixed-field
/// arithmetic is caught immediately instead of silently wrapping.
class Fp {
   public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

    static Fp from_long(long n, const BaseField& f) {
        std::uint64_t p = f.p();
        if (n >= 0) return Fp(static_cast<std::uint64_t>(n) % p, p);
        std::uint64_t r = static_cast<std::uint64_t>(-(n + 1)) % p;  // avoids overflow at LONG_MIN
        return Fp(p - 1 - r, p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const {
        check(o);
        std::uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return Fp(s, p_, 0);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_, 0);
    }
    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, 0); }
    Fp operator*(const Fp& o) const {
        check(o);
        return Fp(mulmod_u64(v_, o.v_, p_), p_, 0);
    }
    Fp operator/(const Fp& o) const {
        check(o);
        if (o.v_ == 0) throw domain_error("division by zero in F_p");
        return Fp(mulmod_u64(v_, invmod_u64(o.v_, p_), p_), p_, 0);
    }
    Fp inverse() const {
        if (v_ == 0) throw domain_error("division by zero in F_p");
        return Fp(invmod_u64(v_, p_), p_, 0);
    }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string to_string() const { return std::to_string(v_); }

   private:
    Fp(std::uint64_t v, std::uint64_t p, int) : v_(v), p_(p) {}  // no reduction
    void check(const Fp& o) const {
        if (p_ != o.p_) throw domain_error("F_p arithmetic across different moduli");
    }
    std::uint64_t v_;
    std::uint64_t p_;
};

using Rational = mpq_class;

// --- uniform scalar interface used by the tower/polynomial templates ---

inline Rational scalar_zero(const BaseField&, const Rational*) { return Rational(0); }
inline Fp scalar_zero(const BaseField& f, const Fp*) { return Fp(0, f.p()); }
inline Rational scalar_from_long(long n, const BaseField&, const Rational*) { return Rational(n); }
inline Fp scalar_from_long(long n, const BaseField& f, const Fp*) { return Fp::from_long(n, f); }

inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const Fp& x) { return x.is_zero(); }

inline Rational scalar_inverse(const Rational& x) {
    if (x == 0) throw domain_error("division by zero in Q");
    return Rational(1) / x;
}
inline Fp scalar_inverse(const Fp& x) { return x.inverse(); }

/// Total order used for deterministic root ordering and rendering.
inline int scalar_cmp(const Rational& a, const Rational& b) { return cmp(a, b); }
inline int scalar_cmp(const Fp& a, const Fp& b) {
    return a.value() < b.value() ? -1 : a.value() == b.value() ? 0 : 1;
}

inline std::string scalar_to_string(const Rational& x) { return x.get_str(); }
inline std::string scalar_to_string(const Fp& x) { return x.to_string(); }

Rational parse_rational(const std::string& s);

inline Rational scalar_parse(const std::string& s, const BaseField&, const Rational*) {
    return parse_rational(s);
}
inline Fp scalar_parse(const std::string& s, const BaseField& f, const Fp*) {
    Rational q = parse_rational(s);
    if (q.get_den() != 1) {
        // accept n/d as n * d^{-1} mod p
        Fp num = Fp::from_long(0, f), den = Fp::from_long(0, f);
        mpz_class nr = q.get_num() % mpz_class(static_cast<unsigned long>(f.p()));
        mpz_class dr = q.get_den() % mpz_class(static_cast<unsigned long>(f.p()));
        if (nr < 0) nr += static_cast<unsigned long>(f.p());
        num = Fp(nr.get_ui(), f.p());
        den = Fp(dr.get_ui(), f.p());
        return num / den;
    }
    mpz_class r = q.get_num() % mpz_class(static_cast<unsigned long>(f.p()));
    if (r < 0) r += static_cast<unsigned long>(f.p());
    return Fp(r.get_ui(), f.p());
}

/// Deterministic enumeration of the base field: F_p lists residues
/// 0..p-1; Q lists the non-negative integers 0,1,2,...
inline std::optional<Rational> scalar_enumerate(std::uint64_t i, const BaseField&, const Rational*) {
    return Rational(static_cast<unsigned long>(i));
}
inline std::optional<Fp> scalar_enumerate(std::uint64_t i, const BaseField& f, const Fp*) {
    if (i >= f.p()) return std::nullopt;
    return Fp(i, f.p());
}

/// Exact square root in the base field, if one exists.
std::optional<Rational> scalar_sqrt(const Rational& x, const BaseField& f);
std::optional<Fp> scalar_sqrt(const Fp& x, const BaseField& f);

}  // namespace quadalg

#endif
