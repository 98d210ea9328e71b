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

#include "quadalg/base_field.hpp"

#include <cctype>

namespace quadalg {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
    // extended Euclid; m prime and a != 0 mod m
    std::int64_t t = 0, newt = 1;
    std::uint64_t r = m, newr = a % m;
    while (newr != 0) {
        std::uint64_t q = r / newr;
        std::int64_t tt = t - static_cast<std::int64_t>(q) * newt;
        t = newt;
        newt = tt;
        std::uint64_t rr = r - q * newr;
        r = newr;
        newr = rr;
    }
    if (r != 1) throw domain_error("invmod of non-unit");
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(m)) : static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

BaseField BaseField::parse(const std::string& spec) {
    if (spec == "Q") return rationals();
    if (spec.rfind("Fp:", 0) == 0) {
        const std::string digits = spec.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw domain_error("bad field spec '" + spec + "', expected Q or Fp:<prime>");
        return prime_field(std::stoull(digits));
    }
    throw domain_error("bad field spec '" + spec + "', expected Q or Fp:<prime>");
}

Rational parse_rational(const std::string& s) {
    std::string trimmed;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) throw domain_error("empty rational literal");
    try {
        Rational q(trimmed);
        if (q.get_den() == 0) throw domain_error("zero denominator in '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw domain_error("bad rational literal '" + s + "'");
    }
}

std::optional<Rational> scalar_sqrt(const Rational& x, const BaseField&) {
    if (x < 0) return std::nullopt;
    if (x == 0) return Rational(0);
    mpz_class num = x.get_num(), den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return Rational(rn, rd);
    }
    return std::nullopt;
}

std::optional<Fp> scalar_sqrt(const Fp& x, const BaseField& f) {
    const std::uint64_t p = f.p();
    if (x.is_zero()) return Fp(0, p);
    if (p == 2) return x;  // squaring is the identity on F_2
    if (powmod_u64(x.value(), (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return Fp(powmod_u64(x.value(), (p + 1) / 4, p), p);
    // Tonelli-Shanks
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (powmod_u64(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = powmod_u64(z, q, p);
    std::uint64_t t = powmod_u64(x.value(), q, p);
    std::uint64_t r = powmod_u64(x.value(), (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod_u64(tt, tt, p);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
        m = i;
        c = mulmod_u64(b, b, p);
        t = mulmod_u64(t, c, p);
        r = mulmod_u64(r, b, p);
    }
    return Fp(r, p);
}

}  // namespace quadalg
