#pragma once

// Exact scalar arithmetic: rationals and cyclotomic extensions Q(zeta_m).
// A scalar is a rational polynomial in a fixed primitive m-th root of
// unity, reduced modulo the m-th cyclotomic polynomial. All operations
// are exact; equality is decidable.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "centra/error.hpp"

namespace centra {

using Int = mpz_class;
using Rat = mpq_class;

struct FieldSpec {
    enum class Kind { rationals, cyclotomic };
    Kind kind = Kind::rationals;
    unsigned order = 1; // cyclotomic order m; 1 for the rationals

    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 1}; }
    static FieldSpec cyclotomic(unsigned m) {
        if (m == 0) throw field_error("cyclotomic order must be >= 1");
        return FieldSpec{Kind::cyclotomic, m};
    }
    unsigned m() const { return kind == Kind::rationals ? 1u : order; }
    bool operator==(const FieldSpec& o) const { return m() == o.m(); }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
    std::string str() const {
        return kind == Kind::rationals ? std::string("rationals")
                                       : "cyclotomic(" + std::to_string(order) + ")";
    }
};

namespace detail {

inline unsigned euler_phi(unsigned m) {
    unsigned result = m, n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// Quotient of integer polynomials, exact (remainder must vanish).
inline std::vector<Int> poly_div_exact(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> rem = num;
    std::vector<Int> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    const size_t dd = den.size() - 1;
    // classical long division, den monic up to sign of leading coeff
    long dr = static_cast<long>(rem.size()) - 1;
    while (dr >= static_cast<long>(dd)) {
        if (rem[dr] != 0) {
            Int q;
            mpz_divexact(q.get_mpz_t(), rem[dr].get_mpz_t(), den[dd].get_mpz_t());
            quot[dr - dd] = q;
            for (size_t i = 0; i <= dd; ++i) rem[dr - dd + i] -= q * den[i];
        }
        --dr;
    }
    for (const Int& c : rem)
        if (c != 0) throw field_error("internal: non-exact polynomial division");
    if (quot.empty()) quot.push_back(Int(0));
    return quot;
}

struct FieldData {
    unsigned m = 1;
    unsigned deg = 1;              // phi(m)
    std::vector<Int> phi;          // cyclotomic polynomial, monic, length deg+1
    std::vector<std::vector<Rat>> pow_red; // x^(deg+k) mod phi, k = 0..deg-2
};

inline std::vector<Int> cyclotomic_poly(unsigned m, std::map<unsigned, std::vector<Int>>& memo) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    // x^m - 1 divided by the product of Phi_d over proper divisors d of m
    std::vector<Int> num(m + 1, Int(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d == 0) {
            num = poly_div_exact(num, cyclotomic_poly(d, memo));
        }
    }
    memo[m] = num;
    return num;
}

inline const FieldData& field_data(unsigned m) {
    static std::mutex mtx;
    static std::map<unsigned, FieldData> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    FieldData fd;
    fd.m = m;
    fd.deg = euler_phi(m);
    static std::map<unsigned, std::vector<Int>> memo;
    fd.phi = cyclotomic_poly(m, memo);
    // reductions of x^deg .. x^(2deg-2) modulo phi
    const unsigned d = fd.deg;
    std::vector<Rat> cur(d, Rat(0)); // x^(d-1) shifted once gives x^d
    // x^d = -(phi[0] + ... + phi[d-1] x^(d-1))
    std::vector<Rat> xd(d);
    for (unsigned i = 0; i < d; ++i) xd[i] = Rat(-fd.phi[i]);
    fd.pow_red.push_back(xd);
    for (unsigned k = 1; k + 1 <= (d >= 1 ? d - 1 : 0); ++k) {
        const std::vector<Rat>& prev = fd.pow_red.back();
        std::vector<Rat> next(d, Rat(0));
        // multiply prev by x and reduce
        Rat carry = prev[d - 1];
        for (unsigned i = d; i-- > 1;) next[i] = prev[i - 1];
        next[0] = 0;
        for (unsigned i = 0; i < d; ++i) next[i] += carry * xd[i];
        fd.pow_red.push_back(next);
    }
    auto [pos, ok] = cache.emplace(m, std::move(fd));
    return pos->second;
}

} // namespace detail

class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()), c_(1, Rat(0)) {}
    Scalar(FieldSpec field, std::vector<Rat> coeffs) : field_(field), c_(std::move(coeffs)) {
        if (c_.size() != deg()) throw field_error("scalar coefficient length mismatch");
    }

    static Scalar zero(FieldSpec f) { return Scalar(f, std::vector<Rat>(detail::euler_phi(f.m()), Rat(0))); }
    static Scalar one(FieldSpec f) {
        std::vector<Rat> c(detail::euler_phi(f.m()), Rat(0));
        c[0] = 1;
        return Scalar(f, std::move(c));
    }
    static Scalar of(FieldSpec f, const Rat& r) {
        std::vector<Rat> c(detail::euler_phi(f.m()), Rat(0));
        c[0] = r;
        return Scalar(f, std::move(c));
    }
    static Scalar of(FieldSpec f, long n) { return of(f, Rat(n)); }

    const FieldSpec& field() const { return field_; }
    unsigned deg() const { return detail::euler_phi(field_.m()); }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const Rat& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    const Rat& rational_part() const { return c_[0]; }

    bool operator==(const Scalar& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        a.require_same(b);
        std::vector<Rat> c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
        return Scalar(a.field_, std::move(c));
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        a.require_same(b);
        std::vector<Rat> c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
        return Scalar(a.field_, std::move(c));
    }
    Scalar operator-() const {
        std::vector<Rat> c(c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
        return Scalar(field_, std::move(c));
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        a.require_same(b);
        const unsigned d = a.deg();
        if (d == 1) {
            std::vector<Rat> c{a.c_[0] * b.c_[0]};
            return Scalar(a.field_, std::move(c));
        }
        std::vector<Rat> conv(2 * d - 1, Rat(0));
        for (unsigned i = 0; i < d; ++i) {
            if (a.c_[i] == 0) continue;
            for (unsigned j = 0; j < d; ++j) {
                if (b.c_[j] == 0) continue;
                conv[i + j] += a.c_[i] * b.c_[j];
            }
        }
        const auto& fd = detail::field_data(a.field_.m());
        std::vector<Rat> c(conv.begin(), conv.begin() + d);
        for (unsigned k = 0; k + d < conv.size() + 0 && k < fd.pow_red.size(); ++k) {
            const Rat& hi = conv[d + k];
            if (hi == 0) continue;
            const std::vector<Rat>& red = fd.pow_red[k];
            for (unsigned i = 0; i < d; ++i) c[i] += hi * red[i];
        }
        return Scalar(a.field_, std::move(c));
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]
    /// modulo the (irreducible) cyclotomic polynomial.
    Scalar inv() const {
        if (is_zero()) throw field_error("division by zero");
        const unsigned d = deg();
        if (d == 1) {
            std::vector<Rat> c{Rat(1) / c_[0]};
            return Scalar(field_, std::move(c));
        }
        const auto& fd = detail::field_data(field_.m());
        // r0 = phi (as rationals), r1 = this; track s only for r1 side.
        std::vector<Rat> r0(fd.phi.size());
        for (size_t i = 0; i < fd.phi.size(); ++i) r0[i] = Rat(fd.phi[i]);
        std::vector<Rat> r1 = c_;
        trim(r1);
        std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};
        while (!(r1.size() == 1 && r1[0] == 0)) {
            auto [q, r] = poly_divmod(r0, r1);
            // s2 = s0 - q*s1
            std::vector<Rat> s2 = s0;
            std::vector<Rat> qs = poly_mul(q, s1);
            if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
            for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            trim(s2);
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 is a nonzero constant gcd (phi irreducible over Q)
        if (r0.size() != 1 || r0[0] == 0) throw field_error("internal: cyclotomic gcd not constant");
        std::vector<Rat> c(d, Rat(0));
        for (size_t i = 0; i < s0.size() && i < d; ++i) c[i] = s0[i] / r0[0];
        if (s0.size() > d) throw field_error("internal: inverse degree overflow");
        return Scalar(field_, std::move(c));
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

private:
    void require_same(const Scalar& o) const {
        if (field_ != o.field_) throw field_error("field mismatch: " + field_.str() + " vs " + o.field_.str());
    }
    static void trim(std::vector<Rat>& p) {
        while (p.size() > 1 && p.back() == 0) p.pop_back();
    }
    static std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> c(a.size() + b.size() - 1, Rat(0));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        }
        trim(c);
        return c;
    }
    static std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(std::vector<Rat> num,
                                                                     const std::vector<Rat>& den) {
        std::vector<Rat> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 1, Rat(0));
        long dd = static_cast<long>(den.size()) - 1;
        long dr = static_cast<long>(num.size()) - 1;
        while (dr >= dd) {
            if (num[dr] != 0) {
                Rat q = num[dr] / den[dd];
                quot[dr - dd] = q;
                for (long i = 0; i <= dd; ++i) num[dr - dd + i] -= q * den[i];
            }
            --dr;
        }
        trim(num);
        trim(quot);
        return {quot, num};
    }

    FieldSpec field_;
    std::vector<Rat> c_;
};

/// zeta_m^k inside the given field; requires m to divide the field order.
inline Scalar root_of_unity(FieldSpec field, unsigned m, long k) {
    if (m == 0 || field.m() % m != 0)
        throw field_error("root order " + std::to_string(m) + " incompatible with " + field.str());
    const unsigned M = field.m();
    long kk = ((k % static_cast<long>(m)) + static_cast<long>(m)) % static_cast<long>(m);
    unsigned t = static_cast<unsigned>(kk) * (M / m) % M;
    // compute x^t mod phi by repeated shift-reduce
    Scalar z = Scalar::one(field);
    if (t == 0) return z;
    const unsigned d = detail::euler_phi(M);
    std::vector<Rat> c(d, Rat(0));
    if (t < d) {
        c[t] = 1;
        return Scalar(field, std::move(c));
    }
    const auto& fd = detail::field_data(M);
    // x^t with t <= M-1 <= 2d-? may exceed 2d-2: reduce iteratively
    std::vector<Rat> cur(d, Rat(0));
    cur[0] = 1;
    for (unsigned step = 0; step < t; ++step) {
        Rat carry = cur[d - 1];
        for (unsigned i = d; i-- > 1;) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (carry != 0) {
            const std::vector<Rat>& xd = fd.pow_red[0];
            for (unsigned i = 0; i < d; ++i) cur[i] += carry * xd[i];
        }
    }
    return Scalar(field, std::move(cur));
}

/// If s is a power of zeta_m in the field, return the exponent in [0, m).
inline std::optional<unsigned> as_root_of_unity(const Scalar& s, unsigned m) {
    for (unsigned k = 0; k < m; ++k)
        if (s == root_of_unity(s.field(), m, static_cast<long>(k))) return k;
    return std::nullopt;
}

/// Re-express a scalar in a larger cyclotomic field (order must be a multiple).
inline Scalar embed(const Scalar& s, FieldSpec target) {
    if (s.field() == target) return s;
    const unsigned m = s.field().m(), M = target.m();
    if (M % m != 0) throw field_error("cannot embed " + s.field().str() + " into " + target.str());
    Scalar acc = Scalar::zero(target);
    const unsigned d = s.deg();
    for (unsigned i = 0; i < d; ++i) {
        if (s.coeffs()[i] == 0) continue;
        acc += Scalar::of(target, s.coeffs()[i]) * root_of_unity(target, m, static_cast<long>(i));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Text syntax: rational literals `p/q`, root symbol `z` with caret powers,
// e.g. `-1/2*z^3 + 2`. Whitespace-insensitive.

inline std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline std::string scalar_to_string(const Scalar& s) {
    const auto& c = s.coeffs();
    std::string out;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        Rat a = c[i];
        bool neg = a < 0;
        Rat mag = neg ? Rat(-a) : a;
        if (first) {
            out += neg ? "-" : "";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string coef = rat_to_string(mag);
        if (i == 0) {
            out += coef;
        } else {
            if (mag != 1) out += coef + "*";
            out += "z";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    if (first) return "0";
    return out;
}

inline Scalar parse_scalar(FieldSpec field, const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw field_error("empty scalar literal");
    Scalar acc = Scalar::zero(field);
    size_t pos = 0;
    auto parse_uint = [&](const char* what) {
        size_t start = pos;
        while (pos < t.size() && isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (pos == start) throw field_error(std::string("expected ") + what + " in scalar literal: " + text);
        return t.substr(start, pos - start);
    };
    while (pos < t.size()) {
        int sign = 1;
        while (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
            if (t[pos] == '-') sign = -sign;
            ++pos;
        }
        if (pos >= t.size()) throw field_error("dangling sign in scalar literal: " + text);
        Rat coef(1);
        bool have_coef = false;
        if (isdigit(static_cast<unsigned char>(t[pos]))) {
            std::string num = parse_uint("number");
            std::string den = "1";
            if (pos < t.size() && t[pos] == '/') {
                ++pos;
                den = parse_uint("denominator");
            }
            coef = Rat(Int(num), Int(den));
            coef.canonicalize();
            have_coef = true;
            if (pos < t.size() && t[pos] == '*') ++pos;
        }
        long power = 0;
        if (pos < t.size() && t[pos] == 'z') {
            ++pos;
            power = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                power = std::stol(parse_uint("exponent"));
            }
        } else if (!have_coef) {
            throw field_error("unexpected character in scalar literal: " + text);
        }
        if (sign < 0) coef = -coef;
        Scalar term = Scalar::of(field, coef);
        if (power != 0) term = term * root_of_unity(field, field.m(), power);
        acc += term;
    }
    return acc;
}

} // namespace centra
