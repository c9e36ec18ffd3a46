#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace klsw {

using Int = mpz_class;
using Rat = mpq_class;

/// Element of Q[u, u^-1], stored as a sparse exponent -> coefficient map.
/// Invariant: no zero coefficients are ever stored.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const Rat& c) {
        if (c != 0) c_[0] = c;
    }
    explicit Laurent(long c) {
        if (c != 0) c_[0] = Rat(c);
    }

    static Laurent zero() { return Laurent(); }
    static Laurent one() { return Laurent(1); }
    /// c * u^e
    static Laurent term(const Rat& c, int e) {
        Laurent f;
        if (c != 0) f.c_[e] = c;
        return f;
    }
    static Laurent u_pow(int e) { return term(Rat(1), e); }

    /// Quantum integer [k] = u^{k-1} + u^{k-3} + ... + u^{1-k}, [0] = 0.
    static Laurent qint(int k);
    /// [k]! = [k][k-1]...[1].
    static Laurent qfact(int k);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const {
        return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
    }
    /// True if a single term c*u^e.
    bool is_monomial() const { return c_.size() == 1; }

    Rat coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rat(0) : it->second;
    }
    int min_exp() const { return c_.begin()->first; }    // pre: nonzero
    int max_exp() const { return c_.rbegin()->first; }   // pre: nonzero

    const std::map<int, Rat>& terms() const { return c_; }

    Laurent& add_term(int e, const Rat& c) {
        if (c == 0) return *this;
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
        return *this;
    }

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
    Laurent operator*(const Rat& c) const;
    friend bool operator==(const Laurent&, const Laurent&) = default;

    /// u -> u^-1.
    Laurent bar() const;
    bool is_bar_invariant() const { return bar() == *this; }

    /// Multiply by u^e.
    Laurent shifted(int e) const;

    /// True if all coefficients are integers (i.e. the value lies in Z[u,u^-1]).
    bool has_integer_coeffs() const;

    /// Exact division; nullopt if the division leaves a remainder.
    std::optional<Laurent> divide_exact(const Laurent& d) const;

    /// Canonical text: terms in strictly increasing exponent order,
    /// e.g. "u^-2 + 1 + u^2", "-3*u + 1/2*u^3".
    std::string to_string() const;

private:
    std::map<int, Rat> c_;
};

inline Laurent operator*(const Rat& c, const Laurent& f) { return f * c; }

/// gcd over Z[u,u^-1] of integer-coefficient Laurent polynomials, normalized
/// to an ordinary polynomial with nonzero constant term and positive leading
/// coefficient (unique up to that choice of unit).
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

/// Factorization f = c * u^shift * prod [k]^mult; nullopt if no exact
/// factorization into quantum integers exists. The fraction variant allows
/// negative multiplicities (quantum integers in the denominator).
struct QintFactorization {
    Rat constant;
    int shift = 0;
    std::vector<std::pair<int, int>> factors;  // (k, multiplicity), k descending
};
std::optional<QintFactorization> factor_qints(const Laurent& f);
std::optional<QintFactorization> factor_qints_fraction(const Laurent& num, const Laurent& den);

}  // namespace klsw
