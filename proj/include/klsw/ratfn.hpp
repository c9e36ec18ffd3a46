#pragma once

#include "klsw/laurent.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace klsw {

/// Element of Q(u) in canonical fraction form: numerator and denominator are
/// ordinary polynomials in u with integer coefficients, joint content 1,
/// positive denominator leading coefficient, and gcd(num, den) = 1.
/// Equality of values is equality of canonical forms.
class RatFn {
public:
    RatFn() : num_{}, den_{Int(1)} {}
    RatFn(long v) : RatFn(Rat(v)) {}
    explicit RatFn(const Rat& v);
    explicit RatFn(const Laurent& f);
    RatFn(const Laurent& num, const Laurent& den);

    static RatFn zero() { return RatFn(); }
    static RatFn one() { return RatFn(1); }
    static RatFn u_pow(int e) { return RatFn(Laurent::u_pow(e)); }
    static RatFn qint(int k) { return RatFn(Laurent::qint(k)); }
    static RatFn qfact(int k) { return RatFn(Laurent::qfact(k)); }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;

    /// Coefficient vectors, ascending powers of u (empty numerator = zero).
    const std::vector<Int>& num() const { return num_; }
    const std::vector<Int>& den() const { return den_; }

    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn operator-() const;
    RatFn& operator+=(const RatFn& o) { *this = *this + o; return *this; }
    RatFn& operator-=(const RatFn& o) { *this = *this - o; return *this; }
    RatFn& operator*=(const RatFn& o) { *this = *this * o; return *this; }
    RatFn& operator/=(const RatFn& o) { *this = *this / o; return *this; }
    friend bool operator==(const RatFn&, const RatFn&) = default;

    /// u -> u^-1.
    RatFn bar() const;
    bool is_bar_invariant() const { return bar() == *this; }

    /// Value at u = 0 when there is no pole there; nullopt signals a pole.
    std::optional<Rat> eval_at_zero() const;
    std::optional<Rat> eval_at_infinity() const { return bar().eval_at_zero(); }

    /// Coefficient of u in the power-series expansion at 0.
    /// Pre: no pole at 0 (throws otherwise).
    Rat mu_leading() const;

    /// First `count` power series coefficients at u = 0 (pre: no pole).
    std::vector<Rat> series_at_zero(size_t count) const;

    /// Evaluate at a rational point (pre: denominator nonzero there).
    Rat eval_at(const Rat& a) const;

    /// Membership in A = Z[u, u^-1]; to_laurent succeeds exactly then
    /// (denominator is a power of u and coefficients stay integral).
    bool is_laurent() const;
    std::optional<Laurent> to_laurent() const;

    /// num degree + den degree; the elimination pivot weight.
    int complexity() const {
        return (int)(num_.empty() ? 0 : num_.size() - 1) + (int)(den_.size() - 1);
    }

    /// Canonical text "(num)/(den)", or bare numerator text when den = 1.
    std::string to_string() const;
    /// Renders via quantum-integer factorizations when both parts factor,
    /// e.g. "[2]^2/([3][4])"; falls back to canonical text.
    std::string to_pretty_string() const;

private:
    std::vector<Int> num_, den_;
    void canonicalize();
    friend RatFn ratfn_raw(std::vector<Int> n, std::vector<Int> d);
};

/// Builds a RatFn from raw coefficient vectors without canonicalizing only
/// long enough to canonicalize; exists so tests can exercise idempotence.
RatFn ratfn_raw(std::vector<Int> n, std::vector<Int> d);

std::ostream& operator<<(std::ostream& os, const RatFn& f);

}  // namespace klsw
