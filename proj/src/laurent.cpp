#include "klsw/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace klsw {

Laurent Laurent::qint(int k) {
    Laurent f;
    for (int e = 1 - k; e <= k - 1; e += 2) f.c_[e] = 1;
    return f;
}

Laurent Laurent::qfact(int k) {
    Laurent f = Laurent::one();
    for (int i = 2; i <= k; ++i) f *= qint(i);
    return f;
}

Laurent Laurent::operator-() const {
    Laurent f;
    for (auto& [e, c] : c_) f.c_[e] = -c;
    return f;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent f = *this;
    f += o;
    return f;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent f = *this;
    f -= o;
    return f;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent f;
    for (auto& [e1, c1] : c_)
        for (auto& [e2, c2] : o.c_) f.add_term(e1 + e2, c1 * c2);
    return f;
}

Laurent Laurent::operator*(const Rat& c) const {
    Laurent f;
    if (c == 0) return f;
    for (auto& [e, a] : c_) f.c_[e] = a * c;
    return f;
}

Laurent Laurent::bar() const {
    Laurent f;
    for (auto& [e, c] : c_) f.c_[-e] = c;
    return f;
}

Laurent Laurent::shifted(int s) const {
    Laurent f;
    for (auto& [e, c] : c_) f.c_[e + s] = c;
    return f;
}

bool Laurent::has_integer_coeffs() const {
    for (auto& [e, c] : c_)
        if (c.get_den() != 1) return false;
    return true;
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& d) const {
    if (d.is_zero()) throw std::invalid_argument("Laurent: division by zero");
    if (is_zero()) return Laurent::zero();
    // Long division from the top exponent down.
    Laurent rem = *this;
    Laurent quot;
    const int dtop = d.max_exp();
    const Rat dlc = d.c_.rbegin()->second;
    while (!rem.is_zero()) {
        int rtop = rem.max_exp();
        if (rem.max_exp() - rem.min_exp() < d.max_exp() - d.min_exp()) return std::nullopt;
        Rat q = rem.c_.rbegin()->second / dlc;
        int e = rtop - dtop;
        quot.add_term(e, q);
        rem -= d * Laurent::term(q, e);
        if (!rem.is_zero() && rem.max_exp() >= rtop) return std::nullopt;  // no progress
    }
    return quot;
}

std::string Laurent::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : c_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1);
        if (e == 0) {
            os << a.get_str();
        } else {
            if (!unit) os << a.get_str() << "*";
            os << "u";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

// Polynomial gcd over Q[x] for dense ascending coefficient vectors, result
// made primitive over Z with positive leading coefficient.
std::vector<Rat> vec_trim(std::vector<Rat> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

std::vector<Rat> vec_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        a = vec_trim(std::move(a));
    }
    return a;
}

}  // namespace

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero() && b.is_zero()) return Laurent::zero();
    auto to_vec = [](const Laurent& f) {
        std::vector<Rat> v(f.max_exp() - f.min_exp() + 1, Rat(0));
        for (auto& [e, c] : f.terms()) v[e - f.min_exp()] = c;
        return v;
    };
    std::vector<Rat> x, y;
    if (!a.is_zero()) x = to_vec(a);
    if (!b.is_zero()) y = to_vec(b);
    if (x.empty()) x.swap(y);
    while (!y.empty()) {
        auto r = vec_rem(x, y);
        x.swap(y);
        y = std::move(r);
    }
    // x holds the gcd over Q; primitivize over Z.
    Int num_gcd = 0, den_lcm = 1;
    for (auto& c : x) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat scale = Rat(den_lcm) / Rat(num_gcd);
    if (x.back() * scale < 0) scale = -scale;
    Laurent g;
    for (size_t i = 0; i < x.size(); ++i) g.add_term((int)i, x[i] * scale);
    // Normalize unit: nonzero constant term.
    if (!g.is_zero() && g.min_exp() != 0) g = g.shifted(-g.min_exp());
    // gcd of integer Laurent polynomials also carries the integer content gcd.
    // (The primitivization above already set content 1; callers that need the
    // integer content handle it separately.)
    return g;
}

namespace {

// Cyclotomic polynomial as a Laurent polynomial in u, computed by division.
const Laurent& cyclotomic(int d) {
    static std::vector<Laurent> cache{Laurent::zero()};
    while ((int)cache.size() <= d) {
        int m = (int)cache.size();
        Laurent f = Laurent::u_pow(m) - Laurent::one();
        for (int e = 1; e < m; ++e)
            if (m % e == 0) f = *f.divide_exact(cache[e]);
        cache.push_back(f);
    }
    return cache[d];
}

// Multiplicity of each cyclotomic factor Phi_d, d >= 2, in f; the leftover
// must be a monomial, returned through rest.
std::map<int, int> cyclotomic_profile(const Laurent& f, Laurent& rest, int dmax) {
    std::map<int, int> e;
    rest = f;
    for (int d = 2; d <= dmax && !rest.is_monomial(); ++d) {
        while (true) {
            auto q = rest.divide_exact(cyclotomic(d));
            if (!q) break;
            e[d]++;
            rest = *q;
        }
    }
    return e;
}

// [k] = u^{1-k} * prod over d | 2k, d not dividing 2 of Phi_d.
std::vector<int> qint_profile(int k) {
    std::vector<int> ds;
    for (int d = 3; d <= 2 * k; ++d)
        if ((2 * k) % d == 0) ds.push_back(d);
    return ds;
}

// Assemble a cyclotomic multiplicity map into quantum-integer exponents;
// fails when the profile is not a Z-combination of [k] profiles.
std::optional<std::map<int, int>> assemble_qints(std::map<int, int> e) {
    std::map<int, int> out;
    while (true) {
        int d = 0;
        for (auto& [dd, m] : e)
            if (m != 0) d = std::max(d, dd);
        if (d == 0) break;
        if (d % 2) return std::nullopt;
        int k = d / 2, a = e[d];
        out[k] += a;
        for (int dd : qint_profile(k)) e[dd] -= a;
    }
    return out;
}

std::optional<QintFactorization> factor_from_profile(std::map<int, int> e, const Laurent& rest_num,
                                                     const Laurent& rest_den) {
    auto ks = assemble_qints(std::move(e));
    if (!ks) return std::nullopt;
    QintFactorization r;
    int unit_sum = 0;  // the u^{1-k} unit hidden inside each [k]
    for (auto it = ks->rbegin(); it != ks->rend(); ++it) {
        auto [k, m] = *it;
        if (m == 0) continue;
        r.factors.emplace_back(k, m);
        unit_sum += (1 - k) * m;
    }
    if (!rest_num.is_monomial() || !rest_den.is_monomial()) return std::nullopt;
    r.constant = rest_num.coeff(rest_num.min_exp()) / rest_den.coeff(rest_den.min_exp());
    r.shift = rest_num.min_exp() - rest_den.min_exp() - unit_sum;
    return r;
}

}  // namespace

std::optional<QintFactorization> factor_qints(const Laurent& f) {
    if (f.is_zero()) return std::nullopt;
    int span = f.max_exp() - f.min_exp();
    Laurent rest;
    auto e = cyclotomic_profile(f, rest, 2 * (span + 2));
    auto r = factor_from_profile(std::move(e), rest, Laurent::one());
    if (!r) return r;
    for (auto& [k, m] : r->factors)
        if (m < 0) return std::nullopt;  // a plain Laurent value must factor positively
    return r;
}

std::optional<QintFactorization> factor_qints_fraction(const Laurent& num, const Laurent& den) {
    if (num.is_zero() || den.is_zero()) return std::nullopt;
    int span = std::max(num.max_exp() - num.min_exp(), den.max_exp() - den.min_exp());
    Laurent rn, rd;
    auto en = cyclotomic_profile(num, rn, 2 * (span + 2));
    auto ed = cyclotomic_profile(den, rd, 2 * (span + 2));
    for (auto& [d, m] : ed) en[d] -= m;
    return factor_from_profile(std::move(en), rn, rd);
}

}  // namespace klsw
