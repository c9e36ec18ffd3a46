#include "klsw/ratfn.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace klsw {

namespace {

using Poly = std::vector<Int>;  // ascending, trailing coefficient nonzero

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

Poly add(const Poly& a, const Poly& b) {
    Poly c(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    trim(c);
    return c;
}

Poly neg(Poly a) {
    for (auto& c : a) c = -c;
    return a;
}

size_t low_order(const Poly& p) {
    size_t i = 0;
    while (i < p.size() && p[i] == 0) ++i;
    return i;
}

// gcd over Z[u] via rational Euclid + primitivization; result primitive with
// positive leading coefficient.
Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    if (a.empty()) std::swap(a, b);
    if (a.empty()) return {};
    std::vector<Rat> x(a.begin(), a.end()), y(b.begin(), b.end());
    auto rtrim = [](std::vector<Rat>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    rtrim(x);
    rtrim(y);
    while (!y.empty()) {
        while (x.size() >= y.size() && !x.empty()) {
            Rat q = x.back() / y.back();
            size_t off = x.size() - y.size();
            for (size_t i = 0; i < y.size(); ++i) x[off + i] -= q * y[i];
            rtrim(x);
        }
        x.swap(y);
    }
    Int g = 0, l = 1;
    for (auto& c : x) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat scale = Rat(l) / Rat(g);
    if (x.back() * scale < 0) scale = -scale;
    Poly r(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        Rat v = x[i] * scale;
        r[i] = v.get_num();  // denominator is 1 after scaling
    }
    return r;
}

// Exact division of integer polynomials, pre: d | n over Q.
Poly poly_div_exact(const Poly& n, const Poly& d) {
    if (n.empty()) return {};
    std::vector<Rat> rem(n.begin(), n.end());
    std::vector<Rat> quot(n.size() - d.size() + 1, Rat(0));
    auto rtrim = [](std::vector<Rat>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    Rat dlc(d.back());
    while (rem.size() >= d.size() && !rem.empty()) {
        Rat q = rem.back() / dlc;
        size_t off = rem.size() - d.size();
        quot[off] = q;
        for (size_t i = 0; i < d.size(); ++i) rem[off + i] -= q * Rat(d[i]);
        rtrim(rem);
    }
    if (!rem.empty()) throw std::logic_error("poly_div_exact: inexact division");
    Poly out(quot.size());
    for (size_t i = 0; i < quot.size(); ++i) {
        if (quot[i].get_den() != 1) throw std::logic_error("poly_div_exact: non-integral quotient");
        out[i] = quot[i].get_num();
    }
    trim(out);
    return out;
}

Poly laurent_to_poly(const Laurent& f, int shift, Int& den_scale) {
    // f * u^shift must be an ordinary polynomial; den_scale collects the lcm
    // of rational-coefficient denominators.
    Poly p;
    if (f.is_zero()) return p;
    p.assign(f.max_exp() + shift + 1, Int(0));
    den_scale = 1;
    for (auto& [e, c] : f.terms())
        mpz_lcm(den_scale.get_mpz_t(), den_scale.get_mpz_t(), c.get_den().get_mpz_t());
    for (auto& [e, c] : f.terms()) {
        Rat v = c * Rat(den_scale);
        p[e + shift] = v.get_num();
    }
    return p;
}

}  // namespace

RatFn ratfn_raw(std::vector<Int> n, std::vector<Int> d) {
    RatFn f;
    f.num_ = std::move(n);
    f.den_ = std::move(d);
    f.canonicalize();
    return f;
}

RatFn::RatFn(const Rat& v) {
    if (v != 0) num_ = {v.get_num()};
    den_ = {v.get_den()};
    canonicalize();
}

RatFn::RatFn(const Laurent& f) : RatFn(f, Laurent::one()) {}

RatFn::RatFn(const Laurent& num, const Laurent& den) {
    if (den.is_zero()) throw std::invalid_argument("RatFn: zero denominator");
    if (num.is_zero()) {
        num_ = {};
        den_ = {Int(1)};
        return;
    }
    int shift = std::max(0, -std::min(num.min_exp(), den.min_exp()));
    Int sn, sd;
    num_ = laurent_to_poly(num, shift, sn);
    den_ = laurent_to_poly(den, shift, sd);
    // scale cross-wise to clear rational coefficients
    for (auto& c : num_) c *= sd;
    for (auto& c : den_) c *= sn;
    canonicalize();
}

void RatFn::canonicalize() {
    trim(num_);
    trim(den_);
    if (den_.empty()) throw std::invalid_argument("RatFn: zero denominator");
    if (num_.empty()) {
        den_ = {Int(1)};
        return;
    }
    // strip common powers of u
    size_t lo = std::min(low_order(num_), low_order(den_));
    if (lo > 0) {
        num_.erase(num_.begin(), num_.begin() + lo);
        den_.erase(den_.begin(), den_.begin() + lo);
    }
    Poly g = poly_gcd(num_, den_);
    if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
        num_ = poly_div_exact(num_, g);
        den_ = poly_div_exact(den_, g);
    }
    // joint integer content 1, positive denominator leading coefficient
    Int c = 0;
    for (auto& x : num_) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    for (auto& x : den_) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    if (den_.back() < 0) c = -c;
    if (c != 1) {
        for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        for (auto& x : den_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
}

bool RatFn::is_one() const {
    return num_.size() == 1 && num_[0] == 1 && den_.size() == 1 && den_[0] == 1;
}

RatFn RatFn::operator+(const RatFn& o) const {
    RatFn r;
    r.num_ = add(mul(num_, o.den_), mul(o.num_, den_));
    r.den_ = mul(den_, o.den_);
    r.canonicalize();
    return r;
}

RatFn RatFn::operator-(const RatFn& o) const {
    RatFn r;
    r.num_ = add(mul(num_, o.den_), neg(mul(o.num_, den_)));
    r.den_ = mul(den_, o.den_);
    r.canonicalize();
    return r;
}

RatFn RatFn::operator*(const RatFn& o) const {
    RatFn r;
    r.num_ = mul(num_, o.num_);
    r.den_ = mul(den_, o.den_);
    if (r.num_.empty()) r.den_ = {Int(1)};
    r.canonicalize();
    return r;
}

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero()) throw std::invalid_argument("RatFn: division by zero");
    RatFn r;
    r.num_ = mul(num_, o.den_);
    r.den_ = mul(den_, o.num_);
    r.canonicalize();
    return r;
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = neg(r.num_);
    return r;
}

RatFn RatFn::bar() const {
    if (is_zero()) return *this;
    Laurent n, d;
    for (size_t i = 0; i < num_.size(); ++i)
        if (num_[i] != 0) n.add_term(-(int)i, Rat(num_[i]));
    for (size_t i = 0; i < den_.size(); ++i)
        if (den_[i] != 0) d.add_term(-(int)i, Rat(den_[i]));
    return RatFn(n, d);
}

std::optional<Rat> RatFn::eval_at_zero() const {
    if (is_zero()) return Rat(0);
    size_t on = low_order(num_), od = low_order(den_);
    if (on < od) return std::nullopt;
    if (on > od) return Rat(0);
    return Rat(num_[on]) / Rat(den_[od]);
}

std::vector<Rat> RatFn::series_at_zero(size_t count) const {
    std::vector<Rat> out(count, Rat(0));
    if (is_zero()) return out;
    size_t on = low_order(num_), od = low_order(den_);
    if (on < od) throw std::domain_error("RatFn: pole at u = 0");
    // series of (num/u^od) / (den/u^od); numerator's shift keeps leading zeros
    std::vector<Rat> c(count, Rat(0));
    Rat d0(den_[od]);
    for (size_t k = 0; k < count; ++k) {
        Rat nk = (od + k < num_.size()) ? Rat(num_[od + k]) : Rat(0);
        Rat acc = nk;
        for (size_t j = 0; j < k; ++j) {
            size_t di = od + (k - j);
            if (di < den_.size()) acc -= c[j] * Rat(den_[di]);
        }
        c[k] = acc / d0;
    }
    return c;
}

Rat RatFn::mu_leading() const {
    auto s = series_at_zero(2);
    return s[1];
}

Rat RatFn::eval_at(const Rat& a) const {
    auto ev = [&](const Poly& p) {
        Rat v(0);
        for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * a + Rat(*it);
        return v;
    };
    Rat d = ev(den_);
    if (d == 0) throw std::domain_error("RatFn: pole at evaluation point");
    return ev(num_) / d;
}

bool RatFn::is_laurent() const {
    return is_zero() || low_order(den_) + 1 == den_.size();  // den = c*u^k
}

std::optional<Laurent> RatFn::to_laurent() const {
    if (is_zero()) return Laurent::zero();
    if (!is_laurent()) return std::nullopt;
    int k = (int)low_order(den_);
    Rat d(den_.back());
    Laurent f;
    for (size_t i = 0; i < num_.size(); ++i)
        if (num_[i] != 0) f.add_term((int)i - k, Rat(num_[i]) / d);
    return f;
}

namespace {

std::string poly_text(const std::vector<Int>& p) {
    Laurent f;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) f.add_term((int)i, Rat(p[i]));
    return f.to_string();
}

}  // namespace

std::string RatFn::to_string() const {
    if (is_zero()) return "0";
    if (den_.size() == 1 && den_[0] == 1) return poly_text(num_);
    return "(" + poly_text(num_) + ")/(" + poly_text(den_) + ")";
}

std::string RatFn::to_pretty_string() const {
    if (is_zero()) return "0";
    Laurent n, d;
    for (size_t i = 0; i < num_.size(); ++i)
        if (num_[i] != 0) n.add_term((int)i, Rat(num_[i]));
    for (size_t i = 0; i < den_.size(); ++i)
        if (den_[i] != 0) d.add_term((int)i, Rat(den_[i]));
    auto fac = factor_qints_fraction(n, d);
    if (!fac) return to_string();
    // reconstruct and verify before trusting the presentation
    RatFn check(fac->constant);
    check *= RatFn::u_pow(fac->shift);
    for (auto& [k, m] : fac->factors)
        for (int i = 0; i < (m > 0 ? m : -m); ++i)
            check = m > 0 ? check * RatFn::qint(k) : check / RatFn::qint(k);
    if (!(check == *this)) return to_string();
    auto render_side = [](const std::vector<std::pair<int, int>>& fs, bool flip) {
        std::ostringstream os;
        int count = 0;
        for (auto& [k, m] : fs) {
            int mm = flip ? -m : m;
            if (mm <= 0) continue;
            os << "[" << k << "]";
            if (mm > 1) os << "^" << mm;
            ++count;
        }
        return std::make_pair(os.str(), count);
    };
    auto [ns, ncount] = render_side(fac->factors, false);
    auto [ds, dcount] = render_side(fac->factors, true);
    std::ostringstream os;
    Rat c = fac->constant;
    bool neg = c < 0;
    if (neg) c = -c;
    if (neg) os << "-";
    Rat cn(c.get_num()), cd(c.get_den());
    std::string upart;
    if (fac->shift != 0) {
        upart = "u";
        if (fac->shift != 1) upart += "^" + std::to_string(fac->shift);
    }
    std::string numpart;
    if (cn != 1 || (ns.empty() && upart.empty() && cd == 1)) numpart += cn.get_str();
    numpart += upart + ns;
    os << numpart;
    if (cd != 1 || dcount > 0) {
        std::string denpart;
        if (cd != 1 || dcount == 0) denpart += cd.get_str();
        denpart += ds;
        bool paren = (dcount + (cd != 1 ? 1 : 0)) > 1;
        os << "/" << (paren ? "(" + denpart + ")" : denpart);
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatFn& f) { return os << f.to_string(); }

}  // namespace klsw
