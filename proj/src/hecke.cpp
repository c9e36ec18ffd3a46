#include "klsw/hecke.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace klsw {
namespace hecke {

SymGroup::SymGroup(int r) : r_(r) {
    perms_ = comb::all_perms(r);
    for (size_t i = 0; i < perms_.size(); ++i) index_[perms_[i]] = (int)i;
    const int n = size();
    length_.resize(n);
    inverse_.resize(n);
    mult_s_.resize((size_t)(r - 1) * n);
    p_.resize(n);
    q_.resize(n);
    shape_.resize(n);
    shape_dag_.resize(n);
    for (int idx = 0; idx < n; ++idx) {
        const auto& w = perms_[idx];
        length_[idx] = comb::perm_length(w);
        inverse_[idx] = index_.at(comb::perm_inverse(w));
        for (int i = 1; i < r; ++i) {
            comb::Perm ws = w;
            std::swap(ws[i - 1], ws[i]);
            mult_s_[(size_t)(i - 1) * n + idx] = index_.at(ws);
        }
        auto [p, q] = comb::rsk(w);
        p_[idx] = p;
        q_[idx] = q;
        shape_[idx] = p.shape();
        auto [pd, qd] = comb::rsk(comb::word_reverse(w));
        shape_dag_[idx] = pd.shape();
    }
    by_length_.resize(n);
    for (int i = 0; i < n; ++i) by_length_[i] = i;
    std::stable_sort(by_length_.begin(), by_length_.end(),
                     [&](int a, int b) { return length_[a] < length_[b]; });
}

int SymGroup::index(const comb::Perm& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::invalid_argument("SymGroup: foreign permutation");
    return it->second;
}

namespace {
std::map<int, std::shared_ptr<const SymGroup>>& sym_cache() {
    static std::map<int, std::shared_ptr<const SymGroup>> c;
    return c;
}
std::mutex& sym_cache_mu() {
    static std::mutex m;
    return m;
}
}  // namespace

std::shared_ptr<const SymGroup> sym_group(int r) {
    std::lock_guard<std::mutex> lk(sym_cache_mu());
    auto& c = sym_cache();
    auto it = c.find(r);
    if (it != c.end()) return it->second;
    auto g = std::make_shared<const SymGroup>(r);
    c[r] = g;
    return g;
}

void KLTable::ensure(int w) const {
    if (done_[w]) return;
    const SymGroup& g = *g_;
    if (g.length(w) == 0) {
        cols_[w] = {{w, Laurent::one()}};
        done_[w] = true;
        return;
    }
    int s = 0;
    for (int i = 1; i < g.rank(); ++i)
        if (g.has_right_descent(w, i)) {
            s = i;
            break;
        }
    const int wp = g.mult_s(w, s);  // w' = w s, length drops
    ensure(wp);
    std::map<int, Laurent> col;
    const Laurent ui = Laurent::u_pow(-1), u = Laurent::u_pow(1);
    for (const auto& [x, p] : cols_[wp]) {
        int xs = g.mult_s(x, s);
        col[xs] += p;
        col[x] += (g.length(xs) < g.length(x) ? u : ui) * p;
    }
    // mu-corrections: subtract mu(y, w') C'_y over y with s in R(y)
    for (const auto& [y, p] : cols_[wp]) {
        Rat m = p.coeff(-1);
        if (m == 0 || !g.has_right_descent(y, s)) continue;
        ensure(y);
        Laurent ml(m);
        for (const auto& [x, q] : cols_[y]) {
            auto it = col.find(x);
            if (it == col.end()) {
                Laurent v = ml * q;
                if (!v.is_zero()) col[x] = -v;
            } else {
                it->second -= ml * q;
                if (it->second.is_zero()) col.erase(it);
            }
        }
    }
    for (auto it = col.begin(); it != col.end();) {
        if (it->second.is_zero())
            it = col.erase(it);
        else
            ++it;
    }
    if (col.find(w) == col.end() || !(col.at(w) == Laurent::one()))
        throw std::logic_error("KLTable: recursion lost unitriangularity");
    cols_[w] = std::move(col);
    done_[w] = true;
}

const std::map<int, Laurent>& KLTable::column(int w) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    ensure(w);
    return cols_[w];
}

Laurent KLTable::pprime(int x, int w) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    ensure(w);
    auto it = cols_[w].find(x);
    return it == cols_[w].end() ? Laurent::zero() : it->second;
}

int KLTable::mu(int x, int w) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    if (g_->length(x) > g_->length(w)) std::swap(x, w);
    Rat c = pprime(x, w).coeff(-1);
    return (int)c.get_num().get_si();
}

void KLTable::fill_all() {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    for (int w : g_->by_length()) ensure(w);
}

void KLTable::save(std::ostream& os) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    os << "klsw-kl-cache 1\n";
    os << "r " << g_->rank() << "\n";
    for (int w = 0; w < g_->size(); ++w) {
        if (!done_[w]) continue;
        for (const auto& [x, p] : cols_[w])
            os << "p " << comb::perm_to_string(g_->perm(x)) << " "
               << comb::perm_to_string(g_->perm(w)) << " " << p.to_string() << "\n";
    }
}

bool KLTable::load(std::istream& is) {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    std::string line;
    if (!std::getline(is, line) || line != "klsw-kl-cache 1") return false;
    int cur_r = -1;
    std::map<int, std::map<int, Laurent>> pending;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "r") {
            ls >> cur_r;
        } else if (tag == "p" && cur_r == g_->rank()) {
            std::string xs, ws;
            ls >> xs >> ws;
            std::string rest;
            std::getline(ls, rest);
            while (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
            int x = g_->index(comb::perm_from_string(xs));
            int w = g_->index(comb::perm_from_string(ws));
            // Laurent text is parseable via a tiny local reader below.
            Laurent p;
            {
                std::string t = rest;
                // reuse the qexpr grammar lives elsewhere; parse "a*u^e" sums here
                size_t pos = 0;
                auto skip = [&] { while (pos < t.size() && t[pos] == ' ') ++pos; };
                bool neg = false;
                skip();
                if (pos < t.size() && (t[pos] == '-')) { neg = true; ++pos; }
                while (pos < t.size()) {
                    skip();
                    std::string numtok;
                    while (pos < t.size() && (isdigit((unsigned char)t[pos]) || t[pos] == '/')) numtok += t[pos++];
                    Rat c = numtok.empty() ? Rat(1) : Rat(numtok);
                    c.canonicalize();
                    int e = 0;
                    skip();
                    if (pos < t.size() && t[pos] == '*') { ++pos; skip(); }
                    if (pos < t.size() && t[pos] == 'u') {
                        ++pos;
                        e = 1;
                        if (pos < t.size() && t[pos] == '^') {
                            ++pos;
                            bool en = pos < t.size() && t[pos] == '-';
                            if (en) ++pos;
                            int v = 0;
                            while (pos < t.size() && isdigit((unsigned char)t[pos])) v = v * 10 + (t[pos++] - '0');
                            e = en ? -v : v;
                        }
                    }
                    p.add_term(e, neg ? -c : c);
                    skip();
                    neg = false;
                    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
                        neg = t[pos] == '-';
                        ++pos;
                    } else {
                        break;
                    }
                }
            }
            pending[w][x] = p;
        }
    }
    for (auto& [w, col] : pending) {
        if (col.find(w) == col.end() || !(col.at(w) == Laurent::one())) continue;  // reject junk
        cols_[w] = std::move(col);
        done_[w] = true;
    }
    return true;
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
    for (auto& [i, c] : o.coords) add(i, c);
    return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
    for (auto& [i, c] : o.coords) add(i, -c);
    return *this;
}

HeckeElt HeckeElt::operator*(const RatFn& c) const {
    HeckeElt r;
    r.rank = rank;
    r.basis = basis;
    if (c.is_zero()) return r;
    for (auto& [i, a] : coords) r.coords[i] = a * c;
    return r;
}

HeckeContext::HeckeContext(int r) : g_(sym_group(r)) {
    kl_ = std::make_unique<KLTable>(g_);
    bar_t_.resize(g_->size());
    bar_done_.assign(g_->size(), false);
}

HeckeElt HeckeContext::t_elt(int idx) const {
    HeckeElt e;
    e.rank = g_->rank();
    e.basis = HBasis::T;
    e.coords[idx] = RatFn::one();
    return e;
}

HeckeElt HeckeContext::mult_gen(const HeckeElt& a, int i) const {
    if (a.basis != HBasis::T) throw std::invalid_argument("mult_gen: T basis required");
    HeckeElt r;
    r.rank = a.rank;
    r.basis = HBasis::T;
    const RatFn uuinv = RatFn(Laurent::u_pow(1) - Laurent::u_pow(-1));
    for (auto& [w, c] : a.coords) {
        int ws = g_->mult_s(w, i);
        if (g_->length(ws) > g_->length(w)) {
            r.add(ws, c);
        } else {
            r.add(ws, c);
            r.add(w, c * uuinv);
        }
    }
    return r;
}

HeckeElt HeckeContext::mult_tw(const HeckeElt& a, int widx) const {
    HeckeElt r = a;
    for (int i : comb::reduced_word(g_->perm(widx))) r = mult_gen(r, i);
    return r;
}

HeckeElt HeckeContext::multiply(const HeckeElt& a, const HeckeElt& b) const {
    if (a.rank != b.rank) throw std::invalid_argument("multiply: rank mismatch");
    HBasis out = a.basis;
    HeckeElt ta = to_basis(a, HBasis::T), tb = to_basis(b, HBasis::T);
    HeckeElt prod;
    prod.rank = a.rank;
    prod.basis = HBasis::T;
    for (auto& [w, c] : tb.coords) {
        HeckeElt part = mult_tw(ta, w);
        for (auto& [x, v] : part.coords) prod.add(x, v * c);
    }
    return to_basis(prod, out);
}

const std::map<int, Laurent>& HeckeContext::bar_t(int widx) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    if (bar_done_[widx]) return bar_t_[widx];
    if (g_->length(widx) == 0) {
        bar_t_[widx] = {{widx, Laurent::one()}};
    } else {
        int s = 0;
        for (int i = 1; i < g_->rank(); ++i)
            if (g_->has_right_descent(widx, i)) {
                s = i;
                break;
            }
        int wp = g_->mult_s(widx, s);
        const auto& base = bar_t(wp);
        // bar(T_w) = bar(T_w') * (T_s + (u^-1 - u))
        std::map<int, Laurent> out;
        const Laurent shift = Laurent::u_pow(-1) - Laurent::u_pow(1);
        const Laurent upos = Laurent::u_pow(1) - Laurent::u_pow(-1);
        for (const auto& [x, c] : base) {
            int xs = g_->mult_s(x, s);
            out[xs] += c;
            if (g_->length(xs) < g_->length(x)) out[x] += upos * c;
            out[x] += shift * c;
        }
        for (auto it = out.begin(); it != out.end();) {
            if (it->second.is_zero())
                it = out.erase(it);
            else
                ++it;
        }
        bar_t_[widx] = std::move(out);
    }
    bar_done_[widx] = true;
    return bar_t_[widx];
}

HeckeElt HeckeContext::bar(const HeckeElt& a) const {
    HeckeElt t = to_basis(a, HBasis::T);
    HeckeElt r;
    r.rank = a.rank;
    r.basis = HBasis::T;
    for (auto& [w, c] : t.coords) {
        RatFn cb = c.bar();
        for (const auto& [x, f] : bar_t(w)) r.add(x, cb * RatFn(f));
    }
    return to_basis(r, a.basis);
}

HeckeElt HeckeContext::kl_basis(int widx, HBasis kind) const {
    HeckeElt e;
    e.rank = g_->rank();
    e.basis = HBasis::T;
    if (kind == HBasis::Cp) {
        for (const auto& [x, p] : kl_->column(widx)) e.coords[x] = RatFn(p);
    } else if (kind == HBasis::C) {
        int lw = g_->length(widx);
        for (const auto& [x, p] : kl_->column(widx)) {
            Laurent v = p.bar();
            if ((lw - g_->length(x)) % 2) v = -v;
            e.coords[x] = RatFn(v);
        }
    } else {
        throw std::invalid_argument("kl_basis: kind must be C or Cp");
    }
    return e;
}

HeckeElt HeckeContext::to_basis(const HeckeElt& a, HBasis target) const {
    if (a.basis == target) return a;
    // First move to T.
    HeckeElt t;
    t.rank = a.rank;
    t.basis = HBasis::T;
    if (a.basis == HBasis::T) {
        t = a;
    } else {
        for (auto& [w, c] : a.coords) {
            HeckeElt cw = kl_basis(w, a.basis);
            for (auto& [x, v] : cw.coords) t.add(x, v * c);
        }
    }
    if (target == HBasis::T) return t;
    // Back-substitute: both canonical bases are unitriangular over the
    // (length, lex) order with leading term T_w.
    HeckeElt out;
    out.rank = a.rank;
    out.basis = target;
    while (!t.coords.empty()) {
        auto top = t.coords.begin();
        for (auto it = t.coords.begin(); it != t.coords.end(); ++it) {
            if (g_->length(it->first) > g_->length(top->first) ||
                (g_->length(it->first) == g_->length(top->first) && it->first > top->first))
                top = it;
        }
        int w = top->first;
        RatFn c = top->second;
        out.coords[w] = c;
        HeckeElt cw = kl_basis(w, target);
        for (auto& [x, v] : cw.coords) t.add(x, -(v * c));
    }
    return out;
}

comb::Tableau HeckeContext::cell_of(int widx, HBasis kind) const {
    if (kind == HBasis::C) return g_->p_tab(widx);
    if (kind == HBasis::Cp) return g_->p_tab(widx).transposed();
    throw std::invalid_argument("cell_of: kind must be C or Cp");
}

HeckeElt HeckeContext::one_op(const HeckeElt& a) const {
    HeckeElt t = to_basis(a, HBasis::T);
    HeckeElt r;
    r.rank = a.rank;
    r.basis = HBasis::T;
    for (auto& [w, c] : t.coords) r.add(g_->inverse(w), c);
    return to_basis(r, a.basis);
}

HeckeElt HeckeContext::dagger_op(const HeckeElt& a) const {
    HeckeElt t = to_basis(a, HBasis::T);
    HeckeElt r;
    r.rank = a.rank;
    r.basis = HBasis::T;
    const int n = g_->rank();
    for (auto& [w, c] : t.coords) {
        // T_w -> T_{w0 w^{-1} w0} (antiautomorphism T_i -> T_{r-i})
        comb::Perm inv = comb::perm_inverse(g_->perm(w));
        comb::Perm res(n);
        for (int j = 0; j < n; ++j) res[j] = n + 1 - inv[n - 1 - j];
        r.add(g_->index(res), c);
    }
    return to_basis(r, a.basis);
}

std::string HeckeContext::to_string(const HeckeElt& a, bool pretty) const {
    if (a.coords.empty()) return "0";
    std::string tag = a.basis == HBasis::T ? "T" : (a.basis == HBasis::C ? "C" : "C'");
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : a.coords) {
        if (!first) os << " + ";
        first = false;
        os << "(" << (pretty ? c.to_pretty_string() : c.to_string()) << ")*" << tag << "["
           << comb::perm_to_string(g_->perm(w)) << "]";
    }
    return os.str();
}

namespace {
std::map<int, std::shared_ptr<HeckeContext>>& ctx_cache() {
    static std::map<int, std::shared_ptr<HeckeContext>> c;
    return c;
}
std::mutex& ctx_cache_mu() {
    static std::mutex m;
    return m;
}
}  // namespace

std::shared_ptr<HeckeContext> hecke_context(int r) {
    std::lock_guard<std::mutex> lk(ctx_cache_mu());
    auto& c = ctx_cache();
    auto it = c.find(r);
    if (it != c.end()) return it->second;
    auto ctx = std::make_shared<HeckeContext>(r);
    c[r] = ctx;
    return ctx;
}

}  // namespace hecke
}  // namespace klsw
