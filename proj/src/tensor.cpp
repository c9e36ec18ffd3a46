#include "klsw/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klsw {
namespace tensor {

TensorElt& TensorElt::operator+=(const TensorElt& o) {
    for (auto& [k, c] : o.coords) add(k, c);
    return *this;
}

TensorElt& TensorElt::operator-=(const TensorElt& o) {
    for (auto& [k, c] : o.coords) add(k, -c);
    return *this;
}

TensorElt TensorElt::operator*(const RatFn& c) const {
    TensorElt r;
    r.n = n;
    r.r = this->r;
    r.basis = basis;
    if (c.is_zero()) return r;
    for (auto& [k, a] : coords) r.coords[k] = a * c;
    return r;
}

bool TensorElt::single_weight() const {
    if (coords.empty()) return true;
    auto c0 = comb::word_content(coords.begin()->first, n);
    for (auto& [k, c] : coords)
        if (comb::word_content(k, n) != c0) return false;
    return true;
}

WSpace::WSpace(int n_, int r_, std::vector<int> content_)
    : n(n_), r(r_), content(std::move(content_)) {
    words = comb::words_of_content(content);
    std::vector<std::pair<int, comb::Word>> keyed;
    for (auto& k : words) {
        auto [d, D] = comb::coset_reps(k);
        keyed.emplace_back(comb::perm_length(d), k);
    }
    std::stable_sort(keyed.begin(), keyed.end());
    words.clear();
    for (auto& [len, k] : keyed) words.push_back(k);
    for (size_t i = 0; i < words.size(); ++i) index_[words[i]] = (int)i;
    for (auto& k : words) {
        auto [d, D] = comb::coset_reps(k);
        dk_.push_back(d);
        Dk_.push_back(D);
        auto [p, q] = comb::rsk(k);
        p_.push_back(p);
        q_.push_back(q);
        sh_.push_back(p.shape());
        auto [pd, qd] = comb::rsk(comb::word_reverse(k));
        shd_.push_back(pd.shape());
    }
}

int WSpace::index(const comb::Word& k) const {
    auto it = index_.find(k);
    if (it == index_.end()) throw std::invalid_argument("WSpace: word of foreign content");
    return it->second;
}

std::map<int, Laurent> WSpace::bar_monomial(const comb::Word& k) const {
    // bar(v_k) = v_sort(k) * T_{d(k)}, applied generator by generator.
    auto [d, D] = comb::coset_reps(k);
    std::map<int, Laurent> v{{index(comb::word_sorted(k)), Laurent::one()}};
    const Laurent u = Laurent::u_pow(1), split = Laurent::u_pow(1) - Laurent::u_pow(-1);
    for (int i : comb::reduced_word(d)) {
        std::map<int, Laurent> out;
        for (auto& [j, c] : v) {
            const comb::Word& w = words[j];
            int a = w[i - 1], b = w[i];
            if (a == b) {
                out[j] += u * c;
            } else {
                int js = index(comb::word_act_si(w, i));
                out[js] += c;
                if (a < b) out[j] += split * c;
            }
        }
        for (auto it = out.begin(); it != out.end();) {
            if (it->second.is_zero())
                it = out.erase(it);
            else
                ++it;
        }
        v = std::move(out);
    }
    return v;
}

const std::vector<std::map<int, Laurent>>& WSpace::bar_cols() const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    if (!bar_done_) {
        bar_.resize(words.size());
        for (size_t j = 0; j < words.size(); ++j) {
            bar_[j] = bar_monomial(words[j]);
            auto it = bar_[j].find((int)j);
            if (it == bar_[j].end() || !(it->second == Laurent::one()) ||
                bar_[j].rbegin()->first > (int)j)
                throw std::logic_error("WSpace: bar matrix is not unitriangular");
        }
        bar_done_ = true;
    }
    return bar_;
}

const std::vector<std::map<int, Laurent>>& WSpace::canonical_cols(bool lower) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto& cols = lower ? cp_ : c_;
    bool& done = lower ? cp_done_ : c_done_;
    if (done) return cols;
    const auto& bar = bar_cols();
    cols.assign(words.size(), {});
    for (size_t j = 0; j < words.size(); ++j) {
        std::map<int, Laurent> e{{(int)j, Laurent::one()}};
        while (true) {
            // delta = bar(e) - e
            std::map<int, Laurent> delta;
            for (auto& [i, a] : e) {
                Laurent ab = a.bar();
                for (auto& [x, f] : bar[i]) delta[x] += ab * f;
            }
            for (auto& [i, a] : e) delta[i] -= a;
            for (auto it = delta.begin(); it != delta.end();) {
                if (it->second.is_zero())
                    it = delta.erase(it);
                else
                    ++it;
            }
            if (delta.empty()) break;
            int t = delta.rbegin()->first;
            if (t >= (int)j) throw std::logic_error("WSpace: bar correction escaped");
            const Laurent& ft = delta.rbegin()->second;
            Laurent gamma;
            for (auto& [m, a] : ft.terms()) {
                if (m == 0 || ft.coeff(-m) != -a)
                    throw std::logic_error("WSpace: correction term not antisymmetric");
                if (m > 0) gamma.add_term(lower ? m : -m, lower ? a : -a);
            }
            for (auto& [x, f] : cols[t]) {
                auto it = e.find(x);
                if (it == e.end()) {
                    Laurent v = gamma * f;
                    if (!v.is_zero()) e[x] = v;
                } else {
                    it->second += gamma * f;
                    if (it->second.is_zero()) e.erase(it);
                }
            }
        }
        cols[j] = std::move(e);
    }
    done = true;
    return cols;
}

const QMatrix& WSpace::dual_matrix_inverse() const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    if (!dual_done_) {
        QMatrix w((size_t)size(), (size_t)size());
        for (int m = 0; m < size(); ++m) {
            auto col = bar_monomial(comb::word_reverse(words[m]));
            for (auto& [x, f] : col) w.at(x, m) = RatFn(f);
        }
        dual_inv_ = inverse(w);
        dual_done_ = true;
    }
    return dual_inv_;
}

const WSpace& TensorSpace::space(const std::vector<int>& content) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = spaces_.find(content);
    if (it == spaces_.end())
        it = spaces_.emplace(content, std::make_unique<WSpace>(n_, r_, content)).first;
    return *it->second;
}

const WSpace& TensorSpace::space_of(const comb::Word& k) const {
    return space(comb::word_content(k, n_));
}

TensorElt TensorSpace::monomial(const comb::Word& k) const {
    TensorElt x;
    x.n = n_;
    x.r = r_;
    x.coords[k] = RatFn::one();
    return x;
}

TensorElt TensorSpace::act_ti(const TensorElt& x, int i) const {
    if (x.basis != TBasis::Monomial) throw std::invalid_argument("act_ti: monomial basis required");
    TensorElt out;
    out.n = n_;
    out.r = r_;
    const RatFn split = RatFn(Laurent::u_pow(1) - Laurent::u_pow(-1));
    const RatFn u = RatFn::u_pow(1);
    for (auto& [k, c] : x.coords) {
        int a = k[i - 1], b = k[i];
        if (a == b) {
            out.add(k, u * c);
        } else {
            out.add(comb::word_act_si(k, i), c);
            if (a < b) out.add(k, split * c);
        }
    }
    return out;
}

TensorElt TensorSpace::act_ti_inv(const TensorElt& x, int i) const {
    if (x.basis != TBasis::Monomial)
        throw std::invalid_argument("act_ti_inv: monomial basis required");
    TensorElt out;
    out.n = n_;
    out.r = r_;
    const RatFn split = RatFn(Laurent::u_pow(-1) - Laurent::u_pow(1));
    const RatFn ui = RatFn::u_pow(-1);
    for (auto& [k, c] : x.coords) {
        int a = k[i - 1], b = k[i];
        if (a == b) {
            out.add(k, ui * c);
        } else {
            out.add(comb::word_act_si(k, i), c);
            if (a > b) out.add(k, split * c);
        }
    }
    return out;
}

TensorElt TensorSpace::hecke_act(const TensorElt& x, const hecke::HeckeElt& h,
                                 const hecke::HeckeContext& hc) const {
    if (h.rank != r_) throw std::invalid_argument("hecke_act: rank mismatch");
    hecke::HeckeElt ht = hc.to_basis(h, hecke::HBasis::T);
    TensorElt out;
    out.n = n_;
    out.r = r_;
    for (auto& [w, c] : ht.coords) {
        TensorElt part = x;
        for (int i : comb::reduced_word(hc.group().perm(w))) part = act_ti(part, i);
        out += part * c;
    }
    return out;
}

TensorElt TensorSpace::uq_F(int i, const TensorElt& x) const {
    if (i < 1 || i >= n_) throw std::invalid_argument("uq_F: generator index out of range");
    TensorElt out;
    out.n = n_;
    out.r = r_;
    for (auto& [k, c] : x.coords) {
        int e = 0;  // K_i weight of the prefix
        for (int j = 0; j < r_; ++j) {
            if (k[j] == i) {
                comb::Word k2 = k;
                k2[j] = i + 1;
                out.add(k2, RatFn::u_pow(e) * c);
            }
            e += (k[j] == i) - (k[j] == i + 1);
        }
    }
    return out;
}

TensorElt TensorSpace::uq_E(int i, const TensorElt& x) const {
    if (i < 1 || i >= n_) throw std::invalid_argument("uq_E: generator index out of range");
    TensorElt out;
    out.n = n_;
    out.r = r_;
    for (auto& [k, c] : x.coords) {
        std::vector<int> suffix(r_ + 1, 0);
        for (int j = r_ - 1; j >= 0; --j)
            suffix[j] = suffix[j + 1] + (k[j] == i) - (k[j] == i + 1);
        for (int j = 0; j < r_; ++j) {
            if (k[j] == i + 1) {
                comb::Word k2 = k;
                k2[j] = i;
                out.add(k2, RatFn::u_pow(-suffix[j + 1]) * c);
            }
        }
    }
    return out;
}

TensorElt TensorSpace::uq_K(int i, const TensorElt& x, int power) const {
    TensorElt out;
    out.n = n_;
    out.r = r_;
    for (auto& [k, c] : x.coords) {
        int e = 0;
        for (int j = 0; j < r_; ++j) e += (k[j] == i) - (k[j] == i + 1);
        out.add(k, RatFn::u_pow(e * power) * c);
    }
    return out;
}

TensorElt TensorSpace::uq_qh(const std::vector<int>& h, const TensorElt& x) const {
    if ((int)h.size() != n_) throw std::invalid_argument("uq_qh: weight vector size mismatch");
    TensorElt out;
    out.n = n_;
    out.r = r_;
    for (auto& [k, c] : x.coords) {
        int e = 0;
        for (int j = 0; j < r_; ++j) e += h[k[j] - 1];
        out.add(k, RatFn::u_pow(e) * c);
    }
    return out;
}

TensorElt TensorSpace::bar(const TensorElt& x) const {
    if (x.basis != TBasis::Monomial) throw std::invalid_argument("bar: monomial basis required");
    TensorElt out;
    out.n = n_;
    out.r = r_;
    for (auto& [k, c] : x.coords) {
        const WSpace& ws = space_of(k);
        const auto& cols = ws.bar_cols();
        RatFn cb = c.bar();
        for (auto& [j, f] : cols[ws.index(k)]) out.add(ws.words[j], cb * RatFn(f));
    }
    return out;
}

TensorElt TensorSpace::canonical_elt(const comb::Word& k, bool lower) const {
    const WSpace& ws = space_of(k);
    const auto& cols = ws.canonical_cols(lower);
    TensorElt out;
    out.n = n_;
    out.r = r_;
    for (auto& [j, f] : cols[ws.index(k)]) out.coords[ws.words[j]] = RatFn(f);
    return out;
}

TensorElt TensorSpace::expand_in_canonical(const TensorElt& x, bool lower) const {
    if (x.basis != TBasis::Monomial)
        throw std::invalid_argument("expand_in_canonical: monomial basis required");
    TensorElt rem = x;
    TensorElt out;
    out.n = n_;
    out.r = r_;
    out.basis = lower ? TBasis::Lower : TBasis::Upper;
    while (!rem.coords.empty()) {
        // top word in its weight space order
        const WSpace* ws = &space_of(rem.coords.begin()->first);
        int best = -1;
        for (auto& [k, c] : rem.coords) {
            const WSpace& wk = space_of(k);
            if (&wk == ws) best = std::max(best, ws->index(k));
        }
        const auto& cols = ws->canonical_cols(lower);
        RatFn c = rem.coords.at(ws->words[best]);
        out.coords[ws->words[best]] = c;
        for (auto& [j, f] : cols[best]) rem.add(ws->words[j], -(c * RatFn(f)));
    }
    return out;
}

TensorElt TensorSpace::canonical_to_monomial(const TensorElt& x) const {
    if (x.basis == TBasis::Monomial) return x;
    bool lower = x.basis == TBasis::Lower;
    TensorElt out;
    out.n = n_;
    out.r = r_;
    for (auto& [k, c] : x.coords) {
        TensorElt e = canonical_elt(k, lower);
        out += e * c;
    }
    return out;
}

RatFn TensorSpace::bilinear_form(const TensorElt& x, const TensorElt& y) const {
    if (x.n != y.n || x.r != y.r) throw std::invalid_argument("bilinear_form: shape mismatch");
    // group y by weight space; (v_k, bar(v_{l-dagger})) = delta pairs within
    // a content class
    RatFn total;
    std::map<std::vector<int>, std::vector<std::pair<int, RatFn>>> spaces;
    for (auto& [k, c] : y.coords) {
        const WSpace& ws = space_of(k);
        spaces[ws.content].push_back({ws.index(k), c});
    }
    for (auto& [content, items] : spaces) {
        const WSpace& ws = space(content);
        std::vector<RatFn> ycol((size_t)ws.size());
        for (auto& [i, c] : items) ycol[i] = c;
        std::vector<RatFn> z = ws.dual_matrix_inverse() * ycol;
        for (auto& [k, c] : x.coords) {
            if (comb::word_content(k, n_) != content) continue;
            total += c * z[ws.index(k)];
        }
    }
    return total;
}

std::map<comb::Tableau, std::vector<comb::Word>> hecke_cells(int n, int r, bool lower) {
    std::map<comb::Tableau, std::vector<comb::Word>> cells;
    for (auto& k : comb::all_words(n, r)) {
        auto key = comb::rsk(lower ? comb::word_reverse(k) : k).first;
        cells[key].push_back(k);
    }
    return cells;
}

std::map<comb::Tableau, std::vector<comb::Word>> u_cells(int n, int r, bool lower) {
    std::map<comb::Tableau, std::vector<comb::Word>> cells;
    for (auto& k : comb::all_words(n, r)) {
        auto key = comb::rsk(lower ? comb::word_reverse(k) : k).second;
        cells[key].push_back(k);
    }
    return cells;
}

std::string to_string(const TensorElt& x, bool pretty) {
    if (x.coords.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    std::string tag = x.basis == TBasis::Monomial ? "v" : (x.basis == TBasis::Upper ? "c" : "c'");
    for (auto& [k, c] : x.coords) {
        if (!first) os << " + ";
        first = false;
        os << "(" << (pretty ? c.to_pretty_string() : c.to_string()) << ")*" << tag << "["
           << comb::word_to_string(k) << "]";
    }
    return os.str();
}

}  // namespace tensor
}  // namespace klsw
