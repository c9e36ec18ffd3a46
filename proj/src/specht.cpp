#include "klsw/specht.hpp"

#include <algorithm>
#include <stdexcept>

namespace klsw {
namespace specht {

int ModuleRealization::r() const {
    int n = 0;
    for (int p : lambda) n += p;
    return n;
}

int ModuleRealization::index(const comb::Tableau& q) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == q) return (int)i;
    throw std::invalid_argument("ModuleRealization: unknown tableau");
}

QMatrix ModuleRealization::t_gen(int i) const {
    // T_s = C_s + u on the upper basis, T_s = C'_s - u^-1 on the lower one
    QMatrix m = canon_act[i - 1];
    const RatFn shift = lower ? -RatFn::u_pow(-1) : RatFn::u_pow(1);
    for (size_t d = 0; d < m.rows(); ++d) m.at(d, d) += shift;
    return m;
}

ModuleRealization canonical_module(const comb::Partition& lambda, bool lower) {
    ModuleRealization m;
    m.lambda = lambda;
    m.lower = lower;
    m.labels = comb::syt_sorted(lambda);
    const int nq = (int)m.labels.size();
    int r = m.r();
    auto hc = hecke::hecke_context(r);
    const auto& g = hc->group();

    // cell representatives: fixed insertion tableau, recording tableau = label
    comb::Tableau p0 = comb::row_superstandard_syt(lambda);
    std::vector<int> reps(nq);
    for (int a = 0; a < nq; ++a) {
        comb::Word w = lower ? comb::inverse_rsk(p0.transposed(), m.labels[a].transposed())
                             : comb::inverse_rsk(p0, m.labels[a]);
        reps[a] = g.index(w);
    }
    m.mu.assign(nq, std::vector<int>(nq, 0));
    for (int a = 0; a < nq; ++a)
        for (int b = 0; b < nq; ++b)
            if (a != b) m.mu[a][b] = hc->kl().mu(reps[a], reps[b]);
    m.descents.resize(nq);
    for (int a = 0; a < nq; ++a) {
        auto d = lower ? comb::tableau_descents_east(m.labels[a])
                       : comb::tableau_descents_south(m.labels[a]);
        m.descents[a] = std::set<int>(d.begin(), d.end());
    }
    const RatFn two = RatFn::qint(2);
    for (int i = 1; i < r; ++i) {
        QMatrix act(nq, nq);
        for (int b = 0; b < nq; ++b) {
            if (m.descents[b].count(i)) {
                act.at(b, b) = lower ? two : -two;
            } else {
                for (int a = 0; a < nq; ++a)
                    if (a != b && m.descents[a].count(i) && m.mu[a][b] != 0)
                        act.at(a, b) = RatFn(m.mu[a][b]);
            }
        }
        m.canon_act.push_back(act);
    }
    return m;
}

ModuleAction::ModuleAction(const ModuleRealization& m, std::shared_ptr<hecke::HeckeContext> hc)
    : m_(m), hc_(std::move(hc)) {
    if (hc_->group().rank() != m_.r()) throw std::invalid_argument("ModuleAction: rank mismatch");
}

const QMatrix& ModuleAction::t_word(int perm_idx) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto it = tw_.find(perm_idx);
    if (it != tw_.end()) return it->second;
    const auto& g = hc_->group();
    QMatrix res;
    if (g.length(perm_idx) == 0) {
        res = QMatrix::identity(m_.labels.size());
    } else {
        int s = 0;
        for (int i = 1; i < g.rank(); ++i)
            if (g.has_right_descent(perm_idx, i)) {
                s = i;
                break;
            }
        int wp = g.mult_s(perm_idx, s);
        // Act(T_{w' s}) = Act(T_s) Act(T_{w'}): columns are images
        res = m_.t_gen(s) * t_word(wp);
    }
    return tw_.emplace(perm_idx, std::move(res)).first->second;
}

QMatrix ModuleAction::act(const hecke::HeckeElt& h) const {
    hecke::HeckeElt t = hc_->to_basis(h, hecke::HBasis::T);
    QMatrix res(m_.labels.size(), m_.labels.size());
    for (auto& [w, c] : t.coords) res = res + t_word(w) * c;
    return res;
}

const QMatrix& ModuleAction::idempotent_act(int i, const comb::Partition& mu) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto key = std::make_pair(i, mu);
    auto it = idem_.find(key);
    if (it != idem_.end()) return it->second;
    auto hr = project::hecke_realization(i);
    hecke::HeckeElt p = hr->central_idempotent(mu);
    // embed S_i into S_r by fixed points
    const auto& gi = hr->ctx().group();
    const auto& g = hc_->group();
    QMatrix res(m_.labels.size(), m_.labels.size());
    for (auto& [w, c] : p.coords) {
        comb::Perm small = gi.perm(w);
        comb::Perm big = comb::perm_identity(g.rank());
        for (size_t j = 0; j < small.size(); ++j) big[j] = small[j];
        res = res + t_word(g.index(big)) * c;
    }
    return idem_.emplace(key, std::move(res)).first->second;
}

std::vector<RatFn> parabolic_project(const ModuleAction& act, int q_index, int i) {
    const auto& m = act.realization();
    if (i < 1 || i > m.r()) throw std::invalid_argument("parabolic_project: J not an initial segment");
    std::vector<RatFn> v(m.labels.size(), RatFn::zero());
    v[q_index] = RatFn::one();
    if (i == 1) return v;  // H_{J_1} is trivial
    comb::Partition mu = m.labels[q_index].restricted(i).shape();
    return act.idempotent_act(i, mu) * v;
}

SpechtTransition seminormal_transition(const comb::Partition& lambda, bool lower) {
    ModuleRealization m = canonical_module(lambda, lower);
    int r = m.r();
    ModuleAction act(m, hecke::hecke_context(r));
    SpechtTransition t;
    t.lambda = lambda;
    t.which = lower ? 't' : 'T';
    t.labels = m.labels;
    const int nq = (int)m.labels.size();
    t.m = QMatrix(nq, nq);
    for (int q = 0; q < nq; ++q) {
        std::vector<RatFn> v(nq, RatFn::zero());
        v[q] = RatFn::one();
        for (int i = r - 1; i >= 2; --i) {
            comb::Partition mu = m.labels[q].restricted(i).shape();
            v = act.idempotent_act(i, mu) * v;
        }
        t.m.set_col(q, v);
    }
    // unitriangularity in last-letter order: lower-unitriangular for the
    // upper kind, upper-unitriangular for the lower kind
    for (int q = 0; q < nq; ++q) {
        if (!t.m.at(q, q).is_one())
            throw std::logic_error("seminormal_transition: diagonal not one");
        for (int p = 0; p < nq; ++p) {
            bool must_vanish = lower ? p > q : p < q;
            if (must_vanish && !t.m.at(p, q).is_zero())
                throw std::logic_error("seminormal_transition: triangularity violated");
        }
    }
    return t;
}

SMatrixResult s_matrix(const comb::Partition& lambda) {
    SMatrixResult res;
    res.t = seminormal_transition(lambda, false);
    res.tp = seminormal_transition(lambda, true);
    ModuleRealization mu_real = canonical_module(lambda, false);
    int r = mu_real.r();
    const int nq = (int)mu_real.labels.size();
    QMatrix tinv = inverse(res.t.m);

    // A^s = T^-1 M^s T, with M^s the action of C_s on the upper canonical basis
    std::vector<QMatrix> a_s;
    for (int i = 1; i < r; ++i) a_s.push_back(tinv * mu_real.canon_act[i - 1] * res.t.m);

    // diagonal ratios along initial dual Knuth edges; remaining consistent
    // relations are asserted afterwards
    auto edges = comb::dual_knuth_graph(lambda);
    std::vector<RatFn> d(nq);
    std::vector<bool> have(nq, false);
    d[0] = RatFn::one();
    have[0] = true;
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto& e : edges) {
            if (!e.initial || have[e.a] == have[e.b]) continue;
            for (int i = 1; i < r && !(have[e.a] && have[e.b]); ++i) {
                const QMatrix& a = a_s[i - 1];
                if (a.at(e.a, e.b).is_zero() || a.at(e.b, e.a).is_zero()) continue;
                // d[x]/d[y] = A^s(x,y)/A^s(y,x), pinned by the printed tables
                if (have[e.a]) {
                    d[e.b] = d[e.a] * a.at(e.b, e.a) / a.at(e.a, e.b);
                    have[e.b] = true;
                } else {
                    d[e.a] = d[e.b] * a.at(e.a, e.b) / a.at(e.b, e.a);
                    have[e.a] = true;
                }
                progress = true;
            }
        }
    }
    for (int q = 0; q < nq; ++q)
        if (!have[q]) throw std::logic_error("s_matrix: initial dual Knuth edges do not span");
    // consistency of every ratio relation D^-1 A^s D = (A^s)^T
    for (int i = 1; i < r; ++i) {
        const QMatrix& a = a_s[i - 1];
        for (int x = 0; x < nq; ++x)
            for (int y = 0; y < nq; ++y) {
                if (a.at(x, y).is_zero() != a.at(y, x).is_zero())
                    throw std::logic_error("s_matrix: asymmetric seminormal action support");
                if (!a.at(x, y).is_zero() && !(d[x] * a.at(y, x) == d[y] * a.at(x, y)))
                    throw std::logic_error("s_matrix: inconsistent diagonal ratio system");
            }
    }
    // ratios approach 1 at u = 0 along the anchored normalization
    for (int q = 0; q < nq; ++q) {
        auto v = d[q].eval_at_zero();
        if (!v || *v != 1) throw std::logic_error("s_matrix: diagonal not 1 at u = 0");
    }
    res.d.lambda = lambda;
    res.d.which = 'D';
    res.d.labels = mu_real.labels;
    res.d.m = QMatrix(nq, nq);
    for (int q = 0; q < nq; ++q) res.d.m.at(q, q) = d[q];

    res.s.lambda = lambda;
    res.s.which = 'S';
    res.s.labels = mu_real.labels;
    res.s.m = res.t.m * res.d.m * inverse(res.tp.m);
    // S expresses the lower canonical basis in the upper one; the scale is
    // already pinned by d[anchor] = 1, identity at 0 and infinity follows.
    // Intertwiner check: S Act_lower(T_s) = Act_upper(T_s) S.
    {
        specht::ModuleRealization low = canonical_module(lambda, true);
        for (int i = 1; i < r; ++i)
            if (!(res.s.m * low.t_gen(i) == mu_real.t_gen(i) * res.s.m))
                throw std::logic_error("s_matrix: transition fails to intertwine the actions");
    }
    for (int x = 0; x < nq; ++x)
        for (int y = 0; y < nq; ++y) {
            const RatFn& v = res.s.m.at(x, y);
            if (!v.is_bar_invariant()) throw std::logic_error("s_matrix: entry not bar-invariant");
            auto z = v.eval_at_zero();
            if (!z || *z != (x == y ? 1 : 0))
                throw std::logic_error("s_matrix: not the identity at u = 0");
        }
    return res;
}

RatFn specht_form(const std::vector<RatFn>& x_upper, const std::vector<RatFn>& y_lower) {
    if (x_upper.size() != y_lower.size()) throw std::invalid_argument("specht_form: size mismatch");
    RatFn v;
    for (size_t i = 0; i < x_upper.size(); ++i) v += x_upper[i] * y_lower[i];
    return v;
}

}  // namespace specht
}  // namespace klsw
