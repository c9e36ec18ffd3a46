#include "klsw/project.hpp"

#include "klsw/parallel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace klsw {
namespace project {

namespace {

// Expand an ambient-coordinate vector in the given unitriangular columns by
// back-substitution; returns expansion coefficients.
std::map<int, Laurent> backsubst(std::map<int, Laurent> v,
                                 const std::vector<std::map<int, Laurent>>& cols) {
    std::map<int, Laurent> out;
    while (!v.empty()) {
        auto top = std::prev(v.end());
        int t = top->first;
        Laurent c = top->second;
        out[t] = c;
        for (const auto& [x, f] : cols[t]) {
            auto it = v.find(x);
            if (it == v.end()) {
                Laurent val = c * f;
                if (!val.is_zero()) v[x] = -val;
            } else {
                it->second -= c * f;
                if (it->second.is_zero()) v.erase(it);
            }
        }
        if (v.count(t)) throw std::logic_error("backsubst: diagonal not unit");
    }
    return out;
}

bool strictly_dominated(const comb::Partition& a, const comb::Partition& b) {
    return a != b && comb::dominance_leq(a, b);
}

}  // namespace

CrossExpansion cross_expansion(const CellData& data) {
    CrossExpansion x;
    const size_t n = data.c_cols.size();
    x.f_cols.resize(n);
    x.g_cols.resize(n);
    for (size_t i = 0; i < n; ++i) {
        x.f_cols[i] = backsubst(data.c_cols[i], data.cp_cols);
        x.g_cols[i] = backsubst(data.cp_cols[i], data.c_cols);
    }
    return x;
}

ProjectedBasis projected_basis(const CellData& data, const CrossExpansion& cross, bool lower) {
    const int n = (int)data.sh.size();
    ProjectedBasis out;
    out.lower = lower;
    out.cols.resize(n);
    // shape of the column index and of the constraint rows for each kind:
    //   upper: corrections over sh(j) strictly below sh(w); constraints say
    //          the result, expanded in c', vanishes where shd(l) is not >=
    //   lower: mirror with the roles swapped
    auto col_shape = [&](int i) -> const comb::Partition& { return lower ? data.shd[i] : data.sh[i]; };
    auto row_shape = [&](int i) -> const comb::Partition& { return lower ? data.sh[i] : data.shd[i]; };
    auto corr_ok = [&](const comb::Partition& s, const comb::Partition& lam) {
        return lower ? strictly_dominated(lam, s) : strictly_dominated(s, lam);
    };
    const auto& expn = lower ? cross.g_cols : cross.f_cols;

    std::set<comb::Partition> shapes(data.sh.begin(), data.sh.end());
    for (const auto& lam : shapes) {
        std::vector<int> cols_idx, rows_idx, targets;
        for (int i = 0; i < n; ++i) {
            if (corr_ok(col_shape(i), lam)) cols_idx.push_back(i);
            if (corr_ok(row_shape(i), lam)) rows_idx.push_back(i);
            if (col_shape(i) == lam) targets.push_back(i);
        }
        if (cols_idx.size() != rows_idx.size())
            throw std::logic_error("projected_basis: filtration counts disagree");
        const size_t m = cols_idx.size();
        if (m == 0) {
            for (int w : targets) out.cols[w] = {{w, RatFn::one()}};
            continue;
        }
        QMatrix a(m, m), b(m, targets.size());
        for (size_t cj = 0; cj < m; ++cj) {
            const auto& col = expn[cols_idx[cj]];
            for (size_t ri = 0; ri < m; ++ri) {
                auto it = col.find(rows_idx[ri]);
                if (it != col.end()) a.at(ri, cj) = RatFn(it->second);
            }
        }
        for (size_t wj = 0; wj < targets.size(); ++wj) {
            const auto& col = expn[targets[wj]];
            for (size_t ri = 0; ri < m; ++ri) {
                auto it = col.find(rows_idx[ri]);
                if (it != col.end()) b.at(ri, wj) = -RatFn(it->second);
            }
        }
        QMatrix sol = solve_many(a, b);
        for (size_t wj = 0; wj < targets.size(); ++wj) {
            int w = targets[wj];
            std::map<int, RatFn> col{{w, RatFn::one()}};
            for (size_t cj = 0; cj < m; ++cj) {
                const RatFn& v = sol.at(cj, wj);
                if (!v.is_zero()) col[cols_idx[cj]] = v;
            }
            // residual check: the projected element must lie in the opposite
            // filtration span, i.e. its cross expansion vanishes off it
            std::map<int, Laurent> amb;  // accumulate in expansion coords via RatFn
            std::map<int, RatFn> ex;
            for (auto& [j, cv] : col)
                for (const auto& [l, f] : expn[j]) {
                    auto it = ex.emplace(l, RatFn::zero()).first;
                    it->second += cv * RatFn(f);
                }
            for (auto& [l, v] : ex) {
                if (v.is_zero()) continue;
                bool allowed = lower ? comb::dominance_leq(row_shape(l), lam)
                                     : comb::dominance_leq(lam, row_shape(l));
                if (!allowed)
                    throw std::logic_error("projected_basis: residual outside filtration");
            }
            out.cols[w] = std::move(col);
        }
    }
    return out;
}

HeckeRealization::HeckeRealization(std::shared_ptr<hecke::HeckeContext> hc) : hc_(std::move(hc)) {
    const auto& g = hc_->group();
    order_ = g.by_length();
    pos_.resize(order_.size());
    for (size_t p = 0; p < order_.size(); ++p) pos_[order_[p]] = (int)p;
}

const CellData& HeckeRealization::data() const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    if (data_done_) return data_;
    const auto& g = hc_->group();
    const int n = size();
    data_.sh.resize(n);
    data_.shd.resize(n);
    data_.c_cols.resize(n);
    data_.cp_cols.resize(n);
    hc_->kl().fill_all();
    for (int p = 0; p < n; ++p) {
        int w = order_[p];
        data_.sh[p] = g.shape(w);
        data_.shd[p] = g.shape_dagger(w);
        // ambient basis: v_x = bar(T)_x; c'_w = sum bar(P'_{x,w}) v_x,
        // c_w = sum (-1)^(l(w)-l(x)) P'_{x,w} v_x
        for (const auto& [x, pp] : hc_->kl().column(w)) {
            data_.cp_cols[p][pos_[x]] = pp.bar();
            Laurent v = pp;
            if ((g.length(w) - g.length(x)) % 2) v = -v;
            data_.c_cols[p][pos_[x]] = v;
        }
    }
    data_done_ = true;
    return data_;
}

const CrossExpansion& HeckeRealization::cross() const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    if (!cross_done_) {
        cross_ = cross_expansion(data());
        cross_done_ = true;
    }
    return cross_;
}

const ProjectedBasis& HeckeRealization::projected(bool lower) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    if (!proj_done_[lower]) {
        proj_[lower] = projected_basis(data(), cross(), lower);
        proj_done_[lower] = true;
    }
    return proj_[lower];
}

hecke::HeckeElt HeckeRealization::projected_elt(int perm_idx, bool lower) const {
    const auto& pb = projected(lower);
    hecke::HeckeElt e;
    e.rank = hc_->group().rank();
    e.basis = lower ? hecke::HBasis::Cp : hecke::HBasis::C;
    for (auto& [p, c] : pb.cols[pos_[perm_idx]]) e.coords[order_[p]] = c;
    return e;
}

const std::map<comb::Partition, hecke::HeckeElt>& HeckeRealization::all_idempotents() const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    if (idem_done_) return idem_;
    const auto& g = hc_->group();
    const auto& pb = projected(false);
    // expand c_(identity) = unit vector at position 0 in the projected upper
    // basis by block back-substitution over shapes (descending dominance)
    std::map<int, RatFn> residual{{pos_[g.id_index()], RatFn::one()}};
    std::map<int, RatFn> xi;
    auto shapes = comb::partitions_of(g.rank());  // descending lex, top first
    const auto& d = data();
    for (const auto& lam : shapes) {
        std::vector<std::pair<int, RatFn>> found;
        for (auto& [p, c] : residual)
            if (d.sh[p] == lam && !c.is_zero()) found.push_back({p, c});
        for (auto& [p, c] : found) {
            xi[p] = c;
            for (auto& [q, f] : pb.cols[p]) {
                auto it = residual.emplace(q, RatFn::zero()).first;
                it->second -= c * f;
                if (it->second.is_zero()) residual.erase(it);
            }
        }
    }
    for (auto& [p, c] : residual)
        if (!c.is_zero()) throw std::logic_error("idempotents: expansion left a residual");
    // p_lambda = sum over sh(j) = lambda of xi_j tilde-c_j, pushed back to
    // the T basis through v_x = bar(T_x)
    for (const auto& lam : shapes) {
        std::map<int, RatFn> vcoords;  // ambient (position) coords
        for (auto& [p, c] : xi) {
            if (d.sh[p] != lam) continue;
            for (auto& [q, f] : pb.cols[p]) {  // tilde-c in c coords
                for (const auto& [x, cf] : d.c_cols[q]) {
                    auto it = vcoords.emplace(x, RatFn::zero()).first;
                    it->second += c * f * RatFn(cf);
                }
            }
        }
        hecke::HeckeElt e;
        e.rank = g.rank();
        e.basis = hecke::HBasis::T;
        for (auto& [p, c] : vcoords) {
            if (c.is_zero()) continue;
            for (const auto& [t, bf] : hc_->bar_t(order_[p])) e.add(t, c * RatFn(bf));
        }
        idem_[lam] = std::move(e);
    }
    idem_done_ = true;
    return idem_;
}

hecke::HeckeElt HeckeRealization::central_idempotent(const comb::Partition& lambda) const {
    const auto& all = all_idempotents();
    auto it = all.find(lambda);
    if (it == all.end()) throw std::invalid_argument("central_idempotent: shape of wrong size");
    return it->second;
}

namespace {
std::map<int, std::shared_ptr<HeckeRealization>>& hr_cache() {
    static std::map<int, std::shared_ptr<HeckeRealization>> c;
    return c;
}
std::mutex& hr_cache_mu() {
    static std::mutex m;
    return m;
}
}  // namespace

std::shared_ptr<HeckeRealization> hecke_realization(int r) {
    std::lock_guard<std::mutex> lk(hr_cache_mu());
    auto& c = hr_cache();
    auto it = c.find(r);
    if (it != c.end()) return it->second;
    auto hr = std::make_shared<HeckeRealization>(hecke::hecke_context(r));
    c[r] = hr;
    return hr;
}

LabeledMatrix transition_ttilde(int r, bool lower) {
    auto hr = hecke_realization(r);
    const auto& pb = hr->projected(lower);
    const int n = hr->size();
    LabeledMatrix lm;
    lm.m = QMatrix((size_t)n, (size_t)n);
    for (int p = 0; p < n; ++p) {
        lm.row_labels.push_back(comb::perm_to_string(hr->ctx().group().perm(hr->perm_at(p))));
        lm.col_labels = lm.row_labels;
    }
    for (int j = 0; j < n; ++j)
        for (auto& [i, c] : pb.cols[j]) lm.m.at(i, j) = c;
    return lm;
}

CellData tensor_cell_data(const tensor::WSpace& ws) {
    CellData d;
    const int n = ws.size();
    d.sh.resize(n);
    d.shd.resize(n);
    d.c_cols = ws.canonical_cols(false);
    d.cp_cols = ws.canonical_cols(true);
    for (int i = 0; i < n; ++i) {
        d.sh[i] = ws.sh(i);
        d.shd[i] = ws.sh_dag(i);
    }
    return d;
}

TensorProjection::PerSpace& TensorProjection::entry(const std::vector<int>& content) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    PerSpace& ps = per_[content];
    if (!ps.data_done) {
        ps.data = tensor_cell_data(ts_->space(content));
        ps.data_done = true;
    }
    if (!ps.cross_done) {
        ps.cross = cross_expansion(ps.data);
        ps.cross_done = true;
    }
    return ps;
}

const ProjectedBasis& TensorProjection::projected(const std::vector<int>& content,
                                                  bool lower) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    PerSpace& ps = entry(content);
    if (!ps.proj_done[lower]) {
        ps.proj[lower] = projected_basis(ps.data, ps.cross, lower);
        ps.proj_done[lower] = true;
    }
    return ps.proj[lower];
}

tensor::TensorElt TensorProjection::project_canonical(const comb::Word& k, bool lower) const {
    auto content = comb::word_content(k, ts_->n());
    const tensor::WSpace& ws = ts_->space(content);
    const auto& pb = projected(content, lower);
    tensor::TensorElt out;
    out.n = ts_->n();
    out.r = ts_->r();
    for (auto& [j, c] : pb.cols[ws.index(k)]) {
        tensor::TensorElt e = ts_->canonical_elt(ws.words[j], lower);
        out += e * c;
    }
    return out;
}

tensor::TensorElt TensorProjection::isotypic_project(const tensor::TensorElt& x,
                                                     const comb::Partition& lambda) const {
    if (x.basis != tensor::TBasis::Monomial)
        throw std::invalid_argument("isotypic_project: monomial basis required");
    tensor::TensorElt out;
    out.n = ts_->n();
    out.r = ts_->r();
    // per weight space: expand in the projected upper basis, keep lambda part
    std::map<std::vector<int>, tensor::TensorElt> parts;
    for (auto& [k, c] : x.coords) {
        auto content = comb::word_content(k, ts_->n());
        auto& p = parts[content];
        p.n = x.n;
        p.r = x.r;
        p.add(k, c);
    }
    for (auto& [content, xw] : parts) {
        const tensor::WSpace& ws = ts_->space(content);
        const auto& pb = projected(content, false);
        // coordinates of xw in the upper canonical basis
        tensor::TensorElt cexp = ts_->expand_in_canonical(xw, false);
        std::map<int, RatFn> residual;
        for (auto& [k, c] : cexp.coords) residual[ws.index(k)] = c;
        auto shapes = comb::partitions_of(ts_->r(), ts_->n());
        std::map<int, RatFn> xi;
        for (const auto& lam : shapes) {
            std::vector<std::pair<int, RatFn>> found;
            for (auto& [p, c] : residual)
                if (ws.sh(p) == lam && !c.is_zero()) found.push_back({p, c});
            for (auto& [p, c] : found) {
                xi[p] = c;
                for (auto& [q, f] : pb.cols[p]) {
                    auto it = residual.emplace(q, RatFn::zero()).first;
                    it->second -= c * f;
                    if (it->second.is_zero()) residual.erase(it);
                }
            }
        }
        for (auto& [p, c] : residual)
            if (!c.is_zero()) throw std::logic_error("isotypic_project: expansion residual");
        for (auto& [p, c] : xi) {
            if (!(ws.sh(p) == lambda)) continue;
            for (auto& [q, f] : pb.cols[p]) {
                tensor::TensorElt e = ts_->canonical_elt(ws.words[q], false);
                out += e * (c * f);
            }
        }
    }
    return out;
}

std::map<comb::Partition, std::vector<tensor::TensorElt>> TensorProjection::isotypic_bases(
    const std::vector<int>& content) const {
    const tensor::WSpace& ws = ts_->space(content);
    const auto& pb = projected(content, false);
    std::map<comb::Partition, std::vector<tensor::TensorElt>> out;
    size_t total = 0;
    for (int i = 0; i < ws.size(); ++i) {
        tensor::TensorElt e;
        e.n = ts_->n();
        e.r = ts_->r();
        for (auto& [q, f] : pb.cols[i]) e += ts_->canonical_elt(ws.words[q], false) * f;
        out[ws.sh(i)].push_back(e);
        ++total;
    }
    if (total != (size_t)ws.size())
        throw std::logic_error("isotypic_bases: dimensions do not add up");
    return out;
}

}  // namespace project
}  // namespace klsw
