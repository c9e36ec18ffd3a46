#pragma once

#include "klsw/comb.hpp"
#include "klsw/hecke.hpp"
#include "klsw/matrix.hpp"
#include "klsw/project.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace klsw {
namespace specht {

/// The Specht module M_lambda realized on the upper (C_Q) or lower (C'_Q)
/// canonical basis: SYT labels in last-letter order, generator action
/// matrices built from mu values and tableau descent sets.
struct ModuleRealization {
    comb::Partition lambda;
    bool lower = false;
    std::vector<comb::Tableau> labels;            // syt_sorted(lambda)
    std::vector<std::set<int>> descents;          // R(C_Q) or R(C'_Q)
    std::vector<std::vector<int>> mu;             // mu[a][b] = mu(Q_a, Q_b)
    std::vector<QMatrix> canon_act;               // C_s (upper) / C'_s (lower), s_1..s_{r-1}
    int r() const;
    int index(const comb::Tableau& q) const;
    /// Action matrix of T_{s_i} in this basis.
    QMatrix t_gen(int i) const;
};

ModuleRealization canonical_module(const comb::Partition& lambda, bool lower);

/// Cached matrices for acting by arbitrary Hecke elements on a realization.
class ModuleAction {
public:
    ModuleAction(const ModuleRealization& m, std::shared_ptr<hecke::HeckeContext> hc);

    const ModuleRealization& realization() const { return m_; }
    /// Matrix of right multiplication by T_w (memoized).
    const QMatrix& t_word(int perm_idx) const;
    /// Matrix of right multiplication by any element.
    QMatrix act(const hecke::HeckeElt& h) const;
    /// Matrix of the rank-i central idempotent p_mu embedded in H_r (memoized).
    const QMatrix& idempotent_act(int i, const comb::Partition& mu) const;

    std::shared_ptr<hecke::HeckeContext> ctx() const { return hc_; }

private:
    ModuleRealization m_;
    std::shared_ptr<hecke::HeckeContext> hc_;
    mutable std::map<int, QMatrix> tw_;
    mutable std::map<std::pair<int, comb::Partition>, QMatrix> idem_;
    mutable std::recursive_mutex mu_;
};

/// Projection of the basis vector of Q onto its H_J-isotypic component for
/// the initial segment J = {s_1, ..., s_{i-1}}. Throws for i outside 1..r.
std::vector<RatFn> parabolic_project(const ModuleAction& act, int q_index, int i);

struct SpechtTransition {
    comb::Partition lambda;
    char which;  // 'T', 't' (T'), 'D', 'S'
    std::vector<comb::Tableau> labels;
    QMatrix m;
};

/// T(lambda) (upper) or T'(lambda) (lower): the seminormal basis expressed
/// in the corresponding canonical basis.
SpechtTransition seminormal_transition(const comb::Partition& lambda, bool lower);

struct SMatrixResult {
    SpechtTransition s;       // u0-normalized: identity at u = 0 and infinity
    SpechtTransition d;       // diagonal, anchored at 1 on the first label
    SpechtTransition t, tp;   // the two seminormal transitions used
};
SMatrixResult s_matrix(const comb::Partition& lambda);

/// <x, y> in mixed coordinates: x over C_Q, y over C'_Q; <C_Q, C'_Q'> = delta.
RatFn specht_form(const std::vector<RatFn>& x_upper, const std::vector<RatFn>& y_lower);

}  // namespace specht
}  // namespace klsw
