#pragma once

#include "klsw/comb.hpp"
#include "klsw/hecke.hpp"
#include "klsw/laurent.hpp"
#include "klsw/matrix.hpp"
#include "klsw/ratfn.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace klsw {
namespace tensor {

enum class TBasis { Monomial, Upper, Lower };

/// Finitely supported element of V^(x)r over the alphabet [n].
struct TensorElt {
    int n = 0, r = 0;
    TBasis basis = TBasis::Monomial;
    std::map<comb::Word, RatFn> coords;

    bool is_zero() const { return coords.empty(); }
    void add(const comb::Word& k, const RatFn& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = coords.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coords.erase(it);
        }
    }
    TensorElt& operator+=(const TensorElt& o);
    TensorElt& operator-=(const TensorElt& o);
    TensorElt operator*(const RatFn& c) const;
    friend bool operator==(const TensorElt&, const TensorElt&) = default;
    /// True when all coordinates share one content (weight space).
    bool single_weight() const;
};

/// One weight space T^zeta: words of a fixed content, ordered by
/// (length of d(k), lex) so that the bar matrix and both canonical bases
/// are unitriangular with unit diagonal.
class WSpace {
public:
    WSpace(int n, int r, std::vector<int> content);

    int n, r;
    std::vector<int> content;
    std::vector<comb::Word> words;
    int index(const comb::Word& k) const;
    int size() const { return (int)words.size(); }
    const comb::Perm& dk(int i) const { return dk_[i]; }
    const comb::Perm& Dk(int i) const { return Dk_[i]; }
    const comb::Partition& sh(int i) const { return sh_[i]; }       // sh(P(k))
    const comb::Partition& sh_dag(int i) const { return shd_[i]; }  // sh(P(k-dagger))
    const comb::Tableau& p_tab(int i) const { return p_[i]; }
    const comb::Tableau& q_tab(int i) const { return q_[i]; }

    /// bar(v_j) in monomial coordinates (integral, unitriangular).
    const std::vector<std::map<int, Laurent>>& bar_cols() const;
    /// Canonical basis columns in monomial coordinates.
    const std::vector<std::map<int, Laurent>>& canonical_cols(bool lower) const;
    /// Inverse of the matrix whose m-th column is bar(v_{(words[m])-dagger});
    /// pairs the space with itself under the bilinear form.
    const QMatrix& dual_matrix_inverse() const;

private:
    std::map<comb::Word, int> index_;
    std::vector<comb::Perm> dk_, Dk_;
    std::vector<comb::Partition> sh_, shd_;
    std::vector<comb::Tableau> p_, q_;
    mutable std::vector<std::map<int, Laurent>> bar_, c_, cp_;
    mutable QMatrix dual_inv_;
    mutable bool bar_done_ = false, c_done_ = false, cp_done_ = false, dual_done_ = false;
    mutable std::recursive_mutex mu_;
    std::map<int, Laurent> bar_monomial(const comb::Word& k) const;
};

/// Context for V^(x)r with its commuting actions; owns the weight spaces.
class TensorSpace {
public:
    TensorSpace(int n, int r) : n_(n), r_(r) {}

    int n() const { return n_; }
    int r() const { return r_; }

    const WSpace& space(const std::vector<int>& content) const;
    const WSpace& space_of(const comb::Word& k) const;

    TensorElt monomial(const comb::Word& k) const;

    /// Right action of T_i / T_i^-1 on monomial coordinates.
    TensorElt act_ti(const TensorElt& x, int i) const;
    TensorElt act_ti_inv(const TensorElt& x, int i) const;
    /// Right action of an arbitrary Hecke element (converted to the T basis).
    TensorElt hecke_act(const TensorElt& x, const hecke::HeckeElt& h,
                        const hecke::HeckeContext& hc) const;

    /// Left U_q(gl_n) action on monomial coordinates.
    TensorElt uq_F(int i, const TensorElt& x) const;
    TensorElt uq_E(int i, const TensorElt& x) const;
    TensorElt uq_K(int i, const TensorElt& x, int power = 1) const;
    TensorElt uq_qh(const std::vector<int>& h, const TensorElt& x) const;

    /// bar-semilinear involution, computed through the Hecke route
    /// bar(v_k) = v_sort(k) T_{d(k)}.
    TensorElt bar(const TensorElt& x) const;

    /// c_k (upper) / c'_k (lower) expanded in monomial coordinates.
    TensorElt canonical_elt(const comb::Word& k, bool lower) const;
    /// Expand a monomial-coordinate element in a canonical basis.
    TensorElt expand_in_canonical(const TensorElt& x, bool lower) const;
    /// Inverse: canonical coordinates to monomial coordinates.
    TensorElt canonical_to_monomial(const TensorElt& x) const;

    /// Symmetric bilinear form with (v_k, bar(v_{l-dagger})) = delta_{kl}.
    RatFn bilinear_form(const TensorElt& x, const TensorElt& y) const;

private:
    int n_, r_;
    mutable std::map<std::vector<int>, std::unique_ptr<WSpace>> spaces_;
    mutable std::mutex mu_;
};

/// H_r-cells (keyed by insertion tableau) and U-cells (keyed by recording
/// tableau) of the chosen canonical basis; lower uses the reversed word.
std::map<comb::Tableau, std::vector<comb::Word>> hecke_cells(int n, int r, bool lower);
std::map<comb::Tableau, std::vector<comb::Word>> u_cells(int n, int r, bool lower);

std::string to_string(const TensorElt& x, bool pretty = false);

}  // namespace tensor
}  // namespace klsw
