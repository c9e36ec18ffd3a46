#pragma once

#include "klsw/comb.hpp"
#include "klsw/hecke.hpp"
#include "klsw/matrix.hpp"
#include "klsw/tensor.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace klsw {
namespace project {

/// A based module realization on which projection to isotypic components is
/// computed from the two cell filtrations: an ordered basis, shapes of each
/// index for the upper and lower filtration, and integral unitriangular
/// columns of both canonical bases in a shared ambient basis.
struct CellData {
    std::vector<comb::Partition> sh;    // upper shape of index i: sh(k)
    std::vector<comb::Partition> shd;   // lower shape of index i: sh(k-dagger)
    std::vector<std::map<int, Laurent>> c_cols;   // c_i in ambient coords
    std::vector<std::map<int, Laurent>> cp_cols;  // c'_i in ambient coords
};

/// Expansion coefficients of each c_i in the c' basis (f) and of each c'_i
/// in the c basis (g); both unitriangular over A.
struct CrossExpansion {
    std::vector<std::map<int, Laurent>> f_cols;  // c in c'
    std::vector<std::map<int, Laurent>> g_cols;  // c' in c
};
CrossExpansion cross_expansion(const CellData& data);

/// Projected basis columns: for the upper kind, column i holds the
/// coefficients of tilde-c_i in the c basis (unit diagonal, support on
/// strictly dominance-smaller upper shapes); for the lower kind, in the c'
/// basis (support on strictly larger lower shapes).
struct ProjectedBasis {
    bool lower = false;
    std::vector<std::map<int, RatFn>> cols;
};
ProjectedBasis projected_basis(const CellData& data, const CrossExpansion& cross, bool lower);

/// The Hecke algebra realized as the content-(1,...,1) weight space with
/// n = r: index order is (length, lex) on permutations, canonical columns
/// come straight from the Kazhdan-Lusztig table.
class HeckeRealization {
public:
    explicit HeckeRealization(std::shared_ptr<hecke::HeckeContext> hc);

    const hecke::HeckeContext& ctx() const { return *hc_; }
    int size() const { return (int)order_.size(); }
    /// Position of a permutation index in the realization order and back.
    int pos_of(int perm_idx) const { return pos_[perm_idx]; }
    int perm_at(int pos) const { return order_[pos]; }

    const CellData& data() const;
    const CrossExpansion& cross() const;
    const ProjectedBasis& projected(bool lower) const;

    /// tilde-C_w in the C basis (upper) / tilde-C'_w in the C' basis (lower).
    hecke::HeckeElt projected_elt(int perm_idx, bool lower) const;

    /// Minimal central idempotent p_lambda in the T basis.
    hecke::HeckeElt central_idempotent(const comb::Partition& lambda) const;
    /// All of them, keyed by shape (computed in one pass).
    const std::map<comb::Partition, hecke::HeckeElt>& all_idempotents() const;

private:
    std::shared_ptr<hecke::HeckeContext> hc_;
    std::vector<int> order_, pos_;
    mutable CellData data_;
    mutable CrossExpansion cross_;
    mutable ProjectedBasis proj_[2];
    mutable std::map<comb::Partition, hecke::HeckeElt> idem_;
    mutable bool data_done_ = false, cross_done_ = false, proj_done_[2] = {false, false},
                 idem_done_ = false;
    mutable std::recursive_mutex mu_;
};

std::shared_ptr<HeckeRealization> hecke_realization(int r);  // process cache

/// Labeled transition matrix over Q(u).
struct LabeledMatrix {
    std::vector<std::string> row_labels, col_labels;
    QMatrix m;
};

/// Full transition matrix expressing the projected canonical basis in the
/// canonical basis of H_r; labels are one-line permutations ordered by
/// (length, lex).
LabeledMatrix transition_ttilde(int r, bool lower);

/// CellData for one tensor weight space.
CellData tensor_cell_data(const tensor::WSpace& ws);

/// Per-weight-space projection machinery for V^(x)r, cached per content.
class TensorProjection {
public:
    explicit TensorProjection(std::shared_ptr<tensor::TensorSpace> ts) : ts_(std::move(ts)) {}

    tensor::TensorSpace& space() const { return *ts_; }

    /// tilde-c_k (upper) / tilde-c'_k (lower) in monomial coordinates.
    tensor::TensorElt project_canonical(const comb::Word& k, bool lower) const;
    /// Component of x in the V_lambda x M_lambda isotypic piece.
    tensor::TensorElt isotypic_project(const tensor::TensorElt& x,
                                       const comb::Partition& lambda) const;
    /// Per weight space: monomial-coordinate bases of each isotypic piece.
    std::map<comb::Partition, std::vector<tensor::TensorElt>> isotypic_bases(
        const std::vector<int>& content) const;

    const ProjectedBasis& projected(const std::vector<int>& content, bool lower) const;

private:
    std::shared_ptr<tensor::TensorSpace> ts_;
    struct PerSpace {
        CellData data;
        CrossExpansion cross;
        ProjectedBasis proj[2];
        bool data_done = false, cross_done = false, proj_done[2] = {false, false};
    };
    mutable std::map<std::vector<int>, PerSpace> per_;
    mutable std::recursive_mutex mu_;
    PerSpace& entry(const std::vector<int>& content) const;
};

}  // namespace project
}  // namespace klsw
