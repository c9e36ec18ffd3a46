#pragma once

#include "klsw/comb.hpp"
#include "klsw/laurent.hpp"
#include "klsw/ratfn.hpp"

#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace klsw {
namespace hecke {

/// Enumerated symmetric group S_r with generator multiplication tables and
/// RSK labels. Elements are indexed by lexicographic rank of the one-line
/// notation; build once per rank and share read-only.
class SymGroup {
public:
    explicit SymGroup(int r);

    int rank() const { return r_; }
    int size() const { return (int)perms_.size(); }
    const comb::Perm& perm(int idx) const { return perms_[idx]; }
    int index(const comb::Perm& w) const;
    int id_index() const { return 0; }
    int w0_index() const { return size() - 1; }
    int length(int idx) const { return length_[idx]; }
    int inverse(int idx) const { return inverse_[idx]; }
    /// Index of w * s_i (right multiplication), 1 <= i <= r-1.
    int mult_s(int idx, int i) const { return mult_s_[(i - 1) * size() + idx]; }
    bool has_right_descent(int idx, int i) const {
        const auto& w = perms_[idx];
        return w[i - 1] > w[i];
    }
    const comb::Tableau& p_tab(int idx) const { return p_[idx]; }
    const comb::Tableau& q_tab(int idx) const { return q_[idx]; }
    const comb::Partition& shape(int idx) const { return shape_[idx]; }
    /// Shape of the reversed one-line word (the conjugate partition).
    const comb::Partition& shape_dagger(int idx) const { return shape_dag_[idx]; }
    /// Indices ordered by (length, lex): a linear extension of Bruhat order.
    const std::vector<int>& by_length() const { return by_length_; }

private:
    int r_;
    std::vector<comb::Perm> perms_;
    std::map<comb::Perm, int> index_;
    std::vector<int> length_, inverse_, mult_s_, by_length_;
    std::vector<comb::Tableau> p_, q_;
    std::vector<comb::Partition> shape_, shape_dag_;
};

std::shared_ptr<const SymGroup> sym_group(int r);  // process-wide cache

/// Kazhdan-Lusztig data P'_{x,w} (expansion of the lower canonical basis in
/// the standard basis) and the edge weights mu(x, w). Columns are computed
/// on demand by the length recursion and memoized; access is serialized
/// internally, results are deterministic.
class KLTable {
public:
    explicit KLTable(std::shared_ptr<const SymGroup> g) : g_(std::move(g)) {
        cols_.resize(g_->size());
        done_.assign(g_->size(), false);
    }

    const SymGroup& group() const { return *g_; }

    /// P'_{x,w}; zero unless x <= w in Bruhat order.
    Laurent pprime(int x, int w) const;
    /// Coefficient of u^-1 in P' of the Bruhat-comparable orientation.
    int mu(int x, int w) const;
    /// Full column of w: all x with nonzero P'_{x,w}.
    const std::map<int, Laurent>& column(int w) const;

    void fill_all();

    /// Versioned text cache keyed by rank; merge-loads sections of matching rank.
    void save(std::ostream& os) const;
    bool load(std::istream& is);

private:
    std::shared_ptr<const SymGroup> g_;
    mutable std::vector<std::map<int, Laurent>> cols_;
    mutable std::vector<bool> done_;
    mutable std::recursive_mutex mu_;
    void ensure(int w) const;
};

enum class HBasis { T, C, Cp };

/// Finitely supported element of H_r in a declared basis.
struct HeckeElt {
    int rank = 0;
    HBasis basis = HBasis::T;
    std::map<int, RatFn> coords;  // by permutation index in SymGroup(rank)

    bool is_zero() const { return coords.empty(); }
    void add(int idx, const RatFn& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = coords.emplace(idx, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coords.erase(it);
        }
    }
    HeckeElt& operator+=(const HeckeElt& o);
    HeckeElt& operator-=(const HeckeElt& o);
    HeckeElt operator*(const RatFn& c) const;
    friend bool operator==(const HeckeElt&, const HeckeElt&) = default;
};

/// Shared per-rank state: the group, KL data, and bar(T_w) expansions.
class HeckeContext {
public:
    explicit HeckeContext(int r);

    const SymGroup& group() const { return *g_; }
    KLTable& kl() { return *kl_; }
    const KLTable& kl() const { return *kl_; }

    HeckeElt t_elt(int idx) const;
    HeckeElt unit() const { return t_elt(0); }

    /// Right multiplication by T_{s_i} of a T-basis element.
    HeckeElt mult_gen(const HeckeElt& a, int i) const;
    /// Right multiplication by T_w along a reduced word.
    HeckeElt mult_tw(const HeckeElt& a, int widx) const;
    /// Product in the basis of a (both arguments any basis).
    HeckeElt multiply(const HeckeElt& a, const HeckeElt& b) const;

    /// bar(T_w) in the T basis, memoized.
    const std::map<int, Laurent>& bar_t(int widx) const;
    /// The bar-semilinear involution.
    HeckeElt bar(const HeckeElt& a) const;

    /// C_w (upper) / C'_w (lower) in the T basis.
    HeckeElt kl_basis(int widx, HBasis kind) const;

    HeckeElt to_basis(const HeckeElt& a, HBasis target) const;

    /// mu(x, w) via the KL table.
    int mu(int x, int w) const { return kl_->mu(x, w); }

    /// P-tableau label of the right cell of w (transposed for the lower basis).
    comb::Tableau cell_of(int widx, HBasis kind) const;

    /// Antiautomorphism T_i -> T_i (reverses products).
    HeckeElt one_op(const HeckeElt& a) const;
    /// Antiautomorphism T_i -> T_{r-i}.
    HeckeElt dagger_op(const HeckeElt& a) const;

    std::string to_string(const HeckeElt& a, bool pretty = false) const;

private:
    std::shared_ptr<const SymGroup> g_;
    std::unique_ptr<KLTable> kl_;
    mutable std::vector<std::map<int, Laurent>> bar_t_;
    mutable std::vector<bool> bar_done_;
    mutable std::recursive_mutex mu_;
};

std::shared_ptr<HeckeContext> hecke_context(int r);  // process-wide cache

}  // namespace hecke
}  // namespace klsw
