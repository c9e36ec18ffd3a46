#pragma once

#include "klsw/comb.hpp"
#include "klsw/tensor.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace klsw {
namespace tworow {

/// Arc diagram of a word over {1,2}: 2s open, 1s close; matched pairs carry
/// arcs, the unmatched positions are recorded left to right.
struct ArcDiagram {
    comb::Word word;
    std::vector<std::pair<int, int>> arcs;  // (position of 2, position of 1), 1-based
    std::vector<int> unpaired_ones;         // ascending positions
    std::vector<int> unpaired_twos;         // ascending positions

    bool yamanouchi() const { return unpaired_twos.empty(); }
    std::string render() const;
};

ArcDiagram build_diagram(const comb::Word& k);
bool is_yamanouchi(const comb::Word& k);

/// Word with the j-th unpaired 1 (1-based, left to right) flipped to a 2.
comb::Word flip_unpaired_one(const comb::Word& k, int j);
/// Kashiwara operator: flip the rightmost unpaired 1; nullopt if none.
std::optional<comb::Word> crystal_f1(const comb::Word& k);
/// Inverse side: turn the leftmost unpaired 2 into a 1; nullopt if none.
std::optional<comb::Word> crystal_e1(const comb::Word& k);

/// F_1(c_k) = sum over j of [j] c_{F_(j)(k)} on the upper canonical basis.
std::vector<std::pair<int, comb::Word>> f1_upper_closed_form(const comb::Word& k);
/// E_1(c'_{k-dagger}) = sum over k' of [alpha(k',k)] c'_{k'-dagger}.
std::vector<std::pair<int, comb::Word>> e1_lower_closed_form(const comb::Word& k);

/// Closed-form (tilde-c'_{k-dagger})^{J-dagger} of the two-row projection,
/// returned as lower-canonical-basis coefficients keyed by the unreversed
/// Yamanouchi word: result[j] is the coefficient of c'_{j-dagger}.
/// Pre: k Yamanouchi with two-row partition content.
std::vector<std::pair<RatFn, comb::Word>> projected_lower_tworow(const comb::Word& k);

/// The same element relabeled for J = {s_1, ..., s_{r-2}}: coefficients are
/// keyed by standard tableaux via the Schutzenberger relabeling.
std::vector<std::pair<RatFn, comb::Tableau>> projected_lower_tworow_tableaux(const comb::Word& k,
                                                                             bool dagger_side);

}  // namespace tworow
}  // namespace klsw
