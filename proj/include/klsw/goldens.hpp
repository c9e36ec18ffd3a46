#pragma once

#include <string>
#include <vector>

namespace klsw {
namespace goldens {

/// A reference table: row/column labels plus entries written in
/// quantum-integer notation (parse with parse_qexpr).
struct Table {
    std::string name;
    std::vector<std::string> row_labels, col_labels;
    std::vector<std::vector<std::string>> entries;
};

/// Projected upper canonical basis of H_4 in the upper canonical basis:
/// rows C_w, columns tilde-C_w, 24 x 14.
const Table& s4_ttilde();

/// Right action of C'_{s_i} on the lower canonical basis of M_(3,1),
/// i = 1, 2, 3 (columns are images).
const std::vector<Table>& example33_lower();
/// Right action of C'_{s_i} on the upper canonical basis of M_(3,1).
const std::vector<Table>& example33_upper();

const Table& t31();        // T((3,1))
const Table& d31();        // D((3,1)), up to global scale
const Table& tp31_inv();   // T'((3,1))^-1
const Table& s31();        // S((3,1)), gcd-normalized
const Table& tp42_inv();   // T'((4,2))^-1
const Table& s42();        // S((4,2)), gcd-normalized

const std::vector<const Table*>& all_tables();

}  // namespace goldens
}  // namespace klsw
