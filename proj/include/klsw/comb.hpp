#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace klsw {
namespace comb {

/// Permutation of [r] in one-line notation: w[i] = w(i+1), values 1..r.
using Perm = std::vector<int>;
/// Word in the alphabet [n], letters 1-based.
using Word = std::vector<int>;
/// Partition: weakly decreasing positive parts.
using Partition = std::vector<int>;

Perm perm_identity(int r);
Perm perm_inverse(const Perm& w);
/// (v * w)(i) = v(w(i)); matches the right action of words: k.(vw) = (k.v).w
Perm perm_mult(const Perm& v, const Perm& w);
Perm perm_si(int r, int i);  // simple transposition s_i, 1 <= i <= r-1
Perm perm_w0(int r);
int perm_length(const Perm& w);
bool is_identity(const Perm& w);
/// Right descent set { i : w(i) > w(i+1) } (s_i with ws_i < w).
std::vector<int> right_descents(const Perm& w);
/// Any reduced word s_{i_1} ... s_{i_l} with w = product left-to-right.
std::vector<int> reduced_word(const Perm& w);
/// Bruhat order via the dot criterion.
bool bruhat_leq(const Perm& x, const Perm& w);
std::string perm_to_string(const Perm& w);
Perm perm_from_string(const std::string& s);
std::vector<Perm> all_perms(int r);  // lexicographic order

/// k s_i swaps letters i, i+1 (1-based i).
Word word_act_si(const Word& k, int i);
Word word_act(const Word& k, const Perm& w);
Word word_reverse(const Word& k);                  // k-dagger
std::vector<int> word_content(const Word& k, int n);
Word word_sorted(const Word& k);
std::string word_to_string(const Word& k);
Word word_from_string(const std::string& s);
std::vector<Word> words_of_content(const std::vector<int>& content);
std::vector<Word> all_words(int n, int r);

/// J_zeta as the list of indices i with s_i inside a block of the composition.
std::vector<int> composition_J(const std::vector<int>& content);
/// Minimal and maximal coset representatives d(k), D(k) with sort(k) w = k.
std::pair<Perm, Perm> coset_reps(const Word& k);

bool is_partition(const Partition& p);
Partition conjugate(const Partition& p);
/// Dominance: sum of first i parts of a <= same for b, |a| = |b|.
bool dominance_leq(const Partition& a, const Partition& b);
/// All partitions of r (optionally at most max_rows parts), in descending
/// lexicographic order - a linear extension of dominance, largest first.
std::vector<Partition> partitions_of(int r, int max_rows = -1);
std::string partition_to_string(const Partition& p);
Partition partition_from_string(const std::string& s);

/// Tableau with rows of positive integers, English orientation.
struct Tableau {
    std::vector<std::vector<int>> rows;

    auto operator<=>(const Tableau&) const = default;
    int size() const;
    Partition shape() const;
    bool is_semistandard() const;
    bool is_standard() const;
    Tableau transposed() const;
    /// Subtableau keeping entries <= m (pre: standard).
    Tableau restricted(int m) const;
    /// Row and column (0-based) of a given entry; (-1,-1) when absent.
    std::pair<int, int> find(int entry) const;
    std::string to_string() const;  // rows joined by '/'
    static Tableau from_string(const std::string& s);
};

/// Row-insertion RSK: returns (P, Q); Q standard, sh(P) = sh(Q).
std::pair<Tableau, Tableau> rsk(const Word& k);
/// Inverse of rsk (pre: P semistandard, Q standard, same shape).
Word inverse_rsk(const Tableau& p, const Tableau& q);

/// Schutzenberger involution of a standard tableau.
Tableau evacuation(const Tableau& q);

std::vector<Tableau> all_syt(const Partition& shape);
/// SYT(shape) listed ascending in the last-letter total order.
std::vector<Tableau> syt_sorted(const Partition& shape);

/// Superstandard SSYT Z_lambda: row i filled with i.
Tableau superstandard(const Partition& shape);
/// Row superstandard SYT: first row 1..l1, second l1+1..l1+l2, ...
Tableau row_superstandard_syt(const Partition& shape);

/// Total last-letter order: returns <0, 0, >0 like a comparator, and the
/// largest entry whose position differs via *k (0 when equal).
int last_letter_compare(const Tableau& a, const Tableau& b, int* k = nullptr);

/// Descent sets of canonical basis labels:
/// upper R(C_Q) = { s_i : i+1 strictly south of i },
/// lower R(C'_Q) = { s_i : i+1 strictly east of i }.
std::vector<int> tableau_descents_south(const Tableau& q);
std::vector<int> tableau_descents_east(const Tableau& q);

struct DualKnuthEdge {
    int a, b;      // indices into the syt_sorted list
    int entry;     // the i of the swapped pair (i, i+1)
    bool initial;  // per the descent-intersection criterion
};
/// Elementary dual Knuth moves on SYT(shape): vertices syt_sorted(shape),
/// edges swap i and i+1 when they sit in different rows and columns.
std::vector<DualKnuthEdge> dual_knuth_graph(const Partition& shape);

}  // namespace comb
}  // namespace klsw
