#include "klsw/comb.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klsw {
namespace comb {

namespace {

std::vector<int> parse_int_seq(const std::string& s) {
    std::vector<int> out;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    } else {
        for (char c : s) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad digit sequence: " + s);
            out.push_back(c - '0');
        }
    }
    return out;
}

std::string format_int_seq(const std::vector<int>& v) {
    bool small = std::all_of(v.begin(), v.end(), [](int x) { return x <= 9; });
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i && !small) os << ",";
        os << v[i];
    }
    return os.str();
}

}  // namespace

Perm perm_identity(int r) {
    Perm w(r);
    std::iota(w.begin(), w.end(), 1);
    return w;
}

Perm perm_inverse(const Perm& w) {
    Perm v(w.size());
    for (size_t i = 0; i < w.size(); ++i) v[w[i] - 1] = (int)i + 1;
    return v;
}

Perm perm_mult(const Perm& v, const Perm& w) {
    Perm p(w.size());
    for (size_t i = 0; i < w.size(); ++i) p[i] = v[w[i] - 1];
    return p;
}

Perm perm_si(int r, int i) {
    Perm w = perm_identity(r);
    std::swap(w[i - 1], w[i]);
    return w;
}

Perm perm_w0(int r) {
    Perm w(r);
    for (int i = 0; i < r; ++i) w[i] = r - i;
    return w;
}

int perm_length(const Perm& w) {
    int l = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++l;
    return l;
}

bool is_identity(const Perm& w) {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] != (int)i + 1) return false;
    return true;
}

std::vector<int> right_descents(const Perm& w) {
    std::vector<int> d;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) d.push_back((int)i + 1);
    return d;
}

std::vector<int> reduced_word(const Perm& w) {
    std::vector<int> out;
    Perm x = w;
    while (!is_identity(x)) {
        auto d = right_descents(x);
        int i = d.front();
        x = perm_mult(x, perm_si((int)x.size(), i));
        out.push_back(i);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

bool bruhat_leq(const Perm& x, const Perm& w) {
    const int r = (int)x.size();
    if ((int)w.size() != r) throw std::invalid_argument("bruhat_leq: rank mismatch");
    // x <= w iff #{a<=i : x(a)<=j} >= #{a<=i : w(a)<=j} for all i, j
    std::vector<int> cx(r + 1, 0), cw(r + 1, 0);
    for (int i = 0; i < r; ++i) {
        for (int j = x[i]; j <= r; ++j) cx[j]++;
        for (int j = w[i]; j <= r; ++j) cw[j]++;
        for (int j = 1; j <= r; ++j)
            if (cx[j] < cw[j]) return false;
    }
    return true;
}

std::string perm_to_string(const Perm& w) { return format_int_seq(w); }

Perm perm_from_string(const std::string& s) {
    Perm w = parse_int_seq(s);
    Perm chk = w;
    std::sort(chk.begin(), chk.end());
    if (chk != perm_identity((int)w.size()))
        throw std::invalid_argument("not a permutation: " + s);
    return w;
}

std::vector<Perm> all_perms(int r) {
    std::vector<Perm> out;
    Perm w = perm_identity(r);
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

Word word_act_si(const Word& k, int i) {
    Word m = k;
    std::swap(m[i - 1], m[i]);
    return m;
}

Word word_act(const Word& k, const Perm& w) {
    Word m(k.size());
    for (size_t j = 0; j < k.size(); ++j) m[j] = k[w[j] - 1];
    return m;
}

Word word_reverse(const Word& k) { return Word(k.rbegin(), k.rend()); }

std::vector<int> word_content(const Word& k, int n) {
    std::vector<int> c(n, 0);
    for (int x : k) {
        if (x < 1 || x > n) throw std::invalid_argument("letter out of range");
        c[x - 1]++;
    }
    return c;
}

Word word_sorted(const Word& k) {
    Word m = k;
    std::sort(m.begin(), m.end());
    return m;
}

std::string word_to_string(const Word& k) { return format_int_seq(k); }

Word word_from_string(const std::string& s) { return parse_int_seq(s); }

std::vector<Word> words_of_content(const std::vector<int>& content) {
    Word base;
    for (size_t i = 0; i < content.size(); ++i)
        base.insert(base.end(), content[i], (int)i + 1);
    std::vector<Word> out;
    do out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

std::vector<Word> all_words(int n, int r) {
    std::vector<Word> out;
    Word k(r, 1);
    while (true) {
        out.push_back(k);
        int i = r - 1;
        while (i >= 0 && k[i] == n) k[i--] = 1;
        if (i < 0) break;
        k[i]++;
    }
    return out;
}

std::vector<int> composition_J(const std::vector<int>& content) {
    std::vector<int> j;
    int pos = 0;
    for (int part : content) {
        for (int i = pos + 1; i < pos + part; ++i) j.push_back(i);
        pos += part;
    }
    return j;
}

std::pair<Perm, Perm> coset_reps(const Word& k) {
    const int r = (int)k.size();
    int n = 0;
    for (int x : k) n = std::max(n, x);
    // block of positions in sort(k) holding each letter value
    std::vector<int> start(n + 2, 0);
    auto cont = word_content(k, n);
    for (int v = 1; v <= n; ++v) start[v + 1] = start[v] + cont[v - 1];
    std::vector<int> next_lo(n + 1), next_hi(n + 1);
    for (int v = 1; v <= n; ++v) {
        next_lo[v] = start[v] + 1;        // 1-based position
        next_hi[v] = start[v + 1];        // 1-based position
    }
    Perm d(r), dd(r);
    for (int j = 0; j < r; ++j) d[j] = next_lo[k[j]]++;
    for (int j = 0; j < r; ++j) dd[j] = next_hi[k[j]]--;
    return {d, dd};
}

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

Partition conjugate(const Partition& p) {
    Partition c;
    for (int i = 1; p.empty() ? false : i <= p[0]; ++i) {
        int cnt = 0;
        for (int part : p)
            if (part >= i) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

bool dominance_leq(const Partition& a, const Partition& b) {
    int sa = std::accumulate(a.begin(), a.end(), 0);
    int sb = std::accumulate(b.begin(), b.end(), 0);
    if (sa != sb) return false;
    int pa = 0, pb = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        pa += i < a.size() ? a[i] : 0;
        pb += i < b.size() ? b[i] : 0;
        if (pa > pb) return false;
    }
    return true;
}

namespace {
void gen_partitions(int rem, int maxpart, int rows_left, Partition& cur,
                    std::vector<Partition>& out) {
    if (rem == 0) {
        out.push_back(cur);
        return;
    }
    if (rows_left == 0) return;
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(rem - p, p, rows_left - 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int r, int max_rows) {
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(r, r, max_rows < 0 ? r : max_rows, cur, out);
    return out;
}

std::string partition_to_string(const Partition& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    return os.str();
}

Partition partition_from_string(const std::string& s) {
    std::vector<int> p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) p.push_back(std::stoi(tok));
    if (!is_partition(p)) throw std::invalid_argument("not a partition: " + s);
    return p;
}

int Tableau::size() const {
    int n = 0;
    for (auto& row : rows) n += (int)row.size();
    return n;
}

Partition Tableau::shape() const {
    Partition p;
    for (auto& row : rows) p.push_back((int)row.size());
    return p;
}

bool Tableau::is_semistandard() const {
    if (!is_partition(shape()) && !rows.empty()) return false;
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j && rows[i][j] < rows[i][j - 1]) return false;
            if (i && j < rows[i - 1].size() && rows[i][j] <= rows[i - 1][j]) return false;
        }
    return true;
}

bool Tableau::is_standard() const {
    if (!is_semistandard()) return false;
    std::vector<bool> seen(size() + 1, false);
    for (auto& row : rows)
        for (int x : row) {
            if (x < 1 || x > size() || seen[x]) return false;
            seen[x] = true;
        }
    return true;
}

Tableau Tableau::transposed() const {
    Tableau t;
    if (rows.empty()) return t;
    t.rows.resize(rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) t.rows[j].push_back(rows[i][j]);
    return t;
}

Tableau Tableau::restricted(int m) const {
    Tableau t;
    for (auto& row : rows) {
        std::vector<int> r2;
        for (int x : row)
            if (x <= m) r2.push_back(x);
        if (!r2.empty()) t.rows.push_back(r2);
    }
    return t;
}

std::pair<int, int> Tableau::find(int entry) const {
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] == entry) return {(int)i, (int)j};
    return {-1, -1};
}

std::string Tableau::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) os << "/";
        os << format_int_seq(rows[i]);
    }
    return os.str();
}

Tableau Tableau::from_string(const std::string& s) {
    Tableau t;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '/')) t.rows.push_back(parse_int_seq(tok));
    return t;
}

std::pair<Tableau, Tableau> rsk(const Word& k) {
    Tableau p, q;
    for (size_t step = 0; step < k.size(); ++step) {
        int x = k[step];
        size_t row = 0;
        while (true) {
            if (row == p.rows.size()) {
                p.rows.push_back({x});
                q.rows.push_back({(int)step + 1});
                break;
            }
            auto& pr = p.rows[row];
            auto it = std::upper_bound(pr.begin(), pr.end(), x);
            if (it == pr.end()) {
                pr.push_back(x);
                q.rows[row].push_back((int)step + 1);
                break;
            }
            std::swap(x, *it);
            ++row;
        }
    }
    return {p, q};
}

Word inverse_rsk(const Tableau& p_in, const Tableau& q) {
    Tableau p = p_in;
    const int r = q.size();
    Word k(r);
    for (int step = r; step >= 1; --step) {
        auto [ri, ci] = q.find(step);
        if (ri < 0) throw std::invalid_argument("inverse_rsk: entry missing in Q");
        int x = p.rows[ri][ci];
        p.rows[ri].pop_back();
        if (p.rows[ri].empty()) p.rows.erase(p.rows.begin() + ri);
        for (int row = ri - 1; row >= 0; --row) {
            auto& pr = p.rows[row];
            // rightmost entry strictly less than x
            auto it = std::lower_bound(pr.begin(), pr.end(), x);
            if (it == pr.begin()) throw std::invalid_argument("inverse_rsk: invalid pair");
            --it;
            std::swap(x, *it);
        }
        k[step - 1] = x;
    }
    return k;
}

Tableau evacuation(const Tableau& q) {
    if (!q.is_standard()) throw std::invalid_argument("evacuation: tableau not standard");
    const int r = q.size();
    Tableau work = q;
    Tableau out;
    out.rows.resize(q.rows.size());
    for (size_t i = 0; i < q.rows.size(); ++i) out.rows[i].assign(q.rows[i].size(), 0);
    for (int t = 1; t <= r; ++t) {
        // remove the minimum (top-left), slide the hole outward
        size_t hi = 0, hj = 0;
        while (true) {
            bool has_right = hj + 1 < work.rows[hi].size();
            bool has_down = hi + 1 < work.rows.size() && hj < work.rows[hi + 1].size();
            if (!has_right && !has_down) break;
            bool take_down;
            if (!has_right)
                take_down = true;
            else if (!has_down)
                take_down = false;
            else
                take_down = work.rows[hi + 1][hj] < work.rows[hi][hj + 1];
            if (take_down) {
                work.rows[hi][hj] = work.rows[hi + 1][hj];
                ++hi;
            } else {
                work.rows[hi][hj] = work.rows[hi][hj + 1];
                ++hj;
            }
        }
        out.rows[hi][hj] = r + 1 - t;
        work.rows[hi].pop_back();
        if (work.rows[hi].empty()) work.rows.erase(work.rows.begin() + hi);
    }
    return out;
}

namespace {
void gen_syt(const Partition& shape, int next, Tableau& cur, std::vector<Tableau>& out) {
    int r = 0;
    for (int p : shape) r += p;
    if (next > r) {
        out.push_back(cur);
        return;
    }
    for (size_t i = 0; i < shape.size(); ++i) {
        size_t filled = cur.rows.size() > i ? cur.rows[i].size() : 0;
        if ((int)filled >= shape[i]) continue;
        if (i > 0 && cur.rows[i - 1].size() <= filled) continue;  // column condition
        if (cur.rows.size() <= i) cur.rows.resize(i + 1);
        cur.rows[i].push_back(next);
        gen_syt(shape, next + 1, cur, out);
        cur.rows[i].pop_back();
        if (cur.rows[i].empty()) cur.rows.pop_back();
    }
}
}  // namespace

std::vector<Tableau> all_syt(const Partition& shape) {
    std::vector<Tableau> out;
    Tableau cur;
    gen_syt(shape, 1, cur, out);
    return out;
}

int last_letter_compare(const Tableau& a, const Tableau& b, int* k) {
    if (k) *k = 0;
    if (a == b) return 0;
    int r = a.size();
    for (int m = r; m >= 1; --m) {
        if (a.find(m) == b.find(m)) continue;
        if (k) *k = m;
        Partition sa = a.restricted(m - 1).shape();
        Partition sb = b.restricted(m - 1).shape();
        // a before b iff sh(a|_{m-1}) dominates sh(b|_{m-1})
        if (dominance_leq(sb, sa)) return -1;
        if (dominance_leq(sa, sb)) return 1;
        throw std::logic_error("last_letter_compare: incomparable restricted shapes");
    }
    return 0;
}

std::vector<Tableau> syt_sorted(const Partition& shape) {
    auto v = all_syt(shape);
    std::sort(v.begin(), v.end(),
              [](const Tableau& a, const Tableau& b) { return last_letter_compare(a, b) < 0; });
    return v;
}

Tableau superstandard(const Partition& shape) {
    Tableau t;
    for (size_t i = 0; i < shape.size(); ++i) t.rows.push_back(std::vector<int>(shape[i], (int)i + 1));
    return t;
}

Tableau row_superstandard_syt(const Partition& shape) {
    Tableau t;
    int next = 1;
    for (int part : shape) {
        std::vector<int> row(part);
        std::iota(row.begin(), row.end(), next);
        next += part;
        t.rows.push_back(row);
    }
    return t;
}

std::vector<int> tableau_descents_south(const Tableau& q) {
    std::vector<int> d;
    for (int i = 1; i < q.size(); ++i)
        if (q.find(i + 1).first > q.find(i).first) d.push_back(i);
    return d;
}

std::vector<int> tableau_descents_east(const Tableau& q) {
    std::vector<int> d;
    for (int i = 1; i < q.size(); ++i)
        if (q.find(i + 1).second > q.find(i).second) d.push_back(i);
    return d;
}

std::vector<DualKnuthEdge> dual_knuth_graph(const Partition& shape) {
    auto syt = syt_sorted(shape);
    std::map<Tableau, int> index;
    for (size_t i = 0; i < syt.size(); ++i) index[syt[i]] = (int)i;
    int r = 0;
    for (int p : shape) r += p;
    std::vector<DualKnuthEdge> edges;
    for (size_t a = 0; a < syt.size(); ++a) {
        for (int i = 1; i < r; ++i) {
            auto [r1, c1] = syt[a].find(i);
            auto [r2, c2] = syt[a].find(i + 1);
            if (r1 == r2 || c1 == c2) continue;
            Tableau t = syt[a];
            t.rows[r1][c1] = i + 1;
            t.rows[r2][c2] = i;
            if (!t.is_standard()) continue;
            int b = index.at(t);
            if ((int)a >= b) continue;  // record each edge once
            auto has = [](const std::vector<int>& v, int x) {
                return std::find(v.begin(), v.end(), x) != v.end();
            };
            auto da = tableau_descents_south(syt[a]);
            auto db = tableau_descents_south(syt[b]);
            auto count2 = [&](const std::vector<int>& d) {
                return (int)(i > 1 && has(d, i - 1)) + (int)has(d, i);
            };
            DualKnuthEdge e;
            e.a = (int)a;
            e.b = b;
            e.entry = i;
            e.initial = count2(da) == 1 && count2(db) == 1;
            edges.push_back(e);
        }
    }
    return edges;
}

}  // namespace comb
}  // namespace klsw
