#include "klsw/matrix.hpp"

#include <stdexcept>

namespace klsw {

QMatrix QMatrix::identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = RatFn::one();
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: shape mismatch");
    QMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const RatFn& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const RatFn& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    QMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    QMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

QMatrix QMatrix::operator*(const RatFn& c) const {
    QMatrix r = *this;
    for (auto& x : r.e_) x *= c;
    return r;
}

QMatrix QMatrix::transposed() const {
    QMatrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool QMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool QMatrix::is_zero() const {
    for (auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<RatFn> QMatrix::col(size_t j) const {
    std::vector<RatFn> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<RatFn> QMatrix::row(size_t i) const {
    std::vector<RatFn> v(cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void QMatrix::set_col(size_t j, const std::vector<RatFn>& v) {
    for (size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

QMatrix QMatrix::from_cols(const std::vector<std::vector<RatFn>>& cols) {
    if (cols.empty()) return QMatrix(0, 0);
    QMatrix m(cols[0].size(), cols.size());
    for (size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

std::vector<RatFn> operator*(const QMatrix& m, const std::vector<RatFn>& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("QMatrix: shape mismatch");
    std::vector<RatFn> r(m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && !v[j].is_zero()) r[i] += m.at(i, j) * v[j];
    return r;
}

namespace {

// Row-reduce [A | B] in place; returns pivot columns of A.
// Pivots minimize num degree + den degree among nonzero candidates.
std::vector<size_t> eliminate(QMatrix& a, QMatrix& b) {
    const size_t m = a.rows(), n = a.cols();
    std::vector<size_t> pivot_cols;
    size_t prow = 0;
    for (size_t col = 0; col < n && prow < m; ++col) {
        size_t best = m;
        int best_w = 0;
        for (size_t i = prow; i < m; ++i) {
            if (a.at(i, col).is_zero()) continue;
            int w = a.at(i, col).complexity();
            if (best == m || w < best_w) {
                best = i;
                best_w = w;
            }
        }
        if (best == m) continue;
        if (best != prow)
            for (size_t j = 0; j < n; ++j) std::swap(a.at(best, j), a.at(prow, j));
        if (best != prow && b.cols())
            for (size_t j = 0; j < b.cols(); ++j) std::swap(b.at(best, j), b.at(prow, j));
        RatFn inv = RatFn::one() / a.at(prow, col);
        for (size_t j = col; j < n; ++j)
            if (!a.at(prow, j).is_zero()) a.at(prow, j) *= inv;
        for (size_t j = 0; j < b.cols(); ++j)
            if (!b.at(prow, j).is_zero()) b.at(prow, j) *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == prow || a.at(i, col).is_zero()) continue;
            RatFn f = a.at(i, col);
            for (size_t j = col; j < n; ++j)
                if (!a.at(prow, j).is_zero()) a.at(i, j) -= f * a.at(prow, j);
            for (size_t j = 0; j < b.cols(); ++j)
                if (!b.at(prow, j).is_zero()) b.at(i, j) -= f * b.at(prow, j);
        }
        pivot_cols.push_back(col);
        ++prow;
    }
    return pivot_cols;
}

}  // namespace

LinearSolveResult solve_linear(const QMatrix& a_in, const std::vector<RatFn>& b_in) {
    if (a_in.rows() != b_in.size()) throw std::invalid_argument("solve_linear: shape mismatch");
    QMatrix a = a_in;
    QMatrix b(b_in.size(), 1);
    b.set_col(0, b_in);
    auto pivots = eliminate(a, b);
    LinearSolveResult res;
    // consistency: zero rows of A must have zero rhs
    for (size_t i = pivots.size(); i < a.rows(); ++i)
        if (!b.at(i, 0).is_zero()) return res;
    res.consistent = true;
    res.solution.assign(a.cols(), RatFn::zero());
    for (size_t p = 0; p < pivots.size(); ++p) res.solution[pivots[p]] = b.at(p, 0);
    // nullspace basis from the free columns
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    for (size_t fc = 0; fc < a.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<RatFn> v(a.cols(), RatFn::zero());
        v[fc] = RatFn::one();
        for (size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -a.at(p, fc);
        res.nullspace.push_back(std::move(v));
    }
    return res;
}

QMatrix solve_many(const QMatrix& a_in, const QMatrix& b_in) {
    if (a_in.rows() != b_in.rows()) throw std::invalid_argument("solve_many: shape mismatch");
    QMatrix a = a_in, b = b_in;
    auto pivots = eliminate(a, b);
    if (pivots.size() != a.cols() || a.rows() != a.cols())
        throw std::domain_error("solve_many: singular system");
    return b;
}

QMatrix inverse(const QMatrix& a) { return solve_many(a, QMatrix::identity(a.rows())); }

size_t rank(const QMatrix& a_in) {
    QMatrix a = a_in;
    QMatrix b(a.rows(), 0);
    return eliminate(a, b).size();
}

std::vector<std::vector<RatFn>> column_space_basis(const std::vector<std::vector<RatFn>>& v) {
    if (v.empty()) return {};
    // Reduced row echelon of the transpose = reduced column echelon basis.
    QMatrix a(v.size(), v[0].size());
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = 0; j < v[0].size(); ++j) a.at(i, j) = v[i][j];
    QMatrix b(a.rows(), 0);
    auto pivots = eliminate(a, b);
    std::vector<std::vector<RatFn>> out;
    for (size_t p = 0; p < pivots.size(); ++p) out.push_back(a.row(p));
    return out;
}

std::vector<std::vector<RatFn>> span_intersection(const std::vector<std::vector<RatFn>>& u,
                                                  const std::vector<std::vector<RatFn>>& w) {
    if (u.empty() || w.empty()) return {};
    const size_t dim = u[0].size();
    for (auto& c : u)
        if (c.size() != dim) throw std::invalid_argument("span_intersection: ambient mismatch");
    for (auto& c : w)
        if (c.size() != dim) throw std::invalid_argument("span_intersection: ambient mismatch");
    // x = U a = W b  <=>  [U | -W] (a; b) = 0
    QMatrix m(dim, u.size() + w.size());
    for (size_t j = 0; j < u.size(); ++j)
        for (size_t i = 0; i < dim; ++i) m.at(i, j) = u[j][i];
    for (size_t j = 0; j < w.size(); ++j)
        for (size_t i = 0; i < dim; ++i) m.at(i, u.size() + j) = -w[j][i];
    auto sol = solve_linear(m, std::vector<RatFn>(dim, RatFn::zero()));
    std::vector<std::vector<RatFn>> vecs;
    for (auto& k : sol.nullspace) {
        std::vector<RatFn> x(dim, RatFn::zero());
        for (size_t j = 0; j < u.size(); ++j)
            if (!k[j].is_zero())
                for (size_t i = 0; i < dim; ++i) x[i] += k[j] * u[j][i];
        bool nz = false;
        for (auto& c : x) nz = nz || !c.is_zero();
        if (nz) vecs.push_back(std::move(x));
    }
    return column_space_basis(vecs);
}

}  // namespace klsw
