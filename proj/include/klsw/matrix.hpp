#pragma once

#include "klsw/ratfn.hpp"

#include <functional>
#include <vector>

namespace klsw {

/// Dense matrix over Q(u); all entries kept canonical.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static QMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    RatFn& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const RatFn& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const RatFn& c) const;
    friend bool operator==(const QMatrix&, const QMatrix&) = default;

    QMatrix transposed() const;
    bool is_identity() const;
    bool is_zero() const;

    std::vector<RatFn> col(size_t j) const;
    std::vector<RatFn> row(size_t i) const;
    void set_col(size_t j, const std::vector<RatFn>& v);

    static QMatrix from_cols(const std::vector<std::vector<RatFn>>& cols);

private:
    size_t rows_, cols_;
    std::vector<RatFn> e_;
};

std::vector<RatFn> operator*(const QMatrix& m, const std::vector<RatFn>& v);

struct LinearSolveResult {
    bool consistent = false;
    std::vector<RatFn> solution;                  // one solution when consistent
    std::vector<std::vector<RatFn>> nullspace;    // basis of ker(A)
};

/// Exact pivoted elimination. Pivot choice minimizes numerator degree +
/// denominator degree to hold back expression swell.
LinearSolveResult solve_linear(const QMatrix& a, const std::vector<RatFn>& b);

/// Solve A X = B column-wise with a single elimination pass.
/// Pre: A square nonsingular (throws otherwise).
QMatrix solve_many(const QMatrix& a, const QMatrix& b);

QMatrix inverse(const QMatrix& a);
size_t rank(const QMatrix& a);

/// Basis of span(U) âˆ© span(W), columns given as vectors of a shared ambient
/// dimension. Result is in reduced column-echelon form, so equal subspaces
/// yield identical bases.
std::vector<std::vector<RatFn>> span_intersection(const std::vector<std::vector<RatFn>>& u,
                                                  const std::vector<std::vector<RatFn>>& w);

/// Reduced column-echelon basis of the span of the given vectors.
std::vector<std::vector<RatFn>> column_space_basis(const std::vector<std::vector<RatFn>>& v);

}  // namespace klsw
