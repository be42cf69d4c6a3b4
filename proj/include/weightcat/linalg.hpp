#pragma once

#include "weightcat/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace weightcat {

// Sparse row: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<int, Q>>;
using Matrix = std::vector<QVec>;

SparseRow to_sparse(const QVec& v);
QVec to_dense(const SparseRow& r, int ncols);
// r + f * s
SparseRow axpy(const SparseRow& r, const Q& f, const SparseRow& s);
Q entry(const SparseRow& r, int col);

// Incremental row echelon form over Q. Rows are kept with leading coefficient 1.
class Echelon {
public:
    explicit Echelon(int ncols) : ncols_(ncols) {}
    // Reduces r against the current pivots; returns the remainder.
    SparseRow reduce(SparseRow r) const;
    // Adds r; returns true if it increased the rank.
    bool add(SparseRow r);
    bool add(const QVec& v) { return add(to_sparse(v)); }
    int rank() const { return static_cast<int>(pivot_rows_.size()); }
    int ncols() const { return ncols_; }
    // Fully reduced rows ordered by pivot column, and the pivot columns.
    std::vector<SparseRow> reduced_rows() const;
    std::vector<int> pivots() const;
    bool in_span(const SparseRow& r) const { return reduce(r).empty(); }

private:
    int ncols_;
    std::map<int, SparseRow> pivot_rows_;
};

struct Rref {
    std::vector<SparseRow> rows;
    std::vector<int> pivots;
    int ncols = 0;
    int rank() const { return static_cast<int>(rows.size()); }
    // Coordinates of v against the row space pivots: for a functional matrix R,
    // apply(v) = R v.
    QVec apply(const QVec& v) const;
};

Rref rref(const std::vector<SparseRow>& rows, int ncols);
Rref rref(const Matrix& m, int ncols);
int rank(const Matrix& m, int ncols);
Matrix nullspace(const std::vector<SparseRow>& rows, int ncols);
Matrix nullspace(const Matrix& m, int ncols);
// Particular solution with free variables set to zero.
std::optional<QVec> solve(const std::vector<SparseRow>& rows, const QVec& rhs, int ncols);
Q determinant(Matrix m);

// Hermite normal form (row style) of an integer matrix; zero rows dropped.
std::vector<IVec> hermite_normal_form(std::vector<IVec> rows);

}  // namespace weightcat
