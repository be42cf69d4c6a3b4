#include "weightcat/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace weightcat {

SparseRow to_sparse(const QVec& v) {
    SparseRow r;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (sgn(v[i]) != 0) r.emplace_back(i, v[i]);
    return r;
}

QVec to_dense(const SparseRow& r, int ncols) {
    QVec v(ncols);
    for (auto& [c, x] : r) v[c] = x;
    return v;
}

SparseRow axpy(const SparseRow& r, const Q& f, const SparseRow& s) {
    SparseRow out;
    out.reserve(r.size() + s.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
        if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
            out.push_back(r[i++]);
        } else if (i == r.size() || s[j].first < r[i].first) {
            if (sgn(f) != 0) out.emplace_back(s[j].first, f * s[j].second);
            ++j;
        } else {
            Q x = r[i].second + f * s[j].second;
            if (sgn(x) != 0) out.emplace_back(r[i].first, x);
            ++i;
            ++j;
        }
    }
    return out;
}

Q entry(const SparseRow& r, int col) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const std::pair<int, Q>& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == col) return it->second;
    return 0;
}

SparseRow Echelon::reduce(SparseRow r) const {
    // eliminate every entry that sits on a pivot column, left to right
    size_t pos = 0;
    while (pos < r.size()) {
        auto it = pivot_rows_.find(r[pos].first);
        if (it == pivot_rows_.end()) {
            ++pos;
            continue;
        }
        Q f = -r[pos].second;
        int col = r[pos].first;
        r = axpy(r, f, it->second);
        pos = std::lower_bound(r.begin(), r.end(), col,
                               [](const std::pair<int, Q>& e, int c) { return e.first < c; }) -
              r.begin();
    }
    return r;
}

bool Echelon::add(SparseRow r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    Q lead = r.front().second;
    for (auto& e : r) e.second /= lead;
    int col = r.front().first;
    // keep existing rows reduced on the new pivot column
    for (auto& [pc, row] : pivot_rows_) {
        Q x = entry(row, col);
        if (sgn(x) != 0) row = axpy(row, -x, r);
    }
    pivot_rows_.emplace(col, std::move(r));
    return true;
}

std::vector<SparseRow> Echelon::reduced_rows() const {
    std::vector<SparseRow> out;
    for (auto& [c, r] : pivot_rows_) out.push_back(r);
    return out;
}

std::vector<int> Echelon::pivots() const {
    std::vector<int> out;
    for (auto& [c, r] : pivot_rows_) out.push_back(c);
    return out;
}

QVec Rref::apply(const QVec& v) const {
    QVec out(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        Q s = 0;
        for (auto& [c, x] : rows[i])
            if (c < static_cast<int>(v.size())) s += x * v[c];
        out[i] = s;
    }
    return out;
}

Rref rref(const std::vector<SparseRow>& rows, int ncols) {
    Echelon e(ncols);
    for (auto& r : rows) e.add(r);
    Rref out;
    out.rows = e.reduced_rows();
    out.pivots = e.pivots();
    out.ncols = ncols;
    return out;
}

Rref rref(const Matrix& m, int ncols) {
    std::vector<SparseRow> rows;
    for (auto& v : m) rows.push_back(to_sparse(v));
    return rref(rows, ncols);
}

int rank(const Matrix& m, int ncols) { return rref(m, ncols).rank(); }

Matrix nullspace(const std::vector<SparseRow>& rows, int ncols) {
    Rref r = rref(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : r.pivots) is_pivot[p] = true;
    Matrix out;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(ncols);
        v[f] = 1;
        for (size_t i = 0; i < r.rows.size(); ++i) v[r.pivots[i]] = -entry(r.rows[i], f);
        out.push_back(std::move(v));
    }
    return out;
}

Matrix nullspace(const Matrix& m, int ncols) {
    std::vector<SparseRow> rows;
    for (auto& v : m) rows.push_back(to_sparse(v));
    return nullspace(rows, ncols);
}

std::optional<QVec> solve(const std::vector<SparseRow>& rows, const QVec& rhs, int ncols) {
    if (rows.size() != rhs.size()) throw std::invalid_argument("solve: size mismatch");
    std::vector<SparseRow> aug;
    aug.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        SparseRow r = rows[i];
        if (sgn(rhs[i]) != 0) r.emplace_back(ncols, rhs[i]);
        aug.push_back(std::move(r));
    }
    Rref r = rref(aug, ncols + 1);
    QVec x(ncols);
    for (size_t i = 0; i < r.rows.size(); ++i) {
        if (r.pivots[i] == ncols) return std::nullopt;
        x[r.pivots[i]] = entry(r.rows[i], ncols);
    }
    return x;
}

Q determinant(Matrix m) {
    int n = static_cast<int>(m.size());
    Q det = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (sgn(m[r][c]) != 0) {
                p = r;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (sgn(m[r][c]) == 0) continue;
            Q f = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

std::vector<IVec> hermite_normal_form(std::vector<IVec> rows) {
    if (rows.empty()) return rows;
    int n = static_cast<int>(rows[0].size());
    std::vector<std::vector<mpz_class>> a;
    for (auto& r : rows) a.emplace_back(r.begin(), r.end());
    int m = static_cast<int>(a.size());
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        // Euclid on the column below `row`
        while (true) {
            int best = -1;
            for (int r = row; r < m; ++r)
                if (a[r][col] != 0 && (best < 0 || abs(a[r][col]) < abs(a[best][col]))) best = r;
            if (best < 0) break;
            std::swap(a[row], a[best]);
            bool done = true;
            for (int r = row + 1; r < m; ++r) {
                if (a[r][col] == 0) continue;
                mpz_class q = a[r][col] / a[row][col];
                for (int k = 0; k < n; ++k) a[r][k] -= q * a[row][k];
                if (a[r][col] != 0) done = false;
            }
            if (done) break;
        }
        if (a[row][col] == 0) continue;
        if (a[row][col] < 0)
            for (auto& x : a[row]) x = -x;
        for (int r = 0; r < row; ++r) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a[r][col].get_mpz_t(), a[row][col].get_mpz_t());
            for (int k = 0; k < n; ++k) a[r][k] -= q * a[row][k];
        }
        ++row;
    }
    std::vector<IVec> out;
    for (int r = 0; r < row; ++r) {
        IVec v(n);
        for (int k = 0; k < n; ++k) v[k] = static_cast<int>(a[r][k].get_si());
        out.push_back(v);
    }
    return out;
}

}  // namespace weightcat
