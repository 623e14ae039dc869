#pragma once

// Dense exact linear algebra over a Scalar field. Deterministic
// first-nonzero-pivot echelon form; no tolerances anywhere.

#include <optional>
#include <vector>

#include "centra/error.hpp"
#include "centra/field.hpp"

namespace centra {

using Vec = std::vector<Scalar>;

inline bool vec_is_zero(const Vec& v) {
    for (const Scalar& x : v)
        if (!x.is_zero()) return false;
    return true;
}

class Mat {
public:
    Mat() : field_(FieldSpec::rationals()), rows_(0), cols_(0) {}
    Mat(FieldSpec field, size_t rows, size_t cols)
        : field_(field), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(field)) {}

    static Mat identity(FieldSpec field, size_t n) {
        Mat m(field, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
        return m;
    }
    static Mat from_columns(FieldSpec field, size_t rows, const std::vector<Vec>& cols) {
        Mat m(field, rows, cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw dimension_error("from_columns: column length mismatch");
            for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }
    static Mat from_rows(FieldSpec field, size_t cols, const std::vector<Vec>& rows) {
        Mat m(field, rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw dimension_error("from_rows: row length mismatch");
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const FieldSpec& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const Scalar& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(field_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw dimension_error("matrix product shape mismatch");
        Mat c(a.field_, a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const Scalar& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    c.at(i, j) += aik * bkj;
                }
            }
        return c;
    }
    friend Vec operator*(const Mat& a, const Vec& v) {
        if (a.cols_ != v.size()) throw dimension_error("matrix-vector shape mismatch");
        Vec out(a.rows_, Scalar::zero(a.field_));
        for (size_t k = 0; k < a.cols_; ++k) {
            if (v[k].is_zero()) continue;
            for (size_t i = 0; i < a.rows_; ++i) {
                if (a.at(i, k).is_zero()) continue;
                out[i] += a.at(i, k) * v[k];
            }
        }
        return out;
    }
    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw dimension_error("matrix sum shape mismatch");
        Mat c = a;
        for (size_t i = 0; i < c.e_.size(); ++i) c.e_[i] += b.e_[i];
        return c;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw dimension_error("matrix diff shape mismatch");
        Mat c = a;
        for (size_t i = 0; i < c.e_.size(); ++i) c.e_[i] -= b.e_[i];
        return c;
    }
    Vec column(size_t j) const {
        Vec v(rows_, Scalar::zero(field_));
        for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }
    Vec row(size_t i) const {
        Vec v(cols_, Scalar::zero(field_));
        for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
        return v;
    }

private:
    FieldSpec field_;
    size_t rows_, cols_;
    std::vector<Scalar> e_;
};

/// Kronecker product; index (i1*rows2+i2, j1*cols2+j2).
inline Mat kron(const Mat& a, const Mat& b) {
    Mat c(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i1 = 0; i1 < a.rows(); ++i1)
        for (size_t j1 = 0; j1 < a.cols(); ++j1) {
            const Scalar& x = a.at(i1, j1);
            if (x.is_zero()) continue;
            for (size_t i2 = 0; i2 < b.rows(); ++i2)
                for (size_t j2 = 0; j2 < b.cols(); ++j2) {
                    if (b.at(i2, j2).is_zero()) continue;
                    c.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * b.at(i2, j2);
                }
        }
    return c;
}

struct Echelon {
    Mat mat;                    // reduced row echelon form
    std::vector<size_t> pivots; // pivot column per nonzero row
};

/// Reduced row echelon form, deterministic: scan columns left to right,
/// take the first row with a nonzero entry as pivot.
inline Echelon rref(Mat m) {
    Echelon out{Mat(m.field(), 0, 0), {}};
    size_t r = 0;
    std::vector<size_t> pivots;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t sel = m.rows();
        for (size_t i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                sel = i;
                break;
            }
        if (sel == m.rows()) continue;
        if (sel != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        Scalar piv_inv = m.at(r, c).inv();
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * piv_inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    out.mat = std::move(m);
    out.pivots = std::move(pivots);
    return out;
}

inline size_t rank(const Mat& m) { return rref(m).pivots.size(); }

/// Exact basis of {x : Mx = 0} in canonical echelon form: one vector per
/// free column, with a 1 in that coordinate.
inline std::vector<Vec> nullspace(const Mat& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols(), Scalar::zero(m.field()));
        v[f] = Scalar::one(m.field());
        for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.mat.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One exact solution of Mx = b, or nullopt if none exists.
inline std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (b.size() != m.rows()) throw dimension_error("solve: rhs length mismatch");
    Mat aug(m.field(), m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    Echelon e = rref(std::move(aug));
    for (size_t r = 0; r < e.pivots.size(); ++r)
        if (e.pivots[r] == m.cols()) return std::nullopt;
    Vec x(m.cols(), Scalar::zero(m.field()));
    for (size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.mat.at(r, m.cols());
    return x;
}

/// Solve MX = B columnwise; nullopt if any column is unsolvable.
inline std::optional<Mat> solve_matrix(const Mat& m, const Mat& b) {
    if (b.rows() != m.rows()) throw dimension_error("solve_matrix: shape mismatch");
    Mat x(m.field(), m.cols(), b.cols());
    for (size_t j = 0; j < b.cols(); ++j) {
        auto col = solve(m, b.column(j));
        if (!col) return std::nullopt;
        for (size_t i = 0; i < m.cols(); ++i) x.at(i, j) = (*col)[i];
    }
    return x;
}

inline std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw dimension_error("inverse: matrix not square");
    auto x = solve_matrix(m, Mat::identity(m.field(), m.rows()));
    return x;
}

inline Scalar det(const Mat& m0) {
    if (m0.rows() != m0.cols()) throw dimension_error("det: matrix not square");
    Mat m = m0;
    Scalar d = Scalar::one(m.field());
    size_t n = m.rows();
    for (size_t c = 0; c < n; ++c) {
        size_t sel = n;
        for (size_t i = c; i < n; ++i)
            if (!m.at(i, c).is_zero()) {
                sel = i;
                break;
            }
        if (sel == n) return Scalar::zero(m.field());
        if (sel != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Scalar piv_inv = m.at(c, c).inv();
        for (size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c) * piv_inv;
            for (size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

inline Scalar trace(const Mat& m) {
    if (m.rows() != m.cols()) throw dimension_error("trace: matrix not square");
    Scalar t = Scalar::zero(m.field());
    for (size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

/// Canonical basis of the row space: nonzero rows of the RREF.
inline std::vector<Vec> canonical_span(FieldSpec field, size_t dim, const std::vector<Vec>& vectors) {
    if (vectors.empty()) return {};
    Mat m = Mat::from_rows(field, dim, vectors);
    Echelon e = rref(std::move(m));
    std::vector<Vec> out;
    for (size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.mat.row(r));
    return out;
}

/// Coordinates of v in the given basis (columns), or nullopt.
inline std::optional<Vec> express_in_basis(FieldSpec field, const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) return vec_is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    Mat m = Mat::from_columns(field, v.size(), basis);
    return solve(m, v);
}

/// Accumulates sparse constraint rows indexed by an output coordinate,
/// allocating a row only when it is first touched.
class RowCollector {
public:
    RowCollector(FieldSpec field, size_t unknowns, size_t coords)
        : field_(field), unknowns_(unknowns), rows_(coords), live_(coords, false) {}

    void add(size_t coord, size_t unknown, const Scalar& c) {
        if (c.is_zero()) return;
        if (!live_[coord]) {
            rows_[coord].assign(unknowns_, Scalar::zero(field_));
            live_[coord] = true;
            touched_.push_back(coord);
        }
        rows_[coord][unknown] += c;
    }
    void sub(size_t coord, size_t unknown, const Scalar& c) {
        if (c.is_zero()) return;
        if (!live_[coord]) {
            rows_[coord].assign(unknowns_, Scalar::zero(field_));
            live_[coord] = true;
            touched_.push_back(coord);
        }
        rows_[coord][unknown] -= c;
    }
    /// Move the nonzero accumulated rows into `out` and reset.
    void flush(std::vector<Vec>& out) {
        for (size_t coord : touched_) {
            if (!vec_is_zero(rows_[coord])) out.push_back(std::move(rows_[coord]));
            rows_[coord].clear();
            live_[coord] = false;
        }
        touched_.clear();
    }

private:
    FieldSpec field_;
    size_t unknowns_;
    std::vector<Vec> rows_;
    std::vector<bool> live_;
    std::vector<size_t> touched_;
};

inline Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw dimension_error("vec_add length mismatch");
    Vec c = a;
    for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

inline Vec vec_scale(const Scalar& s, const Vec& v) {
    Vec c = v;
    for (Scalar& x : c) x *= s;
    return c;
}

} // namespace centra
