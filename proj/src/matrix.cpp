#include "maxplus/matrix.hpp"

#include "maxplus/errors.hpp"
#include "maxplus/kernels.hpp"

namespace maxplus {

bool Vector::is_finite() const {
    for (const Trop& t : e_)
        if (t.is_bottom()) return false;
    return !e_.empty();
}

bool Vector::is_null() const {
    for (const Trop& t : e_)
        if (!t.is_bottom()) return false;
    return true;
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0)
        throw precondition_error("matrix dimensions must be positive");
    e_.resize(static_cast<std::size_t>(rows) * cols);
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Trop(0);
    return m;
}

bool Matrix::is_null() const {
    for (const Trop& t : e_)
        if (!t.is_bottom()) return false;
    return true;
}

Vector Matrix::column(int j) const {
    Vector v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vector Matrix::row(int i) const {
    Vector v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::size_t Matrix::hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(rows_) * 1315423911u + cols_;
    for (const Trop& t : e_)
        h ^= t.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Matrix sup(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw precondition_error("sup: dimension mismatch");
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = max(a(i, j), b(i, j));
    return out;
}

Matrix mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw precondition_error("mul: inner dimensions disagree");
    Matrix out(a.rows(), b.cols());
    kernels::mul(a.data(), b.data(), out.data(), a.rows(), a.cols(), b.cols());
    return out;
}

Vector mul(const Matrix& a, const Vector& v) {
    if (a.cols() != v.size())
        throw precondition_error("mul: inner dimensions disagree");
    Vector out(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        Trop best;
        for (int j = 0; j < a.cols(); ++j) {
            Trop cand = a(i, j) + v[j];
            if (cand > best) best = cand;
        }
        out[i] = best;
    }
    return out;
}

Matrix scalar_mul(const Trop& lambda, const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = lambda + a(i, j);
    return out;
}

Vector scalar_mul(const Trop& lambda, const Vector& v) {
    Vector out(v.size());
    for (int i = 0; i < v.size(); ++i) out[i] = lambda + v[i];
    return out;
}

Matrix diag(const Vector& u) {
    if (!u.is_finite())
        throw precondition_error("diag: vector must be finite");
    Matrix m(u.size(), u.size());
    for (int i = 0; i < u.size(); ++i) m(i, i) = u[i];
    return m;
}

Matrix conjugate(const Matrix& a, const Vector& u) {
    if (!a.is_square() || a.rows() != u.size())
        throw precondition_error("conjugate: square matrix of matching size required");
    if (!u.is_finite())
        throw precondition_error("conjugate: vector must be finite");
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out(i, j) = (a(i, j) + Trop(u[j].rat())) - u[i].rat();
    return out;
}

namespace {

Trop max_entry(const Matrix& a) {
    Trop best;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) > best) best = a(i, j);
    return best;
}

} // namespace

ProjectiveMatrix projective_form(const Matrix& a) {
    Trop shift = max_entry(a);
    if (shift.is_bottom()) return {a, shift}; // null matrix
    Matrix norm(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) norm(i, j) = a(i, j) - shift.rat();
    return {std::move(norm), shift};
}

ProjectiveVector projective_form(const Vector& v) {
    Trop shift;
    for (int i = 0; i < v.size(); ++i)
        if (v[i] > shift) shift = v[i];
    if (shift.is_bottom()) return {v, shift};
    Vector norm(v.size());
    for (int i = 0; i < v.size(); ++i) norm[i] = v[i] - shift.rat();
    return {std::move(norm), shift};
}

} // namespace maxplus
