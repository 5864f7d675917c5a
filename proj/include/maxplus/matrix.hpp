#pragma once

#include <cstddef>
#include <vector>

#include "maxplus/scalar.hpp"

namespace maxplus {

/// Dense max-plus vector.
class Vector {
public:
    Vector() = default;
    explicit Vector(int n) : e_(static_cast<std::size_t>(n)) {}
    Vector(std::initializer_list<Trop> init) : e_(init) {}

    int size() const { return static_cast<int>(e_.size()); }
    Trop& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
    const Trop& operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }

    /// Finite vector <=> no bottom entry.
    bool is_finite() const;
    bool is_null() const;

    friend bool operator==(const Vector&, const Vector&) = default;

    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

private:
    std::vector<Trop> e_;
};

/// Dense row-major max-plus matrix.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols);

    static Matrix null(int rows, int cols) { return Matrix(rows, cols); }
    /// Tropical identity: 0 on the diagonal, bottom elsewhere.
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Trop& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Trop& operator()(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * cols_ + j];
    }

    Trop* data() { return e_.data(); }
    const Trop* data() const { return e_.data(); }

    bool is_null() const;

    Vector column(int j) const;
    Vector row(int i) const;
    Matrix transpose() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

    std::size_t hash() const noexcept;

private:
    int rows_, cols_;
    std::vector<Trop> e_;
};

/// Entrywise maximum A v B; dimensions must agree.
Matrix sup(const Matrix& a, const Matrix& b);

/// Max-plus product; inner dimensions must agree.
Matrix mul(const Matrix& a, const Matrix& b);
Vector mul(const Matrix& a, const Vector& v);

/// lambda (+) A entrywise; bottom lambda yields the null matrix.
Matrix scalar_mul(const Trop& lambda, const Matrix& a);
Vector scalar_mul(const Trop& lambda, const Vector& v);

/// diag(u): u on the diagonal, bottom elsewhere; u must be finite.
Matrix diag(const Vector& u);

/// diag(-u) A diag(u); u must be finite and of matching size.
Matrix conjugate(const Matrix& a, const Vector& u);

/// Normal form under tropical equivalence: the maximum finite entry of
/// `normalized` is 0 and `shift` restores the input; the null object keeps a
/// bottom shift. Two objects are equivalent iff their normalized parts match.
struct ProjectiveMatrix {
    Matrix normalized;
    Trop shift;
};
struct ProjectiveVector {
    Vector normalized;
    Trop shift;
};

ProjectiveMatrix projective_form(const Matrix& a);
ProjectiveVector projective_form(const Vector& v);

} // namespace maxplus
