#pragma once

// Dense exact matrices over Q(zeta_m) and an incremental reduced row echelon form.

#include "mzlab/field.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mzlab {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field field, std::size_t n);
bool is_zero(std::span<const Scalar> v);

class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    static Matrix identity(Field field, std::size_t n);
    /// Throws DimensionMismatch for ragged input or an empty row list.
    static Matrix from_rows(Field field, const std::vector<Vector>& rows);

    Field field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    bool is_zero() const noexcept;
    Matrix transpose() const;
    Matrix scaled(const Scalar& s) const;
    Matrix pow(unsigned k) const;

    Scalar determinant() const;
    std::size_t rank() const;
    /// Throws PreconditionError when singular.
    Matrix inverse() const;
    /// Basis of {v : M v = 0}, one vector per free column, in column order.
    std::vector<Vector> nullspace() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, std::span<const Scalar> v);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

std::string to_string(const Matrix& m);

/// Subspace of K^dim kept in fully reduced row echelon form, with an optional payload
/// carried along every row operation (used to remember preimages).
class Echelon {
public:
    struct Reduction {
        Vector residual;
        /// Coordinates of v - residual in terms of the stored rows.
        Vector coefficients;
        /// Payload combination matching the coefficients.
        Vector payload;
    };

    Echelon(Field field, std::size_t dim, std::size_t payload_dim = 0);

    Field field() const noexcept { return field_; }
    std::size_t ambient_dim() const noexcept { return dim_; }
    std::size_t payload_dim() const noexcept { return payload_dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Adds v. Returns std::nullopt when v was independent; otherwise the reduced payload
    /// (payload minus the combination of stored payloads), which is a kernel relation.
    std::optional<Vector> insert(Vector v, Vector payload = {});

    Reduction reduce(Vector v) const;
    bool contains(std::span<const Scalar> v) const;
    bool contains(const Echelon& other) const;

    const std::vector<Vector>& rows() const noexcept { return rows_; }
    const std::vector<Vector>& payloads() const noexcept { return payloads_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Same subspace (the reduced form is canonical).
    friend bool operator==(const Echelon& a, const Echelon& b);

private:
    Field field_;
    std::size_t dim_;
    std::size_t payload_dim_;
    std::vector<Vector> rows_;
    std::vector<Vector> payloads_;
    std::vector<std::size_t> pivots_;
};

}  // namespace mzlab
