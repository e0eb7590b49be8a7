#include "mzlab/matrix.hpp"

#include "mzlab/error.hpp"

#include <algorithm>
#include <sstream>

namespace mzlab {

Vector zero_vector(Field field, std::size_t n)
{
    return Vector(n, field.zero());
}

bool is_zero(std::span<const Scalar> v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

// v -= c * w
void axpy(Vector& v, const Scalar& c, const Vector& w)
{
    if (c.is_zero())
        return;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!w[i].is_zero())
            v[i] -= c * w[i];
}

void scale_in_place(Vector& v, const Scalar& c)
{
    for (auto& x : v)
        if (!x.is_zero())
            x *= c;
}

// Gauss-Jordan on the rows of m in place; first nonzero entry in column order is the pivot.
// Returns pivot columns; `swaps` counts row exchanges and `scale` accumulates the product of pivots.
std::vector<std::size_t> gauss_jordan(Matrix& m, std::size_t* swaps = nullptr, Scalar* pivot_product = nullptr)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
            if (swaps)
                ++*swaps;
        }
        Scalar inv = m(r, c).inverse();
        if (pivot_product)
            *pivot_product *= m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero())
                m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero())
                    m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero())
{
}

Matrix Matrix::identity(Field field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = field.one();
    return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows)
{
    if (rows.empty())
        throw DimensionMismatch("matrix needs at least one row");
    Matrix m(field, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw DimensionMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!(rows[i][j].field() == field))
                throw FieldMismatch("matrix entry from a different field");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v.push_back((*this)(r, c));
    return v;
}

bool Matrix::is_zero() const noexcept
{
    return mzlab::is_zero(data_);
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::scaled(const Scalar& s) const
{
    Matrix out(*this);
    for (auto& x : out.data_)
        x *= s;
    return out;
}

Matrix Matrix::pow(unsigned k) const
{
    if (!is_square())
        throw DimensionMismatch("power of a non-square matrix");
    Matrix result = identity(field_, rows_);
    for (unsigned i = 0; i < k; ++i)
        result = result * *this;
    return result;
}

Scalar Matrix::determinant() const
{
    if (!is_square())
        throw DimensionMismatch("determinant of a non-square matrix");
    Matrix work(*this);
    std::size_t swaps = 0;
    Scalar prod = field_.one();
    auto pivots = gauss_jordan(work, &swaps, &prod);
    if (pivots.size() < rows_)
        return field_.zero();
    return swaps % 2 ? -prod : prod;
}

std::size_t Matrix::rank() const
{
    Matrix work(*this);
    return gauss_jordan(work).size();
}

Matrix Matrix::inverse() const
{
    if (!is_square())
        throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = rows_;
    Matrix aug(field_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = (*this)(i, j);
        aug(i, n + i) = field_.one();
    }
    auto pivots = gauss_jordan(aug);
    if (pivots.size() < n || pivots.back() >= n)
        throw PreconditionError("matrix is singular");
    Matrix inv(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<Vector> Matrix::nullspace() const
{
    Matrix work(*this);
    auto pivots = gauss_jordan(work);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        Vector v = zero_vector(field_, cols_);
        v[free] = field_.one();
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -work(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix sum shape mismatch");
    Matrix out(a);
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] += b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix difference shape mismatch");
    Matrix out(a);
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] -= b.data_[i];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    out(i, j) += aik * b(k, j);
        }
    return out;
}

Vector operator*(const Matrix& a, std::span<const Scalar> v)
{
    if (a.cols_ != v.size())
        throw DimensionMismatch("matrix-vector shape mismatch");
    Vector out = zero_vector(a.field_, a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            if (!a(i, j).is_zero() && !v[j].is_zero())
                out[i] += a(i, j) * v[j];
    return out;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string to_string(const Matrix& m)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << to_string(m(i, j));
        os << ']';
    }
    os << ']';
    return os.str();
}

Echelon::Echelon(Field field, std::size_t dim, std::size_t payload_dim)
    : field_(field), dim_(dim), payload_dim_(payload_dim)
{
}

Echelon::Reduction Echelon::reduce(Vector v) const
{
    if (v.size() != dim_)
        throw DimensionMismatch("vector length does not match the ambient dimension");
    Reduction out{std::move(v), zero_vector(field_, rows_.size()), zero_vector(field_, payload_dim_)};
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Scalar c = out.residual[pivots_[k]];
        if (c.is_zero())
            continue;
        axpy(out.residual, c, rows_[k]);
        out.coefficients[k] = c;
        if (payload_dim_)
            axpy(out.payload, -c, payloads_[k]);
    }
    return out;
}

std::optional<Vector> Echelon::insert(Vector v, Vector payload)
{
    if (payload.empty())
        payload = zero_vector(field_, payload_dim_);
    if (payload.size() != payload_dim_)
        throw DimensionMismatch("payload length mismatch");
    auto red = reduce(std::move(v));
    Vector& r = red.residual;
    Vector& p = payload;
    axpy(p, field_.one(), red.payload);
    auto lead = std::find_if(r.begin(), r.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (lead == r.end())
        return p;
    const std::size_t pivot = static_cast<std::size_t>(lead - r.begin());
    Scalar inv = lead->inverse();
    scale_in_place(r, inv);
    scale_in_place(p, inv);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Scalar c = rows_[k][pivot];
        if (c.is_zero())
            continue;
        axpy(rows_[k], c, r);
        if (payload_dim_)
            axpy(payloads_[k], c, p);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    auto idx = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + idx, std::move(r));
    payloads_.insert(payloads_.begin() + idx, std::move(p));
    return std::nullopt;
}

bool Echelon::contains(std::span<const Scalar> v) const
{
    return mzlab::is_zero(reduce(Vector(v.begin(), v.end())).residual);
}

bool Echelon::contains(const Echelon& other) const
{
    if (other.dim_ != dim_)
        return false;
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vector& r) { return contains(r); });
}

bool operator==(const Echelon& a, const Echelon& b)
{
    return a.dim_ == b.dim_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
}

}  // namespace mzlab
