#include "pcx/matrix.hpp"

#include <algorithm>

#include "pcx/errors.hpp"

namespace pcx {

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols)
{
    entries_.assign(rows_ * cols_, Scalar::zero(ring_));
}

Matrix Matrix::identity(const RingPtr& ring, std::size_t n)
{
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, Scalar::one(ring));
    return m;
}

Matrix Matrix::from_rows(const RingPtr& ring, const std::vector<std::vector<Scalar>>& rows)
{
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(ring, rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc)
            fail(errc::shape_mismatch, "ragged row list");
        for (std::size_t j = 0; j < nc; ++j) {
            if (!same_ring(rows[i][j].ring(), ring))
                fail(errc::ring_mismatch, "matrix entry in the wrong ring");
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

Matrix Matrix::column(const RingPtr& ring, const std::vector<Scalar>& entries)
{
    Matrix m(ring, entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.set(i, 0, entries[i]);
    return m;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const
{
    if (i >= rows_ || j >= cols_)
        fail(errc::shape_mismatch, "matrix index out of range");
    return entries_[i * cols_ + j];
}

void Matrix::set(std::size_t i, std::size_t j, Scalar v)
{
    if (i >= rows_ || j >= cols_)
        fail(errc::shape_mismatch, "matrix index out of range");
    entries_[i * cols_ + j] = std::move(v);
}

bool Matrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::operator-() const
{
    Matrix m = *this;
    for (auto& e : m.entries_)
        e = -e;
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(errc::shape_mismatch, "matrix addition shape mismatch");
    if (!same_ring(a.ring(), b.ring()))
        fail(errc::ring_mismatch, "matrix addition ring mismatch");
    Matrix m = a;
    for (std::size_t k = 0; k < m.entries_.size(); ++k)
        m.entries_[k] = m.entries_[k] + b.entries_[k];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    return a + (-b);
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        fail(errc::shape_mismatch, "matrix product shape mismatch");
    if (!same_ring(a.ring(), b.ring()))
        fail(errc::ring_mismatch, "matrix product ring mismatch");
    Matrix m(a.ring(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj.is_zero())
                    continue;
                m.set(i, j, m.at(i, j) + aik * bkj);
            }
        }
    return m;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    if (!same_ring(a.ring(), b.ring()))
        return false;
    return a.entries_ == b.entries_;
}

Matrix Matrix::scaled(const Scalar& c) const
{
    Matrix m = *this;
    for (auto& e : m.entries_)
        e = e * c;
    return m;
}

Matrix Matrix::transposed() const
{
    Matrix m(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.set(j, i, at(i, j));
    return m;
}

void Matrix::paste(std::size_t r0, std::size_t c0, const Matrix& src)
{
    if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_)
        fail(errc::shape_mismatch, "paste outside matrix bounds");
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j)
            set(r0 + i, c0 + j, src.at(i, j));
}

Matrix Matrix::map_entries(const RingPtr& target,
                           const std::function<Scalar(const Scalar&)>& f) const
{
    Matrix m(target, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.set(i, j, f(at(i, j)));
    return m;
}

void Matrix::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap(entries_[i * cols_ + c], entries_[j * cols_ + c]);
}

} // namespace pcx
