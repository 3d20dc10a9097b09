#ifndef PCX_MATRIX_HPP
#define PCX_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "pcx/scalar.hpp"

namespace pcx {

/// Dense row-major matrix of exact scalars over a single ring.
/// Zero-row / zero-column shapes are first-class citizens.
class Matrix {
public:
    Matrix() = default;
    Matrix(RingPtr ring, std::size_t rows, std::size_t cols); // zero matrix

    static Matrix identity(const RingPtr& ring, std::size_t n);
    static Matrix from_rows(const RingPtr& ring,
                            const std::vector<std::vector<Scalar>>& rows);
    static Matrix column(const RingPtr& ring, const std::vector<Scalar>& entries);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Scalar v);

    bool is_zero() const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix scaled(const Scalar& c) const;
    Matrix transposed() const;

    /// Copy src into this matrix with its top-left corner at (r0, c0).
    void paste(std::size_t r0, std::size_t c0, const Matrix& src);

    /// Entry-wise transformation into a possibly different ring.
    Matrix map_entries(const RingPtr& target,
                       const std::function<Scalar(const Scalar&)>& f) const;

    void swap_rows(std::size_t i, std::size_t j);

private:
    RingPtr ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> entries_;
};

} // namespace pcx

#endif
