#include "pcx/hom.hpp"

#include <algorithm>

#include "pcx/errors.hpp"

namespace pcx {

HomComplex::HomComplex(Complex P, Complex Q) : P_(std::move(P)), Q_(std::move(Q))
{
    if (!same_ring(P_.ring(), Q_.ring()))
        fail(errc::ring_mismatch, "hom complex between complexes over different rings");
    const RingPtr& ring = P_.ring();
    int lo = Q_.lo() - P_.hi();
    int hi = Q_.hi() - P_.lo();
    if (lo > hi)
        hi = lo;

    std::map<int, std::size_t> ranks;
    for (int n = lo; n <= hi; ++n) {
        std::size_t r = 0;
        for (int i = P_.lo(); i <= P_.hi(); ++i)
            r += P_.rank_at(i) * Q_.rank_at(i + n);
        if (r > 0)
            ranks[n] = r;
    }

    // Build the skeleton first so unflatten/flatten work, then fill in the
    // differential columns through hom_differential on unit maps.
    hom_ = Complex(ring, lo, hi, ranks, {});

    std::map<int, Matrix> diffs;
    for (int n = lo; n < hi; ++n) {
        std::size_t cols = hom_.rank_at(n), rows = hom_.rank_at(n + 1);
        if (cols == 0 || rows == 0)
            continue;
        Matrix d(ring, rows, cols);
        for (std::size_t j = 0; j < cols; ++j) {
            Matrix unit(ring, cols, 1);
            unit.set(j, 0, Scalar::one(ring));
            Matrix col = flatten(hom_differential(unflatten(n, unit)));
            d.paste(0, j, col);
        }
        diffs[n] = std::move(d);
    }
    hom_ = Complex(ring, lo, hi, std::move(ranks), std::move(diffs));
}

std::size_t HomComplex::block_offset(int n, int i) const
{
    std::size_t off = 0;
    for (int k = P_.lo(); k < i; ++k)
        off += P_.rank_at(k) * Q_.rank_at(k + n);
    return off;
}

Matrix HomComplex::flatten(const GradedMap& f) const
{
    if (f.source() != P_ || f.target() != Q_)
        fail(errc::shape_mismatch, "flatten: map does not belong to this hom complex");
    int n = f.degree();
    Matrix v(P_.ring(), hom_.rank_at(n), 1);
    for (int i = P_.lo(); i <= P_.hi(); ++i) {
        std::size_t pr = P_.rank_at(i), qr = Q_.rank_at(i + n);
        if (pr == 0 || qr == 0)
            continue;
        std::size_t off = block_offset(n, i);
        Matrix comp = f.component_at(i);
        for (std::size_t c = 0; c < pr; ++c)
            for (std::size_t r = 0; r < qr; ++r)
                v.set(off + c * qr + r, 0, comp.at(r, c));
    }
    return v;
}

GradedMap HomComplex::unflatten(int degree, const Matrix& column) const
{
    if (column.cols() != 1 || column.rows() != hom_.rank_at(degree))
        fail(errc::shape_mismatch, "unflatten: coordinate vector has the wrong length");
    std::map<int, Matrix> comps;
    for (int i = P_.lo(); i <= P_.hi(); ++i) {
        std::size_t pr = P_.rank_at(i), qr = Q_.rank_at(i + degree);
        if (pr == 0 || qr == 0)
            continue;
        std::size_t off = block_offset(degree, i);
        Matrix comp(P_.ring(), qr, pr);
        for (std::size_t c = 0; c < pr; ++c)
            for (std::size_t r = 0; r < qr; ++r)
                comp.set(r, c, column.at(off + c * qr + r, 0));
        comps.emplace(i, std::move(comp));
    }
    return GradedMap(P_, Q_, degree, std::move(comps));
}

bool HomComplex::is_coboundary(int degree, const Matrix& v) const
{
    if (v.rows() != hom_.rank_at(degree))
        fail(errc::shape_mismatch, "is_coboundary: coordinate vector has the wrong length");
    if (v.is_zero())
        return true;
    return solve(hom_.diff_at(degree - 1), v).has_value();
}

Matrix post_compose_matrix(const HomComplex& from, const HomComplex& to, const GradedMap& g,
                           int n)
{
    if (from.source() != to.source() || g.source() != from.target() ||
        g.target() != to.target())
        fail(errc::shape_mismatch, "post_compose_matrix: shapes do not line up");
    const RingPtr& ring = g.source().ring();
    std::size_t cols = from.rank_at(n), rows = to.rank_at(n + g.degree());
    Matrix op(ring, rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        Matrix unit(ring, cols, 1);
        unit.set(j, 0, Scalar::one(ring));
        op.paste(0, j, to.flatten(compose(g, from.unflatten(n, unit))));
    }
    return op;
}

Matrix pre_compose_matrix(const HomComplex& from, const HomComplex& to, const GradedMap& g,
                          int n)
{
    if (from.target() != to.target() || g.target() != from.source() ||
        g.source() != to.source())
        fail(errc::shape_mismatch, "pre_compose_matrix: shapes do not line up");
    const RingPtr& ring = g.source().ring();
    std::size_t cols = from.rank_at(n), rows = to.rank_at(n + g.degree());
    Matrix op(ring, rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        Matrix unit(ring, cols, 1);
        unit.set(j, 0, Scalar::one(ring));
        op.paste(0, j, to.flatten(compose(from.unflatten(n, unit), g)));
    }
    return op;
}

} // namespace pcx
