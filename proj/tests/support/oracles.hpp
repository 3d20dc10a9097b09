#ifndef PCX_TESTS_SUPPORT_ORACLES_HPP
#define PCX_TESTS_SUPPORT_ORACLES_HPP

#include "pcx/complex.hpp"

// Independent quasi-isomorphism oracle: computes the induced map on
// cohomology in every degree directly from kernel/image bases and checks it
// is an isomorphism. Shares only rank/kernel/solve with the engine, not the
// cone or hom-complex machinery it cross-checks.
namespace pcx::testoracle {

struct CohomologyBasis {
    Matrix h_basis;     // columns: kernel vectors spanning H complements
    Matrix image_basis; // columns: independent columns of the incoming differential
};

inline CohomologyBasis cohomology_basis(const Complex& c, int n)
{
    const RingPtr& ring = c.ring();
    auto kb = kernel_basis(c.diff_at(n));
    Matrix D = c.diff_at(n - 1);
    Rref rd = rref(D);
    Matrix B(ring, c.rank_at(n), rd.pivot_cols.size());
    for (std::size_t j = 0; j < rd.pivot_cols.size(); ++j)
        for (std::size_t i = 0; i < D.rows(); ++i)
            B.set(i, j, D.at(i, rd.pivot_cols[j]));

    // greedily pick kernel vectors extending the image to a basis of the kernel
    Matrix acc = B;
    std::vector<std::size_t> picked;
    for (std::size_t j = 0; j < kb.size(); ++j) {
        Matrix trial(ring, c.rank_at(n), acc.cols() + 1);
        trial.paste(0, 0, acc);
        trial.paste(0, acc.cols(), kb[j]);
        if (rank(trial) == acc.cols() + 1) {
            picked.push_back(j);
            acc = std::move(trial);
        }
    }
    Matrix H(ring, c.rank_at(n), picked.size());
    for (std::size_t j = 0; j < picked.size(); ++j)
        H.paste(0, j, kb[picked[j]]);
    return CohomologyBasis{std::move(H), std::move(B)};
}

// Coordinates of a kernel vector in the H-basis modulo the image.
inline Matrix h_coordinates(const CohomologyBasis& basis, const Matrix& z)
{
    const RingPtr& ring = z.ring();
    std::size_t hq = basis.h_basis.cols(), bq = basis.image_basis.cols();
    Matrix sys(ring, z.rows(), hq + bq);
    sys.paste(0, 0, basis.h_basis);
    sys.paste(0, hq, basis.image_basis);
    auto sol = solve(sys, z);
    if (!sol)
        throw std::runtime_error("oracle: vector not in the kernel span");
    Matrix coords(ring, hq, 1);
    for (std::size_t i = 0; i < hq; ++i)
        coords.set(i, 0, sol->at(i, 0));
    return coords;
}

inline bool induced_iso_in_degree(const GradedMap& f, int n)
{
    auto src = cohomology_basis(f.source(), n);
    auto tgt = cohomology_basis(f.target(), n);
    if (src.h_basis.cols() != tgt.h_basis.cols())
        return false;
    std::size_t h = src.h_basis.cols();
    Matrix induced(f.source().ring(), h, h);
    Matrix comp = f.component_at(n);
    for (std::size_t j = 0; j < h; ++j) {
        Matrix v(f.source().ring(), src.h_basis.rows(), 1);
        for (std::size_t i = 0; i < v.rows(); ++i)
            v.set(i, 0, src.h_basis.at(i, j));
        induced.paste(0, j, h_coordinates(tgt, comp * v));
    }
    return rank(induced) == h;
}

inline bool qiso_oracle(const GradedMap& f)
{
    int lo = std::min(f.source().lo(), f.target().lo()) - 1;
    int hi = std::max(f.source().hi(), f.target().hi()) + 1;
    for (int n = lo; n <= hi; ++n)
        if (!induced_iso_in_degree(f, n))
            return false;
    return true;
}

} // namespace pcx::testoracle

#endif
