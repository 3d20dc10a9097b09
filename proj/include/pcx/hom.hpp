#ifndef PCX_HOM_HPP
#define PCX_HOM_HPP

#include "pcx/complex.hpp"

namespace pcx {

/// The hom complex Hom^n(P, Q) = (+)_i Hom(P^i, Q^(i+n)) with the fixed basis
/// of matrix units ordered by (source degree ascending, source index, target
/// index), and the differential d(F) = d_Q o F - (-1)^n F o d_P.
///
/// Provides the coordinate dictionary between GradedMap values and columns
/// over that basis, which is what turns cocycle/coboundary questions into
/// solve() calls.
class HomComplex {
public:
    HomComplex(Complex P, Complex Q);

    const Complex& source() const { return P_; }
    const Complex& target() const { return Q_; }

    /// The hom complex itself; its differential matrices agree with
    /// hom_differential on unflattened maps by construction.
    const Complex& complex() const { return hom_; }

    int lo() const { return hom_.lo(); }
    int hi() const { return hom_.hi(); }
    std::size_t rank_at(int n) const { return hom_.rank_at(n); }

    /// Column vector of a degree-n graded map P -> Q in the unit basis.
    Matrix flatten(const GradedMap& f) const;
    GradedMap unflatten(int degree, const Matrix& column) const;

    /// Differential matrix Hom^n -> Hom^(n+1).
    Matrix differential(int n) const { return hom_.diff_at(n); }

    /// True iff v (a degree-n cocycle coordinate vector) is a coboundary.
    bool is_coboundary(int degree, const Matrix& v) const;

private:
    Complex P_, Q_;
    Complex hom_;

    std::size_t block_offset(int n, int i) const;
};

/// Matrix of F -> g o F from Hom^n(P, Q) to Hom^(n+deg g)(P, R) for g: Q -> R.
Matrix post_compose_matrix(const HomComplex& from, const HomComplex& to, const GradedMap& g,
                           int n);

/// Matrix of F -> F o g from Hom^n(P, Q) to Hom^(n+deg g)(O, Q) for g: O -> P.
Matrix pre_compose_matrix(const HomComplex& from, const HomComplex& to, const GradedMap& g,
                          int n);

} // namespace pcx

#endif
