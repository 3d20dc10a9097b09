#ifndef PCX_DEFORMATION_HPP
#define PCX_DEFORMATION_HPP

#include <optional>

#include "pcx/extension.hpp"

namespace pcx {

/// A complex over k[eps]/(eps^2) together with its reduction mod eps.
/// The kernel of the reduction is eps * total and is identified with the
/// reduction itself (same matrices, eps-coefficient grading).
struct DeformedComplex {
    Complex total;     // over DUAL_NUMBERS(k)
    Complex reduction; // over k
};

/// Entrywise eps -> 0.
Complex reduce(const Complex& E);
GradedMap reduce(const GradedMap& f);

/// Validates the total complex and derives the reduction.
DeformedComplex make_deformed(Complex total);

/// The k[eps]-complex viewed as a k-complex of twice the rank, with basis
/// (constant part, eps part); differential A + eps*B becomes [[A,0],[B,A]].
Complex restrict_scalars(const Complex& E);

/// The square-zero triangle M -> E|_k -> E0 as a chain-level extension over k.
Extension deformation_extension(const DeformedComplex& E);

/// Obstruction in Ext^1(E0, N) to lifting phi0 along the square-zero
/// extension: the eps-coefficient of the splitting defect of the constant
/// lift. Vanishes iff a lift exists.
ExtClass obstruction(const DeformedComplex& E, const DeformedComplex& F, const GradedMap& phi0);

/// A chain map over k[eps] reducing to phi0, when the obstruction vanishes.
std::optional<GradedMap> lift(const DeformedComplex& E, const DeformedComplex& F,
                              const GradedMap& phi0);

/// Same class computed through the triangle calculus:
/// classify(pullback by phi0 of the F-triangle) - classify(pushforward along
/// phi0 of the E-triangle).
ExtClass obstruction_via_triangles(const DeformedComplex& E, const DeformedComplex& F,
                                   const GradedMap& phi0);

} // namespace pcx

#endif
