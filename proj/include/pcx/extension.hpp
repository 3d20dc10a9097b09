#ifndef PCX_EXTENSION_HPP
#define PCX_EXTENSION_HPP

#include "pcx/derived.hpp"

namespace pcx {

/// Chain-level extension 0 -> N -> T -> E0 -> 0, exact and split in every
/// degree (automatic for free modules over our rings).
struct Extension {
    GradedMap inclusion;  // N -> T, degree-0 chain map, degreewise injective
    GradedMap projection; // T -> E0, degree-0 chain map, degreewise surjective

    const Complex& sub() const { return inclusion.source(); }
    const Complex& total() const { return inclusion.target(); }
    const Complex& quotient() const { return projection.target(); }
};

/// Validates exactness degreewise; raises not_extension otherwise.
Extension make_extension(GradedMap inclusion, GradedMap projection);

/// The degree-1 class of the splitting defect: choose a degreewise splitting
/// s of the projection, then d o s - s o d lands in N and is a cocycle.
/// Independent of the chosen splitting up to coboundary.
ExtClass classify_extension(const Extension& t);

/// The twisted direct sum N (+) E0 with differential [[d_N, c], [0, d_E0]]
/// for a degree-1 cocycle c: E0 -> N; classify of the result is c on the nose.
Extension extension_from_cocycle(const ExtClass& c);

/// Push out the kernel along f: classify(f_* t) = f o classify(t).
Extension pushforward_extension(const Extension& t, const GradedMap& f);

/// Pull back the quotient along lambda: classify(lambda^* t) = classify(t) o lambda.
Extension pullback_extension(const Extension& t, const GradedMap& lambda);

} // namespace pcx

#endif
