#ifndef PCX_DERIVED_HPP
#define PCX_DERIVED_HPP

#include <optional>

#include "pcx/hom.hpp"

namespace pcx {

/// Convenience wrapper: the hom complex as a Complex.
Complex hom_complex(const Complex& P, const Complex& Q);

/// dim H^n(Hom(P, Q)) per degree; H^0 computes Hom in the derived category.
std::map<int, std::size_t> ext_dims(const Complex& P, const Complex& Q);

/// A cohomology class of the hom complex: a degree-n cocycle up to
/// coboundaries. Two classes are equal iff their difference is a coboundary.
class ExtClass {
public:
    /// Checks the cocycle condition exactly.
    explicit ExtClass(GradedMap cocycle);

    static ExtClass zero(Complex source, Complex target, int degree);

    const Complex& source() const { return cocycle_.source(); }
    const Complex& target() const { return cocycle_.target(); }
    int degree() const { return cocycle_.degree(); }
    const GradedMap& cocycle() const { return cocycle_; }

    bool is_zero() const; // coboundary test

    friend ExtClass operator+(const ExtClass& a, const ExtClass& b);
    friend ExtClass operator-(const ExtClass& a, const ExtClass& b);
    ExtClass scaled(const Scalar& c) const;

    /// Coboundary-equality in the same Ext group.
    friend bool ext_equal(const ExtClass& a, const ExtClass& b);

private:
    GradedMap cocycle_;
};

/// Smart truncations over a field: tau_le(n) replaces degree n by ker(d^n),
/// tau_ge(n) replaces degree n by coker(d^(n-1)).
Complex truncate_le(const Complex& c, int n);
Complex truncate_ge(const Complex& c, int n);

/// Minimal window [a, b] of nonzero cohomology; over dual numbers the
/// residue-field criterion (tensor down to k) applies. nullopt means the
/// amplitude is empty (the complex is trivial in the derived category).
std::optional<std::pair<int, int>> tor_amplitude(const Complex& c);

/// Entrywise coefficient embedding along a supported flat map: the identity,
/// field -> polynomial ring over it, field -> rational functions over it, or
/// a polynomial ring into its fraction field.
Complex base_change(const Complex& c, const RingPtr& target);
GradedMap base_change(const GradedMap& f, const RingPtr& target);

} // namespace pcx

#endif
