#ifndef PCX_DESCENT_HPP
#define PCX_DESCENT_HPP

#include <cstdint>

#include "pcx/derived.hpp"

namespace pcx {

/// Coefficient maps f_1, ..., f_n over the base field together with their
/// t-parameterized combination sum t_i * f_i over k[t_1, ..., t_n].
struct GenericMorphism {
    Complex P, Q;                             // over the base field k
    std::vector<GradedMap> coefficient_maps;  // chain maps P -> Q over k
    RingPtr parameter_ring;                   // k[t1..tn]
    GradedMap generic;                        // over the parameter ring
};

/// Splits a chain map between base-changed complexes into its
/// monomial-coefficient chain maps over the base field. The monomials are
/// exactly those present, in graded-lex ascending order; each coefficient
/// family is itself a chain map and the sum reassembles f exactly.
std::vector<std::pair<Monomial, GradedMap>> coefficient_decomposition(const GradedMap& f);

/// Recover the base-field complex from a base-changed one (constant entries).
Complex constants_of(const Complex& c);

GenericMorphism generic_morphism(const Complex& P, const Complex& Q,
                                 const std::vector<GradedMap>& coefficient_maps);

GradedMap specialize(const GenericMorphism& g, const std::vector<Scalar>& point);

struct TrivializationReport {
    std::map<std::string, Scalar> point;     // parameter -> base field value
    GradedMap specialized_map;               // quasi-isomorphism P -> Q over k
    std::map<int, std::size_t> certificate;  // cone cohomology dims, all zero
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

/// Random search for a point of U_f (the locus where the specialized cone is
/// exact). Deterministic in the seed. Raises no_point_found after max_trials;
/// that outcome cannot distinguish an empty U_f from a too-small sample set.
TrivializationReport find_trivializing_point(const GenericMorphism& g, std::uint64_t seed,
                                             std::uint64_t sample_bound,
                                             std::uint64_t max_trials);

/// Decide U_f != {} deterministically: rank over k(t_1,...,t_n) of the cone
/// of the generic morphism at the generic point.
bool generic_point_is_qiso(const GenericMorphism& g);

/// The descent pipeline: decompose f over k[t_*], form the generic morphism,
/// search for a trivializing point, return the specialized quasi-isomorphism
/// over the base field. With certify_generic set, first certify U_f != {} at
/// the generic point and raise not_qiso_input when the check refutes it.
TrivializationReport descend(const Complex& P, const Complex& Q, const GradedMap& f,
                             std::uint64_t seed, std::uint64_t sample_bound,
                             std::uint64_t max_trials, bool certify_generic = false);

/// Recompute the quasi-isomorphism certificate of a report from scratch.
bool verify_form_triviality(const Complex& P, const Complex& Q,
                            const TrivializationReport& report);

} // namespace pcx

#endif
