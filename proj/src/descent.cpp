#include "pcx/descent.hpp"

#include <algorithm>
#include <set>

#include "pcx/errors.hpp"

namespace pcx {

namespace {

void require_polynomial(const RingPtr& ring)
{
    if (ring->kind() != RingKind::Polynomial)
        fail(errc::unsupported_ring,
             "expected a polynomial-ring complex, got " + ring->description());
}

} // namespace

Complex constants_of(const Complex& c)
{
    require_polynomial(c.ring());
    const RingPtr base = c.ring()->base();
    std::map<int, std::size_t> ranks;
    std::map<int, Matrix> diffs;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        if (c.rank_at(n) > 0)
            ranks[n] = c.rank_at(n);
        Matrix d = c.diff_at(n);
        if (d.rows() == 0 || d.cols() == 0)
            continue;
        diffs[n] = d.map_entries(base, [&](const Scalar& s) {
            if (!s.is_constant_poly())
                fail(errc::not_base_changed,
                     "differential has non-constant entries; the complex is not base changed");
            return s.constant_coefficient();
        });
    }
    return Complex(base, c.lo(), c.hi(), std::move(ranks), std::move(diffs));
}

std::vector<std::pair<Monomial, GradedMap>> coefficient_decomposition(const GradedMap& f)
{
    require_polynomial(f.source().ring());
    if (f.degree() != 0 || !f.is_chain_map())
        fail(errc::not_chain_map, "coefficient decomposition expects a chain map");

    Complex P = constants_of(f.source());
    Complex Q = constants_of(f.target());
    const RingPtr base = P.ring();

    // Monomials present anywhere in f, graded-lex ascending.
    std::set<Monomial, decltype([](const Monomial& a, const Monomial& b) {
                 return graded_lex_greater(b, a);
             })>
        monomials;
    for (const auto& [n, m] : f.components())
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                for (const auto& mono : m.at(i, j).monomials())
                    monomials.insert(mono);

    std::vector<std::pair<Monomial, GradedMap>> out;
    for (const auto& mono : monomials) {
        std::map<int, Matrix> comps;
        for (const auto& [n, m] : f.components()) {
            Matrix c = m.map_entries(base, [&](const Scalar& s) { return s.coefficient(mono); });
            if (!c.is_zero())
                comps.emplace(n, std::move(c));
        }
        GradedMap fm(P, Q, 0, std::move(comps));
        if (!fm.is_chain_map())
            fail(errc::not_chain_map,
                 "a monomial coefficient family is not a chain map over the base field");
        out.emplace_back(mono, std::move(fm));
    }

    // Reassembly must be exact.
    GradedMap sum = GradedMap::zero(f.source(), f.target(), 0);
    const RingPtr poly = f.source().ring();
    for (const auto& [mono, fm] : out) {
        Scalar m = Scalar::polynomial(poly, {{mono, Scalar::one(base)}});
        sum = add(sum, scale(m, base_change(fm, poly)));
    }
    if (sum != f)
        fail(errc::internal, "monomial decomposition does not reassemble the map");
    return out;
}

GenericMorphism generic_morphism(const Complex& P, const Complex& Q,
                                 const std::vector<GradedMap>& coefficient_maps)
{
    if (coefficient_maps.empty())
        fail(errc::empty_family, "generic morphism needs at least one coefficient map");
    for (const auto& fi : coefficient_maps) {
        if (fi.source() != P || fi.target() != Q || fi.degree() != 0)
            fail(errc::shape_mismatch, "coefficient map has the wrong shape");
        if (!fi.is_chain_map())
            fail(errc::not_chain_map, "coefficient map is not a chain map");
    }
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= coefficient_maps.size(); ++i)
        vars.push_back("t" + std::to_string(i));
    RingPtr poly = Ring::polynomial(P.ring(), vars);

    GradedMap generic = GradedMap::zero(base_change(P, poly), base_change(Q, poly), 0);
    for (std::size_t i = 0; i < coefficient_maps.size(); ++i)
        generic = add(generic,
                      scale(Scalar::variable(poly, i), base_change(coefficient_maps[i], poly)));
    if (!generic.is_chain_map())
        fail(errc::internal, "generic morphism is not a chain map");
    return GenericMorphism{P, Q, coefficient_maps, std::move(poly), std::move(generic)};
}

GradedMap specialize(const GenericMorphism& g, const std::vector<Scalar>& point)
{
    if (point.size() != g.parameter_ring->var_count())
        fail(errc::missing_variable, "specialization point must assign every parameter");
    GradedMap f = GradedMap::zero(g.P, g.Q, 0);
    for (std::size_t i = 0; i < g.coefficient_maps.size(); ++i)
        f = add(f, scale(point[i], g.coefficient_maps[i]));
    return f;
}

TrivializationReport find_trivializing_point(const GenericMorphism& g, std::uint64_t seed,
                                             std::uint64_t sample_bound,
                                             std::uint64_t max_trials)
{
    if (max_trials < 1)
        fail(errc::validation_error, "max_trials must be at least 1");
    const RingPtr& k = g.P.ring();
    if (auto cap = designated_sample_count(k); cap != 0 && sample_bound > cap)
        fail(errc::field_too_small, "sample_bound " + std::to_string(sample_bound) +
                                        " exceeds the " + std::to_string(cap) +
                                        " designated sample values of " + k->description());

    const std::size_t nvars = g.parameter_ring->var_count();
    SeedStream stream(seed);
    for (std::uint64_t trial = 1; trial <= max_trials; ++trial) {
        std::vector<Scalar> point;
        point.reserve(nvars);
        for (std::size_t i = 0; i < nvars; ++i)
            point.push_back(random_scalar(k, sample_bound, stream.next()));
        GradedMap f = specialize(g, point);
        auto dims = cohomology_dims(cone(f).cone);
        bool exact = std::all_of(dims.begin(), dims.end(),
                                 [](const auto& kv) { return kv.second == 0; });
        if (!exact)
            continue;
        TrivializationReport rep;
        for (std::size_t i = 0; i < nvars; ++i)
            rep.point.emplace(g.parameter_ring->vars()[i], point[i]);
        rep.specialized_map = std::move(f);
        rep.certificate = std::move(dims);
        rep.trials = trial;
        rep.seed = seed;
        return rep;
    }
    fail(errc::no_point_found,
         "no trivializing point after " + std::to_string(max_trials) +
             " trials; either no base-field linear combination is a quasi-isomorphism or the "
             "sample set was too small (this outcome cannot tell the two apart)");
}

bool generic_point_is_qiso(const GenericMorphism& g)
{
    RingPtr rf = Ring::rational_functions(g.P.ring(), g.parameter_ring->vars());
    return is_qiso(base_change(g.generic, rf));
}

TrivializationReport descend(const Complex& P, const Complex& Q, const GradedMap& f,
                             std::uint64_t seed, std::uint64_t sample_bound,
                             std::uint64_t max_trials, bool certify_generic)
{
    auto decomposition = coefficient_decomposition(f);
    if (constants_of(f.source()) != P || constants_of(f.target()) != Q)
        fail(errc::shape_mismatch, "f is not a base change of maps between P and Q");
    std::vector<GradedMap> maps;
    maps.reserve(decomposition.size());
    for (auto& [mono, fm] : decomposition)
        maps.push_back(std::move(fm));
    GenericMorphism g = generic_morphism(P, Q, maps);
    if (certify_generic && !generic_point_is_qiso(g))
        fail(errc::not_qiso_input,
             "the generic specialization over the rational-function field is not a "
             "quasi-isomorphism; U_f is empty");
    return find_trivializing_point(g, seed, sample_bound, max_trials);
}

bool verify_form_triviality(const Complex& P, const Complex& Q,
                            const TrivializationReport& report)
{
    const GradedMap& f = report.specialized_map;
    if (f.source() != P || f.target() != Q || f.degree() != 0)
        return false;
    if (!f.is_chain_map())
        return false;
    for (const auto& [n, d] : report.certificate)
        if (d != 0)
            return false;
    return is_qiso(f);
}

} // namespace pcx
