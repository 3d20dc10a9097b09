#include "pcx/deformation.hpp"

#include "pcx/errors.hpp"

namespace pcx {

namespace {

void require_dual(const RingPtr& ring)
{
    if (ring->kind() != RingKind::DualNumbers)
        fail(errc::unsupported_ring, "expected a dual-number ring, got " + ring->description());
}

} // namespace

Complex reduce(const Complex& E)
{
    require_dual(E.ring());
    return tensor(E, ModulePresentation::residue_field(E.ring()));
}

GradedMap reduce(const GradedMap& f)
{
    require_dual(f.source().ring());
    const RingPtr base = f.source().ring()->base();
    std::map<int, Matrix> comps;
    for (const auto& [n, m] : f.components())
        comps.emplace(n, m.map_entries(base, [](const Scalar& s) { return s.constant_part(); }));
    return GradedMap(reduce(f.source()), reduce(f.target()), f.degree(), std::move(comps));
}

DeformedComplex make_deformed(Complex total)
{
    require_dual(total.ring());
    validate(total);
    Complex red = reduce(total);
    return DeformedComplex{std::move(total), std::move(red)};
}

Complex restrict_scalars(const Complex& E)
{
    require_dual(E.ring());
    const RingPtr base = E.ring()->base();
    std::map<int, std::size_t> ranks;
    std::map<int, Matrix> diffs;
    for (int n = E.lo(); n <= E.hi(); ++n) {
        std::size_t r = E.rank_at(n);
        if (r > 0)
            ranks[n] = 2 * r;
        Matrix d = E.diff_at(n);
        if (d.rows() == 0 || d.cols() == 0)
            continue;
        Matrix A = d.map_entries(base, [](const Scalar& s) { return s.constant_part(); });
        Matrix B = d.map_entries(base, [](const Scalar& s) { return s.eps_part(); });
        Matrix dd(base, 2 * d.rows(), 2 * d.cols());
        dd.paste(0, 0, A);
        dd.paste(d.rows(), 0, B);
        dd.paste(d.rows(), d.cols(), A);
        diffs[n] = std::move(dd);
    }
    return Complex(base, E.lo(), E.hi(), std::move(ranks), std::move(diffs));
}

Extension deformation_extension(const DeformedComplex& E)
{
    Complex Ek = restrict_scalars(E.total);
    const Complex& E0 = E.reduction;
    const RingPtr base = E0.ring();
    std::map<int, Matrix> inc, prj;
    for (int n = E0.lo(); n <= E0.hi(); ++n) {
        std::size_t r = E0.rank_at(n);
        if (r == 0)
            continue;
        Matrix i(base, 2 * r, r); // x -> eps * x
        i.paste(r, 0, Matrix::identity(base, r));
        inc[n] = std::move(i);
        Matrix q(base, r, 2 * r); // constant part
        q.paste(0, 0, Matrix::identity(base, r));
        prj[n] = std::move(q);
    }
    return make_extension(GradedMap(E0, Ek, 0, std::move(inc)),
                          GradedMap(Ek, E0, 0, std::move(prj)));
}

namespace {

// Constant-term lift of a map of reductions to a map of totals.
GradedMap constant_lift(const DeformedComplex& E, const DeformedComplex& F,
                        const GradedMap& phi0)
{
    const RingPtr dual = E.total.ring();
    std::map<int, Matrix> comps;
    for (const auto& [n, m] : phi0.components())
        comps.emplace(n, m.map_entries(dual, [&](const Scalar& s) {
            return Scalar::dual(dual, s, Scalar::zero(dual->base()));
        }));
    return GradedMap(E.total, F.total, phi0.degree(), std::move(comps));
}

GradedMap check_phi0(const DeformedComplex& E, const DeformedComplex& F, const GradedMap& phi0)
{
    if (phi0.degree() != 0 || phi0.source() != E.reduction || phi0.target() != F.reduction)
        fail(errc::shape_mismatch, "phi0 must be a degree-0 map between the reductions");
    if (!phi0.is_chain_map())
        fail(errc::not_chain_map, "phi0 is not a chain map over the base field");
    return phi0;
}

} // namespace

ExtClass obstruction(const DeformedComplex& E, const DeformedComplex& F, const GradedMap& phi0)
{
    check_phi0(E, F, phi0);
    const RingPtr base = E.total.ring()->base();
    GradedMap defect = hom_differential(constant_lift(E, F, phi0)); // over k[eps]
    std::map<int, Matrix> comps;
    for (const auto& [n, m] : defect.components()) {
        Matrix con = m.map_entries(base, [](const Scalar& s) { return s.constant_part(); });
        if (!con.is_zero())
            fail(errc::internal, "defect of the constant lift is not divisible by eps");
        comps.emplace(n, m.map_entries(base, [](const Scalar& s) { return s.eps_part(); }));
    }
    return ExtClass(GradedMap(E.reduction, F.reduction, 1, std::move(comps)));
}

std::optional<GradedMap> lift(const DeformedComplex& E, const DeformedComplex& F,
                              const GradedMap& phi0)
{
    ExtClass obs = obstruction(E, F, phi0);
    HomComplex hom(E.reduction, F.reduction);
    auto primitive = solve(hom.differential(0), hom.flatten(obs.cocycle()));
    if (!primitive)
        return std::nullopt;
    GradedMap pi = hom.unflatten(0, *primitive);

    const RingPtr dual = E.total.ring();
    std::map<int, Matrix> comps;
    int lo = E.reduction.lo(), hi = E.reduction.hi();
    for (int n = lo; n <= hi; ++n) {
        std::size_t rows = F.total.rank_at(n), cols = E.total.rank_at(n);
        if (rows == 0 || cols == 0)
            continue;
        Matrix a = phi0.component_at(n);
        Matrix b = pi.component_at(n);
        Matrix m(dual, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m.set(i, j, Scalar::dual(dual, a.at(i, j), -b.at(i, j)));
        if (!m.is_zero())
            comps.emplace(n, std::move(m));
    }
    GradedMap Phi(E.total, F.total, 0, std::move(comps));
    if (!Phi.is_chain_map())
        fail(errc::internal, "corrected lift is not a chain map");
    return Phi;
}

ExtClass obstruction_via_triangles(const DeformedComplex& E, const DeformedComplex& F,
                                   const GradedMap& phi0)
{
    check_phi0(E, F, phi0);
    Extension Et = deformation_extension(E);
    Extension Ft = deformation_extension(F);
    // The induced map on the kernels M -> N is phi0 under the eps grading.
    ExtClass pushed = classify_extension(pushforward_extension(Et, phi0));
    ExtClass pulled = classify_extension(pullback_extension(Ft, phi0));
    return pulled - pushed;
}

} // namespace pcx
