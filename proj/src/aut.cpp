#include "pcx/aut.hpp"

#include "pcx/errors.hpp"

namespace pcx {

namespace {

void check_endo(const GradedMap& f, int degree, const char* name)
{
    if (f.degree() != degree)
        fail(errc::shape_mismatch, std::string(name) + " has the wrong degree");
    if (f.source() != f.target())
        fail(errc::shape_mismatch, std::string(name) + " is not an endomorphism datum");
}

int first_difference(const GradedMap& a, const GradedMap& b)
{
    int lo = std::min(a.source().lo(), b.source().lo());
    int hi = std::max(a.source().hi(), b.source().hi());
    for (int n = lo; n <= hi; ++n)
        if (a.component_at(n) != b.component_at(n))
            return n;
    return lo;
}

bool check_equation(VerifyReport& rep, const GradedMap& lhs, const GradedMap& rhs,
                    const std::string& name)
{
    if (lhs == rhs)
        return true;
    rep.ok = false;
    rep.failed_equation = name;
    rep.degree = first_difference(lhs, rhs);
    return false;
}

bool check_quasi_automorphism(VerifyReport& rep, const GradedMap& f, const std::string& name)
{
    if (!f.is_chain_map()) {
        GradedMap lhs = hom_differential(f);
        rep.ok = false;
        rep.failed_equation = "chain_map(" + name + ")";
        rep.degree = first_difference(lhs, GradedMap::zero(f.source(), f.target(), 1));
        return false;
    }
    if (!is_qiso(f)) {
        rep.ok = false;
        rep.failed_equation = "is_qiso(" + name + ")";
        rep.degree = 0;
        return false;
    }
    return true;
}

} // namespace

VerifyReport verify_g1_vertex(const G1Vertex& w)
{
    check_endo(w.phi, 0, "phi");
    VerifyReport rep;
    check_quasi_automorphism(rep, w.phi, "phi");
    return rep;
}

VerifyReport verify_g1_edge(const G1Edge& w)
{
    check_endo(w.phi, 0, "phi");
    check_endo(w.psi, 0, "psi");
    check_endo(w.H, -1, "H");
    if (w.phi.source() != w.psi.source() || w.phi.source() != w.H.source())
        fail(errc::shape_mismatch, "G1 edge data must share one complex");
    VerifyReport rep;
    if (!check_quasi_automorphism(rep, w.phi, "phi"))
        return rep;
    if (!check_quasi_automorphism(rep, w.psi, "psi"))
        return rep;
    check_equation(rep, hom_differential(w.H), sub(w.psi, w.phi), "d(H) = psi - phi");
    return rep;
}

VerifyReport verify_g2_vertex(const G2Vertex& w)
{
    check_endo(w.phi01, 0, "phi01");
    check_endo(w.phi12, 0, "phi12");
    check_endo(w.phi02, 0, "phi02");
    check_endo(w.alpha, -1, "alpha");
    VerifyReport rep;
    if (!check_quasi_automorphism(rep, w.phi01, "phi01"))
        return rep;
    if (!check_quasi_automorphism(rep, w.phi12, "phi12"))
        return rep;
    if (!check_quasi_automorphism(rep, w.phi02, "phi02"))
        return rep;
    check_equation(rep, hom_differential(w.alpha), sub(w.phi02, compose(w.phi12, w.phi01)),
                   "d(alpha) = phi02 - phi12*phi01");
    return rep;
}

VerifyReport verify_g2_edge(const G2Edge& w)
{
    VerifyReport rep = verify_g2_vertex(w.top);
    if (!rep.ok)
        return rep;
    rep = verify_g2_vertex(w.bottom);
    if (!rep.ok) {
        rep.failed_equation += " [bottom]";
        return rep;
    }
    check_endo(w.theta, -2, "Theta");

    const struct {
        const GradedMap *H, *phi, *psi;
        const char* name;
    } edges[] = {
        {&w.H01, &w.top.phi01, &w.bottom.phi01, "d(H01) = psi01 - phi01"},
        {&w.H02, &w.top.phi02, &w.bottom.phi02, "d(H02) = psi02 - phi02"},
        {&w.H12, &w.top.phi12, &w.bottom.phi12, "d(H12) = psi12 - phi12"},
    };
    for (const auto& e : edges) {
        check_endo(*e.H, -1, "H");
        if (!check_equation(rep, hom_differential(*e.H), sub(*e.psi, *e.phi), e.name))
            return rep;
    }

    // d(Theta) = -H02 + H12 o phi01 + psi12 o H01 + beta - alpha
    GradedMap rhs = add(sub(compose(w.H12, w.top.phi01), w.H02),
                        add(compose(w.bottom.phi12, w.H01), sub(w.bottom.alpha, w.top.alpha)));
    check_equation(rep, hom_differential(w.theta), rhs,
                   "d(Theta) = -H02 + H12*phi01 + psi12*H01 + beta - alpha");
    return rep;
}

G2Vertex fill_inner_horn(const GradedMap& phi01, const GradedMap& phi12)
{
    check_endo(phi01, 0, "phi01");
    check_endo(phi12, 0, "phi12");
    if (phi01.source() != phi12.source())
        fail(errc::shape_mismatch, "horn data must live over one complex");
    if (!phi01.is_chain_map() || !is_qiso(phi01))
        fail(errc::not_qiso, "phi01 is not a quasi-automorphism");
    if (!phi12.is_chain_map() || !is_qiso(phi12))
        fail(errc::not_qiso, "phi12 is not a quasi-automorphism");
    const Complex& E = phi01.source();
    return G2Vertex{phi01, phi12, compose(phi12, phi01), GradedMap::zero(E, E, -1)};
}

HomotopyInverse quasi_automorphism_inverse(const GradedMap& phi)
{
    check_endo(phi, 0, "phi");
    if (!phi.source().ring()->is_field())
        fail(errc::non_field_ring, "homotopy inverses are computed over field kinds");
    if (!phi.is_chain_map() || !is_qiso(phi))
        fail(errc::not_qiso, "phi is not a quasi-automorphism");

    const Complex& E = phi.source();
    const RingPtr& ring = E.ring();
    HomComplex hom(E, E);
    const std::size_t n0 = hom.rank_at(0);
    const std::size_t n1 = hom.rank_at(-1);

    // Unknowns (psi, H, H') subject to:
    //   d(psi) = 0,  phi o psi + d(H) = id,  psi o phi + d(H') = id.
    Matrix D0 = hom.differential(0);   // Hom^0 -> Hom^1
    Matrix Dm1 = hom.differential(-1); // Hom^-1 -> Hom^0
    Matrix post = post_compose_matrix(hom, hom, phi, 0);
    Matrix pre = pre_compose_matrix(hom, hom, phi, 0);
    Matrix id_vec = hom.flatten(GradedMap::identity(E));

    std::size_t rows = D0.rows() + 2 * n0;
    std::size_t cols = n0 + 2 * n1;
    Matrix sys(ring, rows, cols);
    sys.paste(0, 0, D0);
    sys.paste(D0.rows(), 0, post);
    sys.paste(D0.rows(), n0, Dm1);
    sys.paste(D0.rows() + n0, 0, pre);
    sys.paste(D0.rows() + n0, n0 + n1, Dm1);
    Matrix rhs(ring, rows, 1);
    rhs.paste(D0.rows(), 0, id_vec);
    rhs.paste(D0.rows() + n0, 0, id_vec);

    auto x = solve(sys, rhs);
    if (!x)
        fail(errc::internal, "homotopy inverse system is inconsistent");

    auto slice = [&](std::size_t off, std::size_t len) {
        Matrix v(ring, len, 1);
        for (std::size_t i = 0; i < len; ++i)
            v.set(i, 0, x->at(off + i, 0));
        return v;
    };
    return HomotopyInverse{hom.unflatten(0, slice(0, n0)), hom.unflatten(-1, slice(n0, n1)),
                           hom.unflatten(-1, slice(n0 + n1, n1))};
}

} // namespace pcx
