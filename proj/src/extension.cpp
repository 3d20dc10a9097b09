#include "pcx/extension.hpp"

#include "pcx/errors.hpp"

namespace pcx {

namespace {

// Solve a*x = b columnwise (free variables zero); every column must be
// solvable.
Matrix solve_columns(const Matrix& a, const Matrix& b, errc on_failure, const char* what)
{
    Matrix x(a.ring(), a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        Matrix col(a.ring(), b.rows(), 1);
        for (std::size_t i = 0; i < b.rows(); ++i)
            col.set(i, 0, b.at(i, j));
        auto sol = solve(a, col);
        if (!sol)
            fail(on_failure, what);
        x.paste(0, j, *sol);
    }
    return x;
}

} // namespace

Extension make_extension(GradedMap inclusion, GradedMap projection)
{
    if (inclusion.degree() != 0 || projection.degree() != 0)
        fail(errc::not_extension, "extension maps must have degree 0");
    if (inclusion.target() != projection.source())
        fail(errc::not_extension, "extension maps do not share the total complex");
    if (!inclusion.source().ring()->is_field())
        fail(errc::non_field_ring, "extensions are handled over field kinds");
    if (!inclusion.is_chain_map() || !projection.is_chain_map())
        fail(errc::not_extension, "extension maps must be chain maps");
    if (!compose(projection, inclusion).is_zero())
        fail(errc::not_extension, "projection o inclusion != 0");

    const Complex& N = inclusion.source();
    const Complex& T = inclusion.target();
    const Complex& E0 = projection.target();
    int lo = std::min(N.lo(), std::min(T.lo(), E0.lo()));
    int hi = std::max(N.hi(), std::max(T.hi(), E0.hi()));
    for (int n = lo; n <= hi; ++n) {
        if (N.rank_at(n) + E0.rank_at(n) != T.rank_at(n))
            fail(errc::not_extension, "ranks are not additive at degree " + std::to_string(n));
        if (rank(inclusion.component_at(n)) != N.rank_at(n))
            fail(errc::not_extension, "inclusion not injective at degree " + std::to_string(n));
        if (rank(projection.component_at(n)) != E0.rank_at(n))
            fail(errc::not_extension, "projection not surjective at degree " + std::to_string(n));
    }
    return Extension{std::move(inclusion), std::move(projection)};
}

ExtClass classify_extension(const Extension& t)
{
    const Complex& N = t.sub();
    const Complex& T = t.total();
    const Complex& E0 = t.quotient();

    // Degreewise splitting s with q o s = id (deterministic via solve).
    std::map<int, Matrix> s_comps;
    for (int n = E0.lo(); n <= E0.hi(); ++n) {
        if (E0.rank_at(n) == 0)
            continue;
        Matrix q = t.projection.component_at(n);
        s_comps[n] = solve_columns(q, Matrix::identity(T.ring(), E0.rank_at(n)),
                                   errc::not_extension, "projection admits no splitting");
    }
    GradedMap s(E0, T, 0, std::move(s_comps));

    // The defect lands in the image of the inclusion; pull it back.
    GradedMap defect = hom_differential(s); // d_T o s - s o d_E0, degree 1
    std::map<int, Matrix> c_comps;
    for (int n = E0.lo(); n <= E0.hi(); ++n) {
        Matrix d = defect.component_at(n);
        if (d.rows() == 0 || d.cols() == 0)
            continue;
        Matrix inc = t.inclusion.component_at(n + 1);
        Matrix c = solve_columns(inc, d, errc::not_extension,
                                 "splitting defect does not land in the sub complex");
        if (!c.is_zero())
            c_comps[n] = std::move(c);
    }
    return ExtClass(GradedMap(E0, N, 1, std::move(c_comps)));
}

Extension extension_from_cocycle(const ExtClass& c)
{
    if (c.degree() != 1)
        fail(errc::not_extension, "twisted sum needs a degree-1 class");
    const Complex& E0 = c.source();
    const Complex& N = c.target();
    const RingPtr& ring = E0.ring();
    int lo = std::min(N.lo(), E0.lo());
    int hi = std::max(N.hi(), E0.hi());

    std::map<int, std::size_t> ranks;
    for (int n = lo; n <= hi; ++n) {
        std::size_t r = N.rank_at(n) + E0.rank_at(n);
        if (r > 0)
            ranks[n] = r;
    }
    std::map<int, Matrix> diffs;
    for (int n = lo; n < hi; ++n) {
        std::size_t rows = N.rank_at(n + 1) + E0.rank_at(n + 1);
        std::size_t cols = N.rank_at(n) + E0.rank_at(n);
        if (rows == 0 || cols == 0)
            continue;
        Matrix d(ring, rows, cols);
        d.paste(0, 0, N.diff_at(n));
        d.paste(0, N.rank_at(n), c.cocycle().component_at(n));
        d.paste(N.rank_at(n + 1), N.rank_at(n), E0.diff_at(n));
        diffs[n] = std::move(d);
    }
    Complex T(ring, lo, hi, std::move(ranks), std::move(diffs));
    validate(T);

    std::map<int, Matrix> inc, prj;
    for (int n = lo; n <= hi; ++n) {
        std::size_t nr = N.rank_at(n), er = E0.rank_at(n);
        if (nr > 0) {
            Matrix m(ring, nr + er, nr);
            m.paste(0, 0, Matrix::identity(ring, nr));
            inc[n] = std::move(m);
        }
        if (er > 0) {
            Matrix m(ring, er, nr + er);
            m.paste(0, nr, Matrix::identity(ring, er));
            prj[n] = std::move(m);
        }
    }
    return Extension{GradedMap(N, T, 0, std::move(inc)), GradedMap(T, E0, 0, std::move(prj))};
}

Extension pushforward_extension(const Extension& t, const GradedMap& f)
{
    if (f.degree() != 0 || !f.is_chain_map())
        fail(errc::not_chain_map, "pushforward needs a degree-0 chain map");
    if (f.source() != t.sub())
        fail(errc::shape_mismatch, "pushforward map must start at the extension kernel");
    ExtClass cls = classify_extension(t);
    return extension_from_cocycle(ExtClass(compose(f, cls.cocycle())));
}

Extension pullback_extension(const Extension& t, const GradedMap& lambda)
{
    if (lambda.degree() != 0 || !lambda.is_chain_map())
        fail(errc::not_chain_map, "pullback needs a degree-0 chain map");
    if (lambda.target() != t.quotient())
        fail(errc::shape_mismatch, "pullback map must end at the extension quotient");
    ExtClass cls = classify_extension(t);
    return extension_from_cocycle(ExtClass(compose(cls.cocycle(), lambda)));
}

} // namespace pcx
