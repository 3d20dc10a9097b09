#include "pcx/derived.hpp"

#include "pcx/errors.hpp"

namespace pcx {

Complex hom_complex(const Complex& P, const Complex& Q)
{
    return HomComplex(P, Q).complex();
}

std::map<int, std::size_t> ext_dims(const Complex& P, const Complex& Q)
{
    if (!P.ring()->is_field())
        fail(errc::non_field_ring, "ext_dims over " + P.ring()->description());
    return cohomology_dims(hom_complex(P, Q));
}

// ---------------------------------------------------------------------------
// ExtClass
// ---------------------------------------------------------------------------

ExtClass::ExtClass(GradedMap cocycle) : cocycle_(std::move(cocycle))
{
    if (!hom_differential(cocycle_).is_zero())
        fail(errc::validation_error, "ext class representative is not a cocycle");
}

ExtClass ExtClass::zero(Complex source, Complex target, int degree)
{
    return ExtClass(GradedMap::zero(std::move(source), std::move(target), degree));
}

bool ExtClass::is_zero() const
{
    HomComplex hom(source(), target());
    return hom.is_coboundary(degree(), hom.flatten(cocycle_));
}

ExtClass operator+(const ExtClass& a, const ExtClass& b)
{
    return ExtClass(add(a.cocycle_, b.cocycle_));
}

ExtClass operator-(const ExtClass& a, const ExtClass& b)
{
    return ExtClass(sub(a.cocycle_, b.cocycle_));
}

ExtClass ExtClass::scaled(const Scalar& c) const
{
    return ExtClass(scale(c, cocycle_));
}

bool ext_equal(const ExtClass& a, const ExtClass& b)
{
    if (a.degree() != b.degree() || a.source() != b.source() || a.target() != b.target())
        fail(errc::shape_mismatch, "ext classes live in different Ext groups");
    return (a - b).is_zero();
}

// ---------------------------------------------------------------------------
// Truncation
// ---------------------------------------------------------------------------

Complex truncate_le(const Complex& c, int n)
{
    if (!c.ring()->is_field())
        fail(errc::non_field_ring, "truncation over " + c.ring()->description());
    if (n >= c.hi())
        return c;
    if (n < c.lo())
        return Complex::zero(c.ring(), n, n);

    auto kb = kernel_basis(c.diff_at(n)); // subspace of degree n
    std::size_t kr = kb.size();
    Matrix K(c.ring(), c.rank_at(n), kr);
    for (std::size_t j = 0; j < kr; ++j)
        K.paste(0, j, kb[j]);

    std::map<int, std::size_t> ranks;
    std::map<int, Matrix> diffs;
    for (int m = c.lo(); m < n; ++m) {
        if (c.rank_at(m) > 0)
            ranks[m] = c.rank_at(m);
        if (m < n - 1)
            diffs[m] = c.diff_at(m);
    }
    if (kr > 0)
        ranks[n] = kr;

    // d^(n-1) factors through ker(d^n); solve K x = d column by column.
    Matrix old = c.diff_at(n - 1);
    if (old.cols() > 0 && kr > 0) {
        Matrix d(c.ring(), kr, old.cols());
        for (std::size_t j = 0; j < old.cols(); ++j) {
            Matrix col(c.ring(), old.rows(), 1);
            for (std::size_t i = 0; i < old.rows(); ++i)
                col.set(i, 0, old.at(i, j));
            auto x = solve(K, col);
            if (!x)
                fail(errc::internal, "image of d not contained in the kernel");
            d.paste(0, j, *x);
        }
        diffs[n - 1] = std::move(d);
    }
    return Complex(c.ring(), c.lo(), n, std::move(ranks), std::move(diffs));
}

Complex truncate_ge(const Complex& c, int n)
{
    if (!c.ring()->is_field())
        fail(errc::non_field_ring, "truncation over " + c.ring()->description());
    if (n <= c.lo())
        return c;
    if (n > c.hi())
        return Complex::zero(c.ring(), n, n);

    const std::size_t m = c.rank_at(n);
    Matrix D = c.diff_at(n - 1);

    // Canonical basis of the image inside degree n: the pivot columns of D.
    Rref rd = rref(D);
    std::size_t r = rd.pivot_cols.size();
    Matrix B(c.ring(), m, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < m; ++i)
            B.set(i, j, D.at(i, rd.pivot_cols[j]));

    // Greedily complete with standard basis vectors; they represent the
    // cokernel basis.
    std::vector<std::size_t> chosen;
    Matrix acc = B;
    for (std::size_t j = 0; j < m && chosen.size() + r < m; ++j) {
        Matrix trial(c.ring(), m, acc.cols() + 1);
        trial.paste(0, 0, acc);
        trial.set(j, acc.cols(), Scalar::one(c.ring()));
        if (rank(trial) == acc.cols() + 1) {
            chosen.push_back(j);
            acc = std::move(trial);
        }
    }
    std::size_t q = chosen.size(); // = m - r

    std::map<int, std::size_t> ranks;
    std::map<int, Matrix> diffs;
    if (q > 0)
        ranks[n] = q;
    for (int k = n + 1; k <= c.hi(); ++k) {
        if (c.rank_at(k) > 0)
            ranks[k] = c.rank_at(k);
        if (k < c.hi())
            diffs[k] = c.diff_at(k);
    }
    // Induced differential: d^n restricted to the chosen representatives.
    if (q > 0 && c.rank_at(n + 1) > 0) {
        Matrix dn = c.diff_at(n);
        Matrix d(c.ring(), c.rank_at(n + 1), q);
        for (std::size_t j = 0; j < q; ++j)
            for (std::size_t i = 0; i < dn.rows(); ++i)
                d.set(i, j, dn.at(i, chosen[j]));
        diffs[n] = std::move(d);
    }
    return Complex(c.ring(), n, c.hi(), std::move(ranks), std::move(diffs));
}

// ---------------------------------------------------------------------------
// Tor amplitude
// ---------------------------------------------------------------------------

std::optional<std::pair<int, int>> tor_amplitude(const Complex& c)
{
    if (c.ring()->is_field()) {
        auto dims = cohomology_dims(c);
        std::optional<std::pair<int, int>> window;
        for (const auto& [n, d] : dims) {
            if (d == 0)
                continue;
            if (!window)
                window = {n, n};
            else
                window->second = n;
        }
        return window;
    }
    if (c.ring()->kind() == RingKind::DualNumbers)
        return tor_amplitude(tensor(c, ModulePresentation::residue_field(c.ring())));
    fail(errc::unsupported_ring, "tor_amplitude over " + c.ring()->description());
}

// ---------------------------------------------------------------------------
// Base change
// ---------------------------------------------------------------------------

namespace {

void check_embedding(const RingPtr& from, const RingPtr& target)
{
    if (same_ring(from, target))
        return;
    if (target->kind() == RingKind::DualNumbers)
        fail(errc::unsupported_embedding, "base change into dual numbers is not supported");
    bool ok = false;
    if ((target->kind() == RingKind::Polynomial || target->kind() == RingKind::RationalFunctions) &&
        same_ring(from, target->base()) && from->is_field())
        ok = true;
    if (target->kind() == RingKind::RationalFunctions && from->kind() == RingKind::Polynomial &&
        same_ring(from->base(), target->base()) && from->vars() == target->vars())
        ok = true; // localization of the polynomial ring at itself
    if (!ok)
        fail(errc::unsupported_embedding, "no supported flat embedding of " +
                                              from->description() + " into " +
                                              target->description());
}

} // namespace

Complex base_change(const Complex& c, const RingPtr& target)
{
    check_embedding(c.ring(), target);
    if (same_ring(c.ring(), target))
        return c;
    std::map<int, std::size_t> ranks;
    std::map<int, Matrix> diffs;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        if (c.rank_at(n) > 0)
            ranks[n] = c.rank_at(n);
        Matrix d = c.diff_at(n);
        if (d.rows() > 0 && d.cols() > 0)
            diffs[n] = d.map_entries(target, [&](const Scalar& s) { return embed_scalar(s, target); });
    }
    return Complex(target, c.lo(), c.hi(), std::move(ranks), std::move(diffs));
}

GradedMap base_change(const GradedMap& f, const RingPtr& target)
{
    check_embedding(f.source().ring(), target);
    if (same_ring(f.source().ring(), target))
        return f;
    std::map<int, Matrix> comps;
    for (const auto& [n, m] : f.components())
        comps.emplace(n, m.map_entries(target, [&](const Scalar& s) { return embed_scalar(s, target); }));
    return GradedMap(base_change(f.source(), target), base_change(f.target(), target), f.degree(),
                     std::move(comps));
}

} // namespace pcx
