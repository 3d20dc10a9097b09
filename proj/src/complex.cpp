#include "pcx/complex.hpp"

#include <algorithm>

#include "pcx/errors.hpp"

namespace pcx {

// ---------------------------------------------------------------------------
// Complex
// ---------------------------------------------------------------------------

Complex::Complex(RingPtr ring, int lo, int hi, std::map<int, std::size_t> ranks,
                 std::map<int, Matrix> diffs)
    : ring_(std::move(ring)), lo_(lo), hi_(hi)
{
    if (lo_ > hi_)
        fail(errc::validation_error, "complex window has lo > hi");
    for (const auto& [n, r] : ranks) {
        if (n < lo_ || n > hi_)
            fail(errc::validation_error,
                 "rank specified outside window at degree " + std::to_string(n));
        if (r > 0)
            ranks_[n] = r;
    }
    for (auto& [n, d] : diffs) {
        if (!same_ring(d.ring(), ring_))
            fail(errc::ring_mismatch, "differential in the wrong ring");
        if (d.rows() != rank_at(n + 1) || d.cols() != rank_at(n))
            fail(errc::shape_mismatch,
                 "differential shape mismatch at degree " + std::to_string(n));
        if (d.rows() > 0 && d.cols() > 0 && !d.is_zero())
            diffs_[n] = std::move(d);
    }
}

Complex Complex::zero(RingPtr ring, int lo, int hi)
{
    return Complex(std::move(ring), lo, hi, {}, {});
}

std::size_t Complex::rank_at(int n) const
{
    auto it = ranks_.find(n);
    return it == ranks_.end() ? 0 : it->second;
}

Matrix Complex::diff_at(int n) const
{
    auto it = diffs_.find(n);
    if (it != diffs_.end())
        return it->second;
    return Matrix(ring_, rank_at(n + 1), rank_at(n));
}

std::size_t Complex::total_rank() const
{
    std::size_t t = 0;
    for (const auto& [n, r] : ranks_)
        t += r;
    return t;
}

long long Complex::euler_characteristic() const
{
    long long chi = 0;
    for (const auto& [n, r] : ranks_)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(r);
    return chi;
}

bool operator==(const Complex& a, const Complex& b)
{
    if (!same_ring(a.ring_, b.ring_))
        return false;
    int lo = std::min(a.lo_, b.lo_), hi = std::max(a.hi_, b.hi_);
    for (int n = lo; n <= hi; ++n) {
        if (a.rank_at(n) != b.rank_at(n))
            return false;
        if (a.rank_at(n) > 0 && a.rank_at(n + 1) > 0 && a.diff_at(n) != b.diff_at(n))
            return false;
    }
    return true;
}

void validate(const Complex& c)
{
    if (!c.ring())
        fail(errc::validation_error, "complex has no ring");
    for (int n = c.lo(); n + 2 <= c.hi(); ++n) {
        if (c.rank_at(n) == 0 || c.rank_at(n + 2) == 0)
            continue;
        if (!(c.diff_at(n + 1) * c.diff_at(n)).is_zero())
            fail(errc::not_a_complex,
                 "d o d != 0 starting at degree " + std::to_string(n));
    }
}

// ---------------------------------------------------------------------------
// GradedMap
// ---------------------------------------------------------------------------

GradedMap::GradedMap(Complex source, Complex target, int degree,
                     std::map<int, Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree),
      components_(std::move(components))
{
    if (!same_ring(source_.ring(), target_.ring()))
        fail(errc::ring_mismatch, "graded map between complexes over different rings");
    for (const auto& [n, m] : components_) {
        if (!same_ring(m.ring(), source_.ring()))
            fail(errc::ring_mismatch, "graded map component in the wrong ring");
        if (m.rows() != target_.rank_at(n + degree_) || m.cols() != source_.rank_at(n))
            fail(errc::shape_mismatch,
                 "graded map component shape mismatch at degree " + std::to_string(n));
    }
    normalize();
}

void GradedMap::normalize()
{
    for (auto it = components_.begin(); it != components_.end();) {
        if (it->second.rows() == 0 || it->second.cols() == 0 || it->second.is_zero())
            it = components_.erase(it);
        else
            ++it;
    }
}

GradedMap GradedMap::zero(Complex source, Complex target, int degree)
{
    return GradedMap(std::move(source), std::move(target), degree, {});
}

GradedMap GradedMap::identity(const Complex& c)
{
    std::map<int, Matrix> comps;
    for (int n = c.lo(); n <= c.hi(); ++n)
        if (c.rank_at(n) > 0)
            comps.emplace(n, Matrix::identity(c.ring(), c.rank_at(n)));
    return GradedMap(c, c, 0, std::move(comps));
}

Matrix GradedMap::component_at(int n) const
{
    auto it = components_.find(n);
    if (it != components_.end())
        return it->second;
    return Matrix(source_.ring(), target_.rank_at(n + degree_), source_.rank_at(n));
}

bool GradedMap::is_zero() const
{
    return components_.empty();
}

bool GradedMap::is_chain_map() const
{
    if (degree_ != 0)
        return false;
    for (int n = std::min(source_.lo(), target_.lo()) - 1;
         n <= std::max(source_.hi(), target_.hi()); ++n) {
        Matrix lhs = target_.diff_at(n) * component_at(n);
        Matrix rhs = component_at(n + 1) * source_.diff_at(n);
        if (lhs != rhs)
            return false;
    }
    return true;
}

bool operator==(const GradedMap& a, const GradedMap& b)
{
    if (a.degree_ != b.degree_ || a.source_ != b.source_ || a.target_ != b.target_)
        return false;
    int lo = std::min(a.source_.lo(), b.source_.lo());
    int hi = std::max(a.source_.hi(), b.source_.hi());
    for (int n = lo; n <= hi; ++n)
        if (a.component_at(n) != b.component_at(n))
            return false;
    return true;
}

GradedMap compose(const GradedMap& g, const GradedMap& f)
{
    if (f.target() != g.source())
        fail(errc::shape_mismatch, "compose: inner complexes do not match");
    int s = f.degree(), t = g.degree();
    std::map<int, Matrix> comps;
    for (int n = f.source().lo(); n <= f.source().hi(); ++n) {
        Matrix m = g.component_at(n + s) * f.component_at(n);
        if (m.rows() > 0 && m.cols() > 0 && !m.is_zero())
            comps.emplace(n, std::move(m));
    }
    return GradedMap(f.source(), g.target(), s + t, std::move(comps));
}

GradedMap add(const GradedMap& f, const GradedMap& g)
{
    if (f.source() != g.source() || f.target() != g.target() || f.degree() != g.degree())
        fail(errc::shape_mismatch, "add: graded maps not parallel");
    std::map<int, Matrix> comps;
    int lo = std::min(f.source().lo(), g.source().lo());
    int hi = std::max(f.source().hi(), g.source().hi());
    for (int n = lo; n <= hi; ++n) {
        Matrix m = f.component_at(n) + g.component_at(n);
        if (m.rows() > 0 && m.cols() > 0 && !m.is_zero())
            comps.emplace(n, std::move(m));
    }
    return GradedMap(f.source(), f.target(), f.degree(), std::move(comps));
}

GradedMap sub(const GradedMap& f, const GradedMap& g)
{
    return add(f, scale(-Scalar::one(f.source().ring()), g));
}

GradedMap scale(const Scalar& s, const GradedMap& f)
{
    if (!same_ring(s.ring(), f.source().ring()))
        fail(errc::ring_mismatch, "scale: scalar in the wrong ring");
    std::map<int, Matrix> comps;
    for (const auto& [n, m] : f.components())
        comps.emplace(n, m.scaled(s));
    return GradedMap(f.source(), f.target(), f.degree(), std::move(comps));
}

GradedMap hom_differential(const GradedMap& f)
{
    const Complex& X = f.source();
    const Complex& Y = f.target();
    int s = f.degree();
    bool odd = ((s % 2) + 2) % 2 == 1;
    std::map<int, Matrix> comps;
    for (int n = X.lo() - 1; n <= X.hi(); ++n) {
        Matrix m = Y.diff_at(n + s) * f.component_at(n);
        Matrix t = f.component_at(n + 1) * X.diff_at(n);
        m = odd ? m + t : m - t;
        if (m.rows() > 0 && m.cols() > 0 && !m.is_zero())
            comps.emplace(n, std::move(m));
    }
    return GradedMap(X, Y, s + 1, std::move(comps));
}

bool homotopy_check(const GradedMap& H, const GradedMap& phi, const GradedMap& psi)
{
    if (H.degree() != -1 || phi.degree() != 0 || psi.degree() != 0)
        fail(errc::shape_mismatch, "homotopy_check expects degrees (-1, 0, 0)");
    if (H.source() != phi.source() || H.target() != phi.target() ||
        phi.source() != psi.source() || phi.target() != psi.target())
        fail(errc::shape_mismatch, "homotopy_check requires shared source and target");
    return hom_differential(H) == sub(psi, phi);
}

// ---------------------------------------------------------------------------
// Shift, cone, cohomology
// ---------------------------------------------------------------------------

Complex shift(const Complex& c, int k)
{
    std::map<int, std::size_t> ranks;
    std::map<int, Matrix> diffs;
    bool negate = ((k % 2) + 2) % 2 == 1;
    for (int n = c.lo() - k; n <= c.hi() - k; ++n) {
        if (c.rank_at(n + k) > 0)
            ranks[n] = c.rank_at(n + k);
        Matrix d = c.diff_at(n + k);
        if (d.rows() > 0 && d.cols() > 0)
            diffs[n] = negate ? -d : d;
    }
    return Complex(c.ring(), c.lo() - k, c.hi() - k, std::move(ranks), std::move(diffs));
}

GradedMap shift(const GradedMap& f, int k)
{
    std::map<int, Matrix> comps;
    for (const auto& [n, m] : f.components())
        comps.emplace(n - k, m);
    return GradedMap(shift(f.source(), k), shift(f.target(), k), f.degree(), std::move(comps));
}

ConeResult cone(const GradedMap& f)
{
    if (!f.is_chain_map())
        fail(errc::not_chain_map, "cone requires a chain map");
    const Complex& P = f.source();
    const Complex& Q = f.target();
    const RingPtr& ring = P.ring();
    int lo = std::min(P.lo() - 1, Q.lo());
    int hi = std::max(P.hi() - 1, Q.hi());

    std::map<int, std::size_t> ranks;
    for (int n = lo; n <= hi; ++n) {
        std::size_t r = P.rank_at(n + 1) + Q.rank_at(n);
        if (r > 0)
            ranks[n] = r;
    }
    std::map<int, Matrix> diffs;
    for (int n = lo; n < hi; ++n) {
        std::size_t rows = P.rank_at(n + 2) + Q.rank_at(n + 1);
        std::size_t cols = P.rank_at(n + 1) + Q.rank_at(n);
        if (rows == 0 || cols == 0)
            continue;
        Matrix d(ring, rows, cols);
        d.paste(0, 0, -P.diff_at(n + 1));
        d.paste(P.rank_at(n + 2), 0, f.component_at(n + 1));
        d.paste(P.rank_at(n + 2), P.rank_at(n + 1), Q.diff_at(n));
        diffs[n] = std::move(d);
    }
    Complex C(ring, lo, hi, std::move(ranks), std::move(diffs));

    std::map<int, Matrix> inc, prj;
    for (int n = lo; n <= hi; ++n) {
        std::size_t pr = P.rank_at(n + 1), qr = Q.rank_at(n);
        if (qr > 0) {
            Matrix m(ring, pr + qr, qr);
            m.paste(pr, 0, Matrix::identity(ring, qr));
            inc[n] = std::move(m);
        }
        if (pr > 0) {
            Matrix m(ring, pr, pr + qr);
            m.paste(0, 0, Matrix::identity(ring, pr));
            prj[n] = std::move(m);
        }
    }
    GradedMap from_target(Q, C, 0, std::move(inc));
    GradedMap to_shifted_source(C, shift(P, 1), 0, std::move(prj));
    return ConeResult{std::move(C), std::move(from_target), std::move(to_shifted_source)};
}

std::map<int, std::size_t> cohomology_dims(const Complex& c)
{
    if (!c.ring()->is_field())
        fail(errc::non_field_ring, "cohomology over " + c.ring()->description());
    std::map<int, std::size_t> dims;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        std::size_t r = c.rank_at(n);
        std::size_t out = rank(c.diff_at(n));
        std::size_t in = rank(c.diff_at(n - 1));
        if (out + in > r)
            fail(errc::internal, "cohomology of an invalid complex");
        dims[n] = r - out - in;
    }
    return dims;
}

bool is_exact(const Complex& c)
{
    auto dims = cohomology_dims(c);
    return std::all_of(dims.begin(), dims.end(), [](const auto& kv) { return kv.second == 0; });
}

bool is_qiso(const GradedMap& f)
{
    if (f.degree() != 0 || !f.is_chain_map())
        fail(errc::not_chain_map, "is_qiso requires a chain map");
    if (!f.source().ring()->is_field())
        fail(errc::non_field_ring, "is_qiso over " + f.source().ring()->description());
    return is_exact(cone(f).cone);
}

// ---------------------------------------------------------------------------
// Tensor with the residue field
// ---------------------------------------------------------------------------

ModulePresentation ModulePresentation::residue_field(const RingPtr& ring)
{
    Matrix pres(ring, 1, 1);
    if (ring->kind() == RingKind::DualNumbers)
        pres.set(0, 0, Scalar::epsilon(ring));
    else if (!ring->is_field())
        fail(errc::unsupported_module,
             "residue field presentation only over fields and dual numbers");
    return ModulePresentation{ring, std::move(pres)};
}

Complex tensor(const Complex& c, const ModulePresentation& m)
{
    if (!same_ring(c.ring(), m.ring))
        fail(errc::ring_mismatch, "tensor: module over a different ring");
    ModulePresentation expect = ModulePresentation::residue_field(c.ring());
    if (m.presentation != expect.presentation)
        fail(errc::unsupported_module, "tensor supports only the residue field");
    if (c.ring()->is_field())
        return c;
    // dual numbers: base change along eps -> 0
    const RingPtr base = c.ring()->base();
    std::map<int, std::size_t> ranks;
    std::map<int, Matrix> diffs;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        if (c.rank_at(n) > 0)
            ranks[n] = c.rank_at(n);
        Matrix d = c.diff_at(n);
        if (d.rows() > 0 && d.cols() > 0)
            diffs[n] = d.map_entries(base, [](const Scalar& s) { return s.constant_part(); });
    }
    return Complex(base, c.lo(), c.hi(), std::move(ranks), std::move(diffs));
}

} // namespace pcx
