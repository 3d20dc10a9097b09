#include "pcx/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "pcx/errors.hpp"

namespace pcx {

namespace {

void require_field(const RingPtr& ring)
{
    if (!ring->is_field())
        fail(errc::non_field_ring,
             "operation requires a field kind, got " + ring->description());
}

// Rowwise denominator clearing over QQ; row scaling leaves rank, kernels and
// solution sets of augmented systems unchanged.
Matrix clear_denominators_q(const Matrix& m)
{
    Matrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(
                                                  m.at(i, j).rational_value()));
        if (l == 1)
            continue;
        Scalar s = Scalar::rational(m.ring(), Rational(l));
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.set(i, j, out.at(i, j) * s);
    }
    return out;
}

// Rowwise denominator clearing over a rational-function field; the result
// lives in the underlying polynomial ring so elimination never needs gcds.
Matrix clear_denominators_rf(const Matrix& m, const RingPtr& polyring)
{
    Matrix out(polyring, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Scalar l = Scalar::one(polyring);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Scalar den = Scalar::polynomial(polyring, m.at(i, j).denominator_terms());
            Scalar g = poly_gcd(l, den);
            l = l * den.divide_exact(g);
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Scalar num = Scalar::polynomial(polyring, m.at(i, j).numerator_terms());
            Scalar den = Scalar::polynomial(polyring, m.at(i, j).denominator_terms());
            out.set(i, j, num * l.divide_exact(den));
        }
    }
    return out;
}

// Fraction-free forward elimination (Bareiss). Works in place over any ring
// whose scalars support exact division; every division below is exact.
std::vector<std::pair<std::size_t, std::size_t>> bareiss_forward(Matrix& m)
{
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    Scalar prev = Scalar::one(m.ring());
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m.at(pr, c).is_zero())
            ++pr;
        if (pr == m.rows())
            continue;
        m.swap_rows(r, pr);
        const Scalar pivot = m.at(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const Scalar mic = m.at(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                Scalar v = pivot * m.at(i, j) - mic * m.at(r, j);
                m.set(i, j, v.divide_exact(prev));
            }
            m.set(i, c, Scalar::zero(m.ring()));
        }
        prev = pivot;
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

// Plain Gauss-Jordan over GF(p); returns the pivot columns.
std::vector<std::size_t> gauss_jordan(Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m.at(pr, c).is_zero())
            ++pr;
        if (pr == m.rows())
            continue;
        m.swap_rows(r, pr);
        Scalar inv = m.at(r, c).inv();
        for (std::size_t j = c; j < m.cols(); ++j)
            m.set(r, j, m.at(r, j) * inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero())
                continue;
            Scalar f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.set(i, j, m.at(i, j) - f * m.at(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Turn a forward-eliminated echelon matrix into reduced form using field
// arithmetic (divide pivot rows, eliminate above pivots).
void reduce_echelon(Matrix& m, const std::vector<std::pair<std::size_t, std::size_t>>& pivots)
{
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto [r, c] = *it;
        Scalar inv = m.at(r, c).inv();
        for (std::size_t j = c; j < m.cols(); ++j)
            m.set(r, j, m.at(r, j) * inv);
        for (std::size_t i = 0; i < r; ++i) {
            Scalar f = m.at(i, c);
            if (f.is_zero())
                continue;
            for (std::size_t j = c; j < m.cols(); ++j)
                m.set(i, j, m.at(i, j) - f * m.at(r, j));
        }
    }
}

} // namespace

Rref rref(const Matrix& m)
{
    require_field(m.ring());
    switch (m.ring()->kind()) {
        case RingKind::PrimeField: {
            Matrix w = m;
            auto pivots = gauss_jordan(w);
            return Rref{std::move(w), std::move(pivots)};
        }
        case RingKind::Rationals: {
            Matrix w = clear_denominators_q(m);
            auto pivots = bareiss_forward(w);
            reduce_echelon(w, pivots);
            std::vector<std::size_t> cols;
            for (auto& [r, c] : pivots)
                cols.push_back(c);
            return Rref{std::move(w), std::move(cols)};
        }
        case RingKind::RationalFunctions: {
            auto polyring = Ring::polynomial(m.ring()->base(), m.ring()->vars());
            Matrix w = clear_denominators_rf(m, polyring);
            auto pivots = bareiss_forward(w);
            Matrix f = w.map_entries(m.ring(), [&](const Scalar& s) {
                return Scalar::fraction(m.ring(), s.poly_terms(),
                                        Scalar::one(polyring).poly_terms());
            });
            reduce_echelon(f, pivots);
            std::vector<std::size_t> cols;
            for (auto& [r, c] : pivots)
                cols.push_back(c);
            return Rref{std::move(f), std::move(cols)};
        }
        default: break;
    }
    fail(errc::internal, "unreachable");
}

std::size_t rank(const Matrix& m)
{
    require_field(m.ring());
    switch (m.ring()->kind()) {
        case RingKind::PrimeField: {
            Matrix w = m;
            return gauss_jordan(w).size();
        }
        case RingKind::Rationals: {
            Matrix w = clear_denominators_q(m);
            return bareiss_forward(w).size();
        }
        case RingKind::RationalFunctions: {
            auto polyring = Ring::polynomial(m.ring()->base(), m.ring()->vars());
            Matrix w = clear_denominators_rf(m, polyring);
            return bareiss_forward(w).size();
        }
        default: break;
    }
    fail(errc::internal, "unreachable");
}

std::vector<Matrix> kernel_basis(const Matrix& m)
{
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivot_cols)
        is_pivot[c] = true;
    std::vector<Matrix> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j])
            continue;
        Matrix v(m.ring(), m.cols(), 1);
        v.set(j, 0, Scalar::one(m.ring()));
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            v.set(r.pivot_cols[i], 0, -r.mat.at(i, j));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b)
{
    require_field(a.ring());
    if (b.cols() != 1 || b.rows() != a.rows())
        fail(errc::shape_mismatch, "solve expects a column vector matching the matrix");
    if (!same_ring(a.ring(), b.ring()))
        fail(errc::ring_mismatch, "solve ring mismatch");
    Matrix aug(a.ring(), a.rows(), a.cols() + 1);
    aug.paste(0, 0, a);
    aug.paste(0, a.cols(), b);
    Rref r = rref(aug);
    for (auto c : r.pivot_cols)
        if (c == a.cols())
            return std::nullopt;
    Matrix x(a.ring(), a.cols(), 1);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        x.set(r.pivot_cols[i], 0, r.mat.at(i, a.cols()));
    return x;
}

Matrix evaluate(const Matrix& m, const std::vector<Scalar>& values)
{
    if (m.ring()->kind() != RingKind::Polynomial)
        fail(errc::unsupported_ring, "evaluate expects a polynomial-ring matrix");
    const RingPtr base = m.ring()->base();
    return m.map_entries(base, [&](const Scalar& s) { return s.evaluate(values); });
}

Matrix evaluate(const Matrix& m, const std::map<std::string, Scalar>& point)
{
    if (m.ring()->kind() != RingKind::Polynomial)
        fail(errc::unsupported_ring, "evaluate expects a polynomial-ring matrix");
    std::vector<Scalar> values;
    for (const auto& v : m.ring()->vars()) {
        auto it = point.find(v);
        if (it == point.end())
            fail(errc::missing_variable, "no value assigned to variable '" + v + "'");
        values.push_back(it->second);
    }
    for (const auto& [name, value] : point)
        m.ring()->var_index(name); // reject stray assignments
    return evaluate(m, values);
}

std::uint64_t designated_sample_count(const RingPtr& ring)
{
    require_field(ring);
    auto p = ring->characteristic();
    return p == 0 ? 0 : static_cast<std::uint64_t>(p);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

Scalar random_scalar(const RingPtr& ring, std::uint64_t sample_bound, std::uint64_t seed)
{
    require_field(ring);
    if (sample_bound < 1)
        fail(errc::validation_error, "sample_bound must be at least 1");
    std::uint64_t size = sample_bound;
    if (auto cap = designated_sample_count(ring); cap != 0)
        size = std::min(size, cap);
    std::uint64_t v = splitmix64(seed) % size;
    return Scalar::from_integer(ring, Integer(v));
}

std::uint64_t SeedStream::next()
{
    state_ = splitmix64(state_);
    return state_;
}

std::uint64_t SeedStream::next_below(std::uint64_t bound)
{
    return next() % bound;
}

} // namespace pcx
