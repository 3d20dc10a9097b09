#include "pcx/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "pcx/errors.hpp"

namespace pcx {

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

std::uint64_t Monomial::total_degree() const
{
    std::uint64_t d = 0;
    for (auto e : exps)
        d += e;
    return d;
}

bool Monomial::is_constant() const
{
    return total_degree() == 0;
}

bool Monomial::divides(const Monomial& other) const
{
    if (exps.size() != other.exps.size())
        return false;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > other.exps[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial m(*this);
    for (std::size_t i = 0; i < exps.size(); ++i)
        m.exps[i] += other.exps[i];
    return m;
}

Monomial Monomial::operator/(const Monomial& other) const
{
    Monomial m(*this);
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (other.exps[i] > exps[i])
            fail(errc::internal, "monomial division not exact");
        m.exps[i] -= other.exps[i];
    }
    return m;
}

bool graded_lex_greater(const Monomial& a, const Monomial& b)
{
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db)
        return da > db;
    return a.exps > b.exps; // lexicographic, first variable most significant
}

namespace {

struct MonomialDesc {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        return graded_lex_greater(a, b);
    }
};

// ---------------------------------------------------------------------------
// Term-list polynomial kernel. Coefficients are base-field scalars.
// ---------------------------------------------------------------------------

struct PolyCtx {
    RingPtr base;
    std::size_t nvars;
};

TermList tl_from_map(std::map<Monomial, Scalar, MonomialDesc>& acc)
{
    TermList out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero())
            out.emplace_back(m, std::move(c));
    return out;
}

TermList tl_normalize(const PolyCtx& ctx, TermList terms)
{
    std::map<Monomial, Scalar, MonomialDesc> acc;
    for (auto& [m, c] : terms) {
        if (m.exps.size() != ctx.nvars)
            fail(errc::internal, "monomial arity mismatch");
        if (c.is_zero())
            continue;
        auto it = acc.find(m);
        if (it == acc.end())
            acc.emplace(m, c);
        else
            it->second = it->second + c;
    }
    return tl_from_map(acc);
}

TermList tl_const(const PolyCtx& ctx, const Scalar& c)
{
    if (c.is_zero())
        return {};
    return {{Monomial(ctx.nvars), c}};
}

TermList tl_one(const PolyCtx& ctx)
{
    return tl_const(ctx, Scalar::one(ctx.base));
}

bool tl_is_one(const TermList& a)
{
    return a.size() == 1 && a.front().first.is_constant() && a.front().second.is_one();
}

TermList tl_add(const PolyCtx& ctx, const TermList& a, const TermList& b)
{
    std::map<Monomial, Scalar, MonomialDesc> acc(a.begin(), a.end());
    for (const auto& [m, c] : b) {
        auto it = acc.find(m);
        if (it == acc.end())
            acc.emplace(m, c);
        else
            it->second = it->second + c;
    }
    (void)ctx;
    return tl_from_map(acc);
}

TermList tl_neg(const TermList& a)
{
    TermList out = a;
    for (auto& [m, c] : out)
        c = -c;
    return out;
}

TermList tl_sub(const PolyCtx& ctx, const TermList& a, const TermList& b)
{
    return tl_add(ctx, a, tl_neg(b));
}

TermList tl_mul(const PolyCtx& ctx, const TermList& a, const TermList& b)
{
    std::map<Monomial, Scalar, MonomialDesc> acc;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m = ma * mb;
            Scalar c = ca * cb;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), std::move(c));
            else
                it->second = it->second + c;
        }
    (void)ctx;
    return tl_from_map(acc);
}

TermList tl_scale(const TermList& a, const Scalar& c)
{
    if (c.is_zero())
        return {};
    TermList out = a;
    for (auto& [m, cc] : out)
        cc = cc * c;
    return out;
}

// Exact division by a nonzero divisor; the quotient must exist.
TermList tl_divexact(const PolyCtx& ctx, const TermList& a, const TermList& b)
{
    if (b.empty())
        fail(errc::internal, "polynomial division by zero");
    TermList q;
    TermList r = a;
    const Monomial& mb = b.front().first;
    const Scalar cb_inv = b.front().second.inv();
    while (!r.empty()) {
        const Monomial& mr = r.front().first;
        if (!mb.divides(mr))
            fail(errc::internal, "polynomial division not exact");
        Monomial mq = mr / mb;
        Scalar cq = r.front().second * cb_inv;
        // r -= (cq * mq) * b
        TermList t;
        t.reserve(b.size());
        for (const auto& [m, c] : b)
            t.emplace_back(m * mq, c * cq);
        r = tl_sub(ctx, r, t);
        q.emplace_back(std::move(mq), std::move(cq));
    }
    // leading monomials of r strictly decrease, so q is already sorted
    return q;
}

std::uint32_t tl_deg_in(const TermList& a, std::size_t var)
{
    std::uint32_t d = 0;
    for (const auto& [m, c] : a)
        d = std::max(d, m.exps[var]);
    return d;
}

// Coefficient of var^k, as a polynomial with the var's exponent zeroed.
TermList tl_coeff_in(const PolyCtx& ctx, const TermList& a, std::size_t var, std::uint32_t k)
{
    TermList out;
    for (const auto& [m, c] : a)
        if (m.exps[var] == k) {
            Monomial m2 = m;
            m2.exps[var] = 0;
            out.emplace_back(std::move(m2), c);
        }
    return tl_normalize(ctx, std::move(out));
}

TermList tl_mul_var_pow(const TermList& a, std::size_t var, std::uint32_t k)
{
    TermList out = a;
    for (auto& [m, c] : out)
        m.exps[var] += k;
    return out;
}

Scalar tl_lc(const TermList& a)
{
    return a.front().second;
}

TermList tl_monic(const PolyCtx& ctx, TermList a)
{
    if (a.empty())
        return a;
    Scalar inv = tl_lc(a).inv();
    (void)ctx;
    return tl_scale(a, inv);
}

TermList tl_gcd(const PolyCtx& ctx, const TermList& a, const TermList& b);

TermList tl_content_in(const PolyCtx& ctx, const TermList& a, std::size_t var)
{
    TermList g;
    std::uint32_t d = tl_deg_in(a, var);
    for (std::uint32_t k = 0; k <= d; ++k) {
        TermList c = tl_coeff_in(ctx, a, var, k);
        if (!c.empty())
            g = tl_gcd(ctx, g, c);
        if (tl_is_one(g))
            break;
    }
    return g;
}

// Pseudo-remainder of a by b with respect to var; deg_var(b) >= 1.
TermList tl_prem(const PolyCtx& ctx, TermList r, const TermList& b, std::size_t var)
{
    const std::uint32_t db = tl_deg_in(b, var);
    const TermList lcb = tl_coeff_in(ctx, b, var, db);
    while (!r.empty()) {
        std::uint32_t dr = tl_deg_in(r, var);
        if (dr < db)
            break;
        TermList lr = tl_coeff_in(ctx, r, var, dr);
        r = tl_sub(ctx, tl_mul(ctx, lcb, r),
                   tl_mul(ctx, tl_mul_var_pow(lr, var, dr - db), b));
    }
    return r;
}

// Monic gcd via the primitive pseudo-remainder sequence, recursing on the
// content with respect to the chosen main variable.
TermList tl_gcd(const PolyCtx& ctx, const TermList& a, const TermList& b)
{
    if (a.empty())
        return tl_monic(ctx, b);
    if (b.empty())
        return tl_monic(ctx, a);

    std::size_t var = ctx.nvars;
    for (std::size_t v = 0; v < ctx.nvars; ++v)
        if (tl_deg_in(a, v) > 0 || tl_deg_in(b, v) > 0) {
            var = v;
            break;
        }
    if (var == ctx.nvars)
        return tl_one(ctx); // two nonzero field constants

    TermList ca = tl_content_in(ctx, a, var);
    TermList cb = tl_content_in(ctx, b, var);
    TermList c = tl_gcd(ctx, ca, cb);
    TermList ap = tl_divexact(ctx, a, ca);
    TermList bp = tl_divexact(ctx, b, cb);
    if (tl_deg_in(ap, var) < tl_deg_in(bp, var))
        std::swap(ap, bp);

    TermList g;
    while (true) {
        if (bp.empty()) {
            g = ap;
            break;
        }
        if (tl_deg_in(bp, var) == 0) {
            g = tl_one(ctx);
            break;
        }
        TermList r = tl_prem(ctx, ap, bp, var);
        ap = std::move(bp);
        bp = r.empty() ? std::move(r) : tl_divexact(ctx, r, tl_content_in(ctx, r, var));
    }
    return tl_monic(ctx, tl_mul(ctx, c, g));
}

bool tl_equal(const TermList& a, const TermList& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i].first == b[i].first) || a[i].second != b[i].second)
            return false;
    return true;
}

std::int64_t mod_reduce(const Integer& n, std::int64_t p)
{
    Integer r = n % p;
    if (r < 0)
        r += p;
    return static_cast<std::int64_t>(r);
}

std::int64_t gfp_inv(std::int64_t a, std::int64_t p)
{
    // extended Euclid
    std::int64_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1)
        fail(errc::internal, "inverse of a non-unit residue");
    if (t < 0)
        t += p;
    return t;
}

} // namespace

// ---------------------------------------------------------------------------
// Scalar: nested value comparisons
// ---------------------------------------------------------------------------

bool Scalar::PolyV::operator==(const PolyV& o) const
{
    return tl_equal(terms, o.terms);
}

bool Scalar::FracV::operator==(const FracV& o) const
{
    return tl_equal(num, o.num) && tl_equal(den, o.den);
}

bool Scalar::DualV::operator==(const DualV& o) const
{
    return ab[0] == o.ab[0] && ab[1] == o.ab[1];
}

// ---------------------------------------------------------------------------
// Scalar: construction
// ---------------------------------------------------------------------------

namespace {

PolyCtx poly_ctx(const RingPtr& ring)
{
    return PolyCtx{ring->base(), ring->var_count()};
}

} // namespace

Scalar Scalar::zero(const RingPtr& ring)
{
    switch (ring->kind()) {
        case RingKind::Rationals: return Scalar(ring, RatV{Rational(0)});
        case RingKind::PrimeField: return Scalar(ring, GFpV{0});
        case RingKind::Polynomial: return Scalar(ring, PolyV{});
        case RingKind::RationalFunctions:
            return Scalar(ring, FracV{{}, tl_one(poly_ctx(ring))});
        case RingKind::DualNumbers:
            return Scalar(ring, DualV{{zero(ring->base()), zero(ring->base())}});
    }
    fail(errc::internal, "unreachable ring kind");
}

Scalar Scalar::one(const RingPtr& ring)
{
    return from_int(ring, 1);
}

Scalar Scalar::from_int(const RingPtr& ring, long long n)
{
    return from_integer(ring, Integer(n));
}

Scalar Scalar::from_integer(const RingPtr& ring, const Integer& n)
{
    switch (ring->kind()) {
        case RingKind::Rationals: return Scalar(ring, RatV{Rational(n)});
        case RingKind::PrimeField: return Scalar(ring, GFpV{mod_reduce(n, ring->prime())});
        case RingKind::Polynomial: {
            auto ctx = poly_ctx(ring);
            return Scalar(ring, PolyV{tl_const(ctx, from_integer(ring->base(), n))});
        }
        case RingKind::RationalFunctions: {
            auto ctx = poly_ctx(ring);
            return Scalar(ring, FracV{tl_const(ctx, from_integer(ring->base(), n)), tl_one(ctx)});
        }
        case RingKind::DualNumbers:
            return Scalar(ring, DualV{{from_integer(ring->base(), n), zero(ring->base())}});
    }
    fail(errc::internal, "unreachable ring kind");
}

Scalar Scalar::rational(const RingPtr& ring, Rational q)
{
    if (ring->kind() != RingKind::Rationals)
        fail(errc::internal, "rational() requires the rationals");
    return Scalar(ring, RatV{std::move(q)});
}

Scalar Scalar::variable(const RingPtr& ring, std::size_t var)
{
    if (ring->kind() != RingKind::Polynomial && ring->kind() != RingKind::RationalFunctions)
        fail(errc::internal, "variable() requires a polynomial or rational-function ring");
    if (var >= ring->var_count())
        fail(errc::missing_variable, "variable index out of range");
    auto ctx = poly_ctx(ring);
    Monomial m(ctx.nvars);
    m.exps[var] = 1;
    TermList t{{m, one(ctx.base)}};
    if (ring->kind() == RingKind::Polynomial)
        return Scalar(ring, PolyV{std::move(t)});
    return Scalar(ring, FracV{std::move(t), tl_one(ctx)});
}

Scalar Scalar::epsilon(const RingPtr& ring)
{
    if (ring->kind() != RingKind::DualNumbers)
        fail(errc::internal, "epsilon() requires a dual-number ring");
    return Scalar(ring, DualV{{zero(ring->base()), one(ring->base())}});
}

Scalar Scalar::dual(const RingPtr& ring, Scalar constant_part, Scalar eps_part)
{
    if (ring->kind() != RingKind::DualNumbers)
        fail(errc::internal, "dual() requires a dual-number ring");
    if (!same_ring(constant_part.ring(), ring->base()) || !same_ring(eps_part.ring(), ring->base()))
        fail(errc::ring_mismatch, "dual-number parts must live in the base field");
    return Scalar(ring, DualV{{std::move(constant_part), std::move(eps_part)}});
}

Scalar Scalar::polynomial(const RingPtr& ring, TermList terms)
{
    if (ring->kind() != RingKind::Polynomial)
        fail(errc::internal, "polynomial() requires a polynomial ring");
    auto ctx = poly_ctx(ring);
    for (auto& [m, c] : terms)
        if (!same_ring(c.ring(), ctx.base))
            fail(errc::ring_mismatch, "polynomial coefficient in the wrong ring");
    return Scalar(ring, PolyV{tl_normalize(ctx, std::move(terms))});
}

Scalar Scalar::fraction(const RingPtr& ring, TermList num, TermList den)
{
    if (ring->kind() != RingKind::RationalFunctions)
        fail(errc::internal, "fraction() requires a rational-function ring");
    auto ctx = poly_ctx(ring);
    num = tl_normalize(ctx, std::move(num));
    den = tl_normalize(ctx, std::move(den));
    if (den.empty())
        fail(errc::internal, "rational function with zero denominator");
    if (num.empty())
        return Scalar(ring, FracV{{}, tl_one(ctx)});
    TermList g = tl_gcd(ctx, num, den);
    if (!tl_is_one(g)) {
        num = tl_divexact(ctx, num, g);
        den = tl_divexact(ctx, den, g);
    }
    Scalar lead_inv = tl_lc(den).inv();
    num = tl_scale(num, lead_inv);
    den = tl_scale(den, lead_inv);
    return Scalar(ring, FracV{std::move(num), std::move(den)});
}

// ---------------------------------------------------------------------------
// Scalar: predicates and accessors
// ---------------------------------------------------------------------------

bool Scalar::is_zero() const
{
    switch (ring_->kind()) {
        case RingKind::Rationals: return std::get<RatV>(v_).q.is_zero();
        case RingKind::PrimeField: return std::get<GFpV>(v_).v == 0;
        case RingKind::Polynomial: return std::get<PolyV>(v_).terms.empty();
        case RingKind::RationalFunctions: return std::get<FracV>(v_).num.empty();
        case RingKind::DualNumbers: {
            const auto& d = std::get<DualV>(v_);
            return d.ab[0].is_zero() && d.ab[1].is_zero();
        }
    }
    return false;
}

bool Scalar::is_one() const
{
    switch (ring_->kind()) {
        case RingKind::Rationals: return std::get<RatV>(v_).q == 1;
        case RingKind::PrimeField: return std::get<GFpV>(v_).v == 1;
        case RingKind::Polynomial: return tl_is_one(std::get<PolyV>(v_).terms);
        case RingKind::RationalFunctions: {
            const auto& f = std::get<FracV>(v_);
            return tl_is_one(f.num) && tl_is_one(f.den);
        }
        case RingKind::DualNumbers: {
            const auto& d = std::get<DualV>(v_);
            return d.ab[0].is_one() && d.ab[1].is_zero();
        }
    }
    return false;
}

bool Scalar::is_unit() const
{
    switch (ring_->kind()) {
        case RingKind::Rationals:
        case RingKind::PrimeField:
        case RingKind::RationalFunctions: return !is_zero();
        case RingKind::Polynomial: {
            const auto& t = std::get<PolyV>(v_).terms;
            return t.size() == 1 && t.front().first.is_constant() && t.front().second.is_unit();
        }
        case RingKind::DualNumbers: return std::get<DualV>(v_).ab[0].is_unit();
    }
    return false;
}

const Rational& Scalar::rational_value() const
{
    if (ring_->kind() != RingKind::Rationals)
        fail(errc::internal, "rational_value() on a non-rational scalar");
    return std::get<RatV>(v_).q;
}

std::int64_t Scalar::residue() const
{
    if (ring_->kind() != RingKind::PrimeField)
        fail(errc::internal, "residue() on a non-prime-field scalar");
    return std::get<GFpV>(v_).v;
}

const TermList& Scalar::poly_terms() const
{
    if (ring_->kind() != RingKind::Polynomial)
        fail(errc::internal, "poly_terms() on a non-polynomial scalar");
    return std::get<PolyV>(v_).terms;
}

const TermList& Scalar::numerator_terms() const
{
    if (ring_->kind() != RingKind::RationalFunctions)
        fail(errc::internal, "numerator_terms() on a non-rational-function scalar");
    return std::get<FracV>(v_).num;
}

const TermList& Scalar::denominator_terms() const
{
    if (ring_->kind() != RingKind::RationalFunctions)
        fail(errc::internal, "denominator_terms() on a non-rational-function scalar");
    return std::get<FracV>(v_).den;
}

Scalar Scalar::constant_part() const
{
    if (ring_->kind() != RingKind::DualNumbers)
        fail(errc::internal, "constant_part() on a non-dual scalar");
    return std::get<DualV>(v_).ab[0];
}

Scalar Scalar::eps_part() const
{
    if (ring_->kind() != RingKind::DualNumbers)
        fail(errc::internal, "eps_part() on a non-dual scalar");
    return std::get<DualV>(v_).ab[1];
}

bool Scalar::is_constant_poly() const
{
    const auto& t = poly_terms();
    return t.empty() || (t.size() == 1 && t.front().first.is_constant());
}

Scalar Scalar::constant_coefficient() const
{
    return coefficient(Monomial(ring_->var_count()));
}

Scalar Scalar::coefficient(const Monomial& m) const
{
    for (const auto& [mm, c] : poly_terms())
        if (mm == m)
            return c;
    return Scalar::zero(ring_->base());
}

std::vector<Monomial> Scalar::monomials() const
{
    std::vector<Monomial> out;
    for (const auto& [m, c] : poly_terms())
        out.push_back(m);
    return out;
}

Scalar Scalar::evaluate(const std::vector<Scalar>& values) const
{
    const auto& base = ring_->base();
    if (values.size() != ring_->var_count())
        fail(errc::missing_variable, "evaluation point must assign every variable");
    for (const auto& v : values)
        if (!same_ring(v.ring(), base))
            fail(errc::ring_mismatch, "evaluation values must live in the base field");
    Scalar acc = Scalar::zero(base);
    for (const auto& [m, c] : poly_terms()) {
        Scalar term = c;
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            for (std::uint32_t e = 0; e < m.exps[i]; ++e)
                term = term * values[i];
        acc = acc + term;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Scalar: arithmetic
// ---------------------------------------------------------------------------

namespace {

void check_same_ring(const Scalar& a, const Scalar& b)
{
    if (!same_ring(a.ring(), b.ring()))
        fail(errc::ring_mismatch,
             "scalar rings differ: " + a.ring()->description() + " vs " + b.ring()->description());
}

} // namespace

Scalar Scalar::operator-() const
{
    switch (ring_->kind()) {
        case RingKind::Rationals: return Scalar(ring_, RatV{-std::get<RatV>(v_).q});
        case RingKind::PrimeField: {
            auto v = std::get<GFpV>(v_).v;
            return Scalar(ring_, GFpV{v == 0 ? 0 : ring_->prime() - v});
        }
        case RingKind::Polynomial: return Scalar(ring_, PolyV{tl_neg(std::get<PolyV>(v_).terms)});
        case RingKind::RationalFunctions: {
            const auto& f = std::get<FracV>(v_);
            return Scalar(ring_, FracV{tl_neg(f.num), f.den});
        }
        case RingKind::DualNumbers: {
            const auto& d = std::get<DualV>(v_);
            return Scalar(ring_, DualV{{-d.ab[0], -d.ab[1]}});
        }
    }
    fail(errc::internal, "unreachable ring kind");
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
    check_same_ring(a, b);
    const auto& ring = a.ring_;
    switch (ring->kind()) {
        case RingKind::Rationals:
            return Scalar(ring, Scalar::RatV{std::get<Scalar::RatV>(a.v_).q +
                                             std::get<Scalar::RatV>(b.v_).q});
        case RingKind::PrimeField: {
            auto s = std::get<Scalar::GFpV>(a.v_).v + std::get<Scalar::GFpV>(b.v_).v;
            if (s >= ring->prime())
                s -= ring->prime();
            return Scalar(ring, Scalar::GFpV{s});
        }
        case RingKind::Polynomial: {
            auto ctx = poly_ctx(ring);
            return Scalar(ring, Scalar::PolyV{tl_add(ctx, std::get<Scalar::PolyV>(a.v_).terms,
                                                     std::get<Scalar::PolyV>(b.v_).terms)});
        }
        case RingKind::RationalFunctions: {
            auto ctx = poly_ctx(ring);
            const auto& fa = std::get<Scalar::FracV>(a.v_);
            const auto& fb = std::get<Scalar::FracV>(b.v_);
            TermList num = tl_add(ctx, tl_mul(ctx, fa.num, fb.den), tl_mul(ctx, fb.num, fa.den));
            TermList den = tl_mul(ctx, fa.den, fb.den);
            return Scalar::fraction(ring, std::move(num), std::move(den));
        }
        case RingKind::DualNumbers: {
            const auto& da = std::get<Scalar::DualV>(a.v_);
            const auto& db = std::get<Scalar::DualV>(b.v_);
            return Scalar(ring, Scalar::DualV{{da.ab[0] + db.ab[0], da.ab[1] + db.ab[1]}});
        }
    }
    fail(errc::internal, "unreachable ring kind");
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
    return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    check_same_ring(a, b);
    const auto& ring = a.ring_;
    switch (ring->kind()) {
        case RingKind::Rationals:
            return Scalar(ring, Scalar::RatV{std::get<Scalar::RatV>(a.v_).q *
                                             std::get<Scalar::RatV>(b.v_).q});
        case RingKind::PrimeField: {
            auto p = ring->prime();
            auto prod = (std::get<Scalar::GFpV>(a.v_).v * std::get<Scalar::GFpV>(b.v_).v) % p;
            return Scalar(ring, Scalar::GFpV{prod});
        }
        case RingKind::Polynomial: {
            auto ctx = poly_ctx(ring);
            return Scalar(ring, Scalar::PolyV{tl_mul(ctx, std::get<Scalar::PolyV>(a.v_).terms,
                                                     std::get<Scalar::PolyV>(b.v_).terms)});
        }
        case RingKind::RationalFunctions: {
            auto ctx = poly_ctx(ring);
            const auto& fa = std::get<Scalar::FracV>(a.v_);
            const auto& fb = std::get<Scalar::FracV>(b.v_);
            return Scalar::fraction(ring, tl_mul(ctx, fa.num, fb.num),
                                    tl_mul(ctx, fa.den, fb.den));
        }
        case RingKind::DualNumbers: {
            const auto& da = std::get<Scalar::DualV>(a.v_);
            const auto& db = std::get<Scalar::DualV>(b.v_);
            return Scalar(ring, Scalar::DualV{{da.ab[0] * db.ab[0],
                                               da.ab[0] * db.ab[1] + da.ab[1] * db.ab[0]}});
        }
    }
    fail(errc::internal, "unreachable ring kind");
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (!a.valid() || !b.valid())
        return a.valid() == b.valid();
    if (!same_ring(a.ring(), b.ring()))
        return false;
    return a.v_ == b.v_;
}

Scalar Scalar::inv() const
{
    switch (ring_->kind()) {
        case RingKind::Rationals: {
            const auto& q = std::get<RatV>(v_).q;
            if (q.is_zero())
                fail(errc::internal, "inverse of zero");
            return Scalar(ring_, RatV{1 / q});
        }
        case RingKind::PrimeField: {
            auto v = std::get<GFpV>(v_).v;
            if (v == 0)
                fail(errc::internal, "inverse of zero");
            return Scalar(ring_, GFpV{gfp_inv(v, ring_->prime())});
        }
        case RingKind::Polynomial: {
            if (!is_unit())
                fail(errc::internal, "inverse of a non-unit polynomial");
            auto ctx = poly_ctx(ring_);
            return Scalar(ring_, PolyV{tl_const(ctx, std::get<PolyV>(v_).terms.front().second.inv())});
        }
        case RingKind::RationalFunctions: {
            const auto& f = std::get<FracV>(v_);
            if (f.num.empty())
                fail(errc::internal, "inverse of zero");
            return fraction(ring_, f.den, f.num);
        }
        case RingKind::DualNumbers: {
            const auto& d = std::get<DualV>(v_);
            Scalar a_inv = d.ab[0].inv();
            return Scalar(ring_, DualV{{a_inv, -(a_inv * a_inv * d.ab[1])}});
        }
    }
    fail(errc::internal, "unreachable ring kind");
}

Scalar Scalar::divide_exact(const Scalar& d) const
{
    check_same_ring(*this, d);
    if (ring_->kind() == RingKind::Polynomial) {
        auto ctx = poly_ctx(ring_);
        return Scalar(ring_, PolyV{tl_divexact(ctx, std::get<PolyV>(v_).terms,
                                               std::get<PolyV>(d.v_).terms)});
    }
    return *this * d.inv();
}

Scalar poly_gcd(const Scalar& a, const Scalar& b)
{
    check_same_ring(a, b);
    if (a.ring()->kind() != RingKind::Polynomial)
        fail(errc::internal, "poly_gcd() requires a polynomial ring");
    auto ctx = poly_ctx(a.ring());
    return Scalar::polynomial(a.ring(), tl_gcd(ctx, a.poly_terms(), b.poly_terms()));
}

Scalar embed_scalar(const Scalar& s, const RingPtr& target)
{
    if (same_ring(s.ring(), target))
        return s;
    switch (target->kind()) {
        case RingKind::Polynomial:
            if (same_ring(s.ring(), target->base())) {
                auto ctx = poly_ctx(target);
                return Scalar::polynomial(target, tl_const(ctx, s));
            }
            break;
        case RingKind::RationalFunctions:
            if (same_ring(s.ring(), target->base())) {
                auto ctx = poly_ctx(target);
                return Scalar::fraction(target, tl_const(ctx, s), tl_one(ctx));
            }
            // polynomial ring into its fraction field
            if (s.ring()->kind() == RingKind::Polynomial &&
                same_ring(s.ring()->base(), target->base()) &&
                s.ring()->vars() == target->vars()) {
                auto ctx = poly_ctx(target);
                return Scalar::fraction(target, s.poly_terms(), tl_one(ctx));
            }
            break;
        case RingKind::DualNumbers:
            if (same_ring(s.ring(), target->base()))
                return Scalar::dual(target, s, Scalar::zero(target->base()));
            break;
        default: break;
    }
    fail(errc::unsupported_embedding,
         "no embedding of " + s.ring()->description() + " into " + target->description());
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

bool needs_parens_as_factor(const std::string& s)
{
    return s.find(' ') != std::string::npos;
}

std::string render_terms(const RingPtr& ring, const TermList& terms)
{
    if (terms.empty())
        return "0";
    const auto& vars = ring->vars();
    const bool signed_base = ring->base()->kind() == RingKind::Rationals;
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        bool neg = false;
        Scalar coeff = c;
        if (signed_base && coeff.rational_value() < 0) {
            neg = true;
            coeff = -coeff;
        }
        std::string mono;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars[i];
            if (m.exps[i] > 1)
                mono += "^" + std::to_string(m.exps[i]);
        }
        std::string cs;
        if (mono.empty()) {
            cs = coeff.str();
            if (needs_parens_as_factor(cs))
                cs = "(" + cs + ")";
        } else if (!coeff.is_one()) {
            cs = coeff.str();
            if (needs_parens_as_factor(cs))
                cs = "(" + cs + ")";
            cs += "*";
        }
        std::string term = cs + mono;
        if (first) {
            out = (neg ? "-" : "") + term;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + term;
        }
    }
    return out;
}

} // namespace

std::string Scalar::str() const
{
    switch (ring_->kind()) {
        case RingKind::Rationals: return std::get<RatV>(v_).q.str();
        case RingKind::PrimeField: return std::to_string(std::get<GFpV>(v_).v);
        case RingKind::Polynomial: return render_terms(ring_, std::get<PolyV>(v_).terms);
        case RingKind::RationalFunctions: {
            const auto& f = std::get<FracV>(v_);
            std::string num = render_terms(ring_, f.num);
            if (tl_is_one(f.den))
                return num;
            return "(" + num + ")/(" + render_terms(ring_, f.den) + ")";
        }
        case RingKind::DualNumbers: {
            const auto& d = std::get<DualV>(v_);
            const Scalar& a = d.ab[0];
            Scalar b = d.ab[1];
            if (b.is_zero())
                return a.str();
            bool neg = false;
            if (b.ring()->kind() == RingKind::Rationals && b.rational_value() < 0) {
                neg = true;
                b = -b;
            }
            std::string bs;
            if (b.is_one()) {
                bs = "eps";
            } else {
                bs = b.str();
                if (needs_parens_as_factor(bs))
                    bs = "(" + bs + ")";
                bs += "*eps";
            }
            if (a.is_zero())
                return (neg ? "-" : "") + bs;
            return a.str() + (neg ? " - " : " + ") + bs;
        }
    }
    fail(errc::internal, "unreachable ring kind");
}

// ---------------------------------------------------------------------------
// Parsing: small expression evaluator over the target ring
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const RingPtr& ring;
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek()
    {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void error(const std::string& what)
    {
        fail(errc::parse_error, what + " at offset " + std::to_string(pos) + " in '" + text + "'");
    }

    Integer parse_number()
    {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            error("expected a number");
        return Integer(text.substr(start, pos - start));
    }

    Scalar resolve_identifier(const RingPtr& r, const std::string& name)
    {
        if (r->kind() == RingKind::Polynomial || r->kind() == RingKind::RationalFunctions) {
            const auto& vars = r->vars();
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name)
                    return Scalar::variable(r, i);
            return embed_scalar(resolve_identifier(r->base(), name), r);
        }
        if (r->kind() == RingKind::DualNumbers) {
            if (name == "eps")
                return Scalar::epsilon(r);
            return embed_scalar(resolve_identifier(r->base(), name), r);
        }
        error("unknown identifier '" + name + "'");
    }

    Scalar parse_atom()
    {
        skip_ws();
        if (pos >= text.size())
            error("unexpected end of input");
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Scalar::from_integer(ring, parse_number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                         text[pos] == '_'))
                ++pos;
            return resolve_identifier(ring, text.substr(start, pos - start));
        }
        if (c == '(') {
            ++pos;
            Scalar v = parse_expr();
            if (!eat(')'))
                error("expected ')'");
            return v;
        }
        error("unexpected character");
    }

    Scalar parse_factor()
    {
        Scalar v = parse_atom();
        while (peek() == '^') {
            eat('^');
            Integer e = parse_number();
            if (e < 0 || e > 100000)
                error("exponent out of range");
            Scalar acc = Scalar::one(ring);
            for (Integer i = 0; i < e; ++i)
                acc = acc * v;
            v = acc;
        }
        return v;
    }

    Scalar parse_term()
    {
        Scalar v = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                eat('*');
                v = v * parse_factor();
            } else if (c == '/') {
                eat('/');
                Scalar d = parse_factor();
                if (ring->kind() == RingKind::Polynomial) {
                    if (!d.is_unit())
                        error("division by a non-unit in a polynomial ring");
                    v = v * d.inv();
                } else {
                    if (d.is_zero())
                        error("division by zero");
                    if (!d.is_unit())
                        error("division by a non-unit");
                    v = v * d.inv();
                }
            } else {
                break;
            }
        }
        return v;
    }

    Scalar parse_expr()
    {
        bool neg = false;
        if (peek() == '-') {
            eat('-');
            neg = true;
        } else if (peek() == '+') {
            eat('+');
        }
        Scalar v = parse_term();
        if (neg)
            v = -v;
        while (true) {
            char c = peek();
            if (c == '+') {
                eat('+');
                v = v + parse_term();
            } else if (c == '-') {
                eat('-');
                v = v - parse_term();
            } else {
                break;
            }
        }
        return v;
    }
};

} // namespace

Scalar Scalar::parse(const RingPtr& ring, const std::string& text)
{
    Parser p{ring, text};
    Scalar v;
    try {
        v = p.parse_expr();
    } catch (const Error& e) {
        if (e.code() == errc::parse_error)
            throw;
        fail(errc::parse_error, std::string("while parsing '") + text + "': " + e.what());
    }
    p.skip_ws();
    if (p.pos != text.size())
        p.error("trailing characters");
    return v;
}

} // namespace pcx
