#include <doctest.h>

#include "pcx/errors.hpp"
#include "pcx/extension.hpp"
#include "support/gen.hpp"

using namespace pcx;

namespace {

Complex single(const RingPtr& r, int degree, std::size_t rank = 1)
{
    return Complex(r, degree, degree, {{degree, rank}}, {});
}

Complex two_term(const RingPtr& r, int lo, const char* entry)
{
    std::map<int, std::size_t> ranks{{lo, 1}, {lo + 1, 1}};
    std::map<int, Matrix> diffs;
    Matrix d(r, 1, 1);
    d.set(0, 0, Scalar::parse(r, entry));
    diffs[lo] = std::move(d);
    return Complex(r, lo, lo + 1, ranks, diffs);
}

} // namespace

TEST_CASE("ext dims on documented cases")
{
    auto QQ = Ring::rationals();
    Complex pt = single(QQ, 0);
    auto d1 = ext_dims(pt, pt);
    CHECK(d1.at(0) == 1);

    Complex c = two_term(QQ, 0, "0");
    auto d2 = ext_dims(c, c);
    CHECK(d2.at(-1) == 1);
    CHECK(d2.at(0) == 2);
    CHECK(d2.at(1) == 1);

    Complex acyclic = two_term(QQ, 0, "1");
    for (const auto& [n, d] : ext_dims(acyclic, c))
        CHECK(d == 0);
    for (const auto& [n, d] : ext_dims(c, acyclic))
        CHECK(d == 0);
}

TEST_CASE("shift identity: Ext^n(P, Q[1]) = Ext^(n+1)(P, Q)")
{
    auto QQ = Ring::rationals();
    testgen::Gen gen(QQ, 53);
    for (int i = 0; i < 25; ++i) {
        Complex P = gen.complex(-1, 2, 3).complex;
        Complex Q = gen.complex(0, 2, 3).complex;
        auto base = ext_dims(P, Q);
        auto shifted = ext_dims(P, shift(Q, 1));
        for (int n = -6; n <= 6; ++n) {
            std::size_t lhs = shifted.count(n) ? shifted.at(n) : 0;
            std::size_t rhs = base.count(n + 1) ? base.at(n + 1) : 0;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("postcomposition by a quasi-isomorphism preserves ext dims")
{
    auto QQ = Ring::rationals();
    testgen::Gen gen(QQ, 59);
    for (int i = 0; i < 20; ++i) {
        Complex P = gen.complex(-1, 2, 3).complex;
        Complex M = gen.complex(0, 2, 3).complex;
        auto [Mp, f] = gen.qiso_onto_twin(M);
        REQUIRE(is_qiso(f));
        auto a = ext_dims(P, M);
        auto b = ext_dims(P, Mp);
        for (int n = -6; n <= 6; ++n) {
            std::size_t lhs = a.count(n) ? a.at(n) : 0;
            std::size_t rhs = b.count(n) ? b.at(n) : 0;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("hom Euler characteristic identity")
{
    auto QQ = Ring::rationals();
    testgen::Gen gen(QQ, 61);
    for (int i = 0; i < 20; ++i) {
        Complex P = gen.complex(0, 2, 3).complex;
        Complex Q = gen.complex(0, 2, 3).complex;
        long long chi = 0;
        for (const auto& [n, d] : ext_dims(P, Q))
            chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(d);
        long long expected = 0;
        for (int i2 = P.lo(); i2 <= P.hi(); ++i2)
            for (int j = Q.lo(); j <= Q.hi(); ++j) {
                long long term = static_cast<long long>(P.rank_at(i2)) *
                                 static_cast<long long>(Q.rank_at(j));
                expected += ((j - i2) % 2 == 0 ? 1 : -1) * term;
            }
        CHECK(chi == expected);
    }
}

TEST_CASE("ext class equality is coboundary equality")
{
    auto QQ = Ring::rationals();
    testgen::Gen gen(QQ, 67);
    Complex P = gen.complex(0, 2, 3).complex;
    Complex Q = gen.complex(0, 2, 3).complex;
    GradedMap f = gen.chain_map(P, Q);
    ExtClass a(f);
    ExtClass b(add(f, gen.nullhomotopic(P, Q)));
    CHECK(ext_equal(a, b));
    CHECK(ext_equal(a - b, ExtClass::zero(P, Q, 0)));
    CHECK((a - b).is_zero());
    // different groups are rejected
    CHECK_THROWS_AS(ext_equal(a, ExtClass::zero(P, Q, 1)), Error);
    // non-cocycles are rejected
    GradedMap g = gen.graded_map(P, Q, 0);
    if (!g.is_chain_map())
        CHECK_THROWS_AS(ExtClass{g}, Error);
}

TEST_CASE("truncations keep cohomology on the kept side and kill the rest")
{
    auto QQ = Ring::rationals();
    // tau_ge(0) of {-1:1, 0:1} with zero differential
    Complex c(QQ, -1, 0, {{-1, 1}, {0, 1}}, {});
    Complex t = truncate_ge(c, 0);
    auto dims = cohomology_dims(t);
    CHECK(dims.at(0) == 1);
    CHECK(t.rank_at(-1) == 0);

    // hard cutoff on zero differentials
    Complex z(QQ, 0, 2, {{0, 2}, {1, 1}, {2, 3}}, {});
    Complex le1 = truncate_le(z, 1);
    CHECK(le1.rank_at(0) == 2);
    CHECK(le1.rank_at(1) == 1);
    CHECK(le1.rank_at(2) == 0);

    testgen::Gen gen(QQ, 71);
    for (int i = 0; i < 20; ++i) {
        auto built = gen.complex(-2, 3, 3);
        const Complex& x = built.complex;
        auto full = cohomology_dims(x);
        int cut = x.lo() + static_cast<int>(gen.below(4));
        Complex below = truncate_le(x, cut);
        CHECK_NOTHROW(validate(below));
        auto bd = cohomology_dims(below);
        for (int n = x.lo() - 1; n <= x.hi() + 1; ++n) {
            std::size_t expect = n <= cut && full.count(n) ? full.at(n) : 0;
            std::size_t got = bd.count(n) ? bd.at(n) : 0;
            CHECK(got == expect);
        }
        Complex above = truncate_ge(x, cut);
        CHECK_NOTHROW(validate(above));
        auto ad = cohomology_dims(above);
        for (int n = x.lo() - 1; n <= x.hi() + 1; ++n) {
            std::size_t expect = n >= cut && full.count(n) ? full.at(n) : 0;
            std::size_t got = ad.count(n) ? ad.at(n) : 0;
            CHECK(got == expect);
        }
        // tau_le at the top is the whole complex up to quasi-isomorphism
        auto top = cohomology_dims(truncate_le(x, x.hi()));
        for (int n = x.lo(); n <= x.hi(); ++n)
            CHECK((top.count(n) ? top.at(n) : 0) == (full.count(n) ? full.at(n) : 0));
    }
}

TEST_CASE("tor amplitude over fields and dual numbers")
{
    auto QQ = Ring::rationals();
    auto amp0 = tor_amplitude(single(QQ, 0));
    REQUIRE(amp0);
    CHECK(amp0->first == 0);
    CHECK(amp0->second == 0);

    auto D = Ring::dual_numbers(QQ);
    Complex eps = two_term(D, -1, "eps");
    auto amp1 = tor_amplitude(eps);
    REQUIRE(amp1);
    CHECK(amp1->first == -1);
    CHECK(amp1->second == 0);

    Complex contractible = two_term(D, -1, "1");
    CHECK_FALSE(tor_amplitude(contractible).has_value());

    auto P = Ring::polynomial(QQ, {"x"});
    CHECK_THROWS_AS(tor_amplitude(single(P, 0)), Error);

    // truncation stays a field-only operation
    CHECK_THROWS_AS(truncate_le(eps, 0), Error);
    CHECK_THROWS_AS(truncate_ge(eps, 0), Error);

    // shift law
    testgen::Gen gen(QQ, 73);
    for (int i = 0; i < 15; ++i) {
        Complex c = gen.complex(-1, 3, 3, true).complex;
        auto amp = tor_amplitude(c);
        if (!amp)
            continue;
        for (int k = -2; k <= 2; ++k) {
            auto s = tor_amplitude(shift(c, k));
            REQUIRE(s);
            CHECK(s->first == amp->first - k);
            CHECK(s->second == amp->second - k);
        }
    }
}

TEST_CASE("base change embeddings")
{
    auto QQ = Ring::rationals();
    testgen::Gen gen(QQ, 79);
    Complex c = gen.complex(0, 2, 3).complex;
    CHECK(base_change(c, QQ) == c);

    auto K = Ring::rational_functions(QQ, {"u"});
    Complex cK = base_change(c, K);
    CHECK_NOTHROW(validate(cK));

    auto P = Ring::polynomial(QQ, {"t"});
    Complex cP = base_change(c, P);
    std::map<int, std::size_t> back_ranks;
    std::map<int, Matrix> back_diffs;
    for (int n = cP.lo(); n <= cP.hi(); ++n) {
        if (cP.rank_at(n) > 0)
            back_ranks[n] = cP.rank_at(n);
        Matrix d = cP.diff_at(n);
        if (d.rows() > 0 && d.cols() > 0)
            back_diffs[n] = evaluate(d, std::vector<Scalar>{Scalar::zero(QQ)});
    }
    CHECK(Complex(QQ, cP.lo(), cP.hi(), back_ranks, back_diffs) == c);

    auto D = Ring::dual_numbers(QQ);
    CHECK_THROWS_AS(base_change(c, D), Error);
    CHECK_THROWS_AS(base_change(c, Ring::prime_field(5)), Error);
}

TEST_CASE("ext dims are stable under flat base change to k(u)")
{
    auto QQ = Ring::rationals();
    auto K = Ring::rational_functions(QQ, {"u"});
    testgen::Gen gen(QQ, 83);
    for (int i = 0; i < 10; ++i) {
        Complex P = gen.complex(0, 2, 2).complex;
        Complex Q = gen.complex(0, 2, 2).complex;
        auto over_k = ext_dims(P, Q);
        auto over_ku = ext_dims(base_change(P, K), base_change(Q, K));
        for (int n = -6; n <= 6; ++n) {
            std::size_t lhs = over_k.count(n) ? over_k.at(n) : 0;
            std::size_t rhs = over_ku.count(n) ? over_ku.at(n) : 0;
            CHECK(lhs == rhs);
        }
    }
}
