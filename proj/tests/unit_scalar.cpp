#include <doctest.h>

#include "pcx/errors.hpp"
#include "pcx/linalg.hpp"
#include "pcx/scalar.hpp"

using namespace pcx;

TEST_CASE("ring construction enforces invariants")
{
    CHECK_NOTHROW(Ring::prime_field(2));
    CHECK_NOTHROW(Ring::prime_field(7919));
    CHECK_THROWS_AS(Ring::prime_field(1), Error);
    CHECK_THROWS_AS(Ring::prime_field(4), Error);
    CHECK_THROWS_AS(Ring::prime_field(91), Error); // 7 * 13

    auto QQ = Ring::rationals();
    CHECK_THROWS_AS(Ring::polynomial(QQ, {}), Error);
    CHECK_THROWS_AS(Ring::polynomial(QQ, {"x", "x"}), Error);
    CHECK_THROWS_AS(Ring::polynomial(QQ, {"2bad"}), Error);
    CHECK_THROWS_AS(Ring::polynomial(QQ, {"eps"}), Error);

    // polynomial / rational-function / dual bases must be field kinds
    auto Qx = Ring::polynomial(QQ, {"x"});
    CHECK_THROWS_AS(Ring::polynomial(Qx, {"y"}), Error);
    CHECK_THROWS_AS(Ring::dual_numbers(Qx), Error);
    CHECK_NOTHROW(Ring::polynomial(Ring::rational_functions(QQ, {"u"}), {"t"}));

    CHECK(same_ring(Ring::prime_field(5), Ring::prime_field(5)));
    CHECK_FALSE(same_ring(Ring::prime_field(5), Ring::prime_field(7)));
    CHECK_FALSE(same_ring(QQ, Qx));
}

TEST_CASE("rational scalars are canonical reduced fractions")
{
    auto QQ = Ring::rationals();
    Scalar a = Scalar::rational(QQ, Rational(6, 8));
    Scalar b = Scalar::rational(QQ, Rational(3, 4));
    CHECK(a == b);
    CHECK(a.str() == "3/4");
    CHECK(Scalar::from_int(QQ, -2).str() == "-2");
    CHECK((a + b).str() == "3/2");
    CHECK((a * b).str() == "9/16");
    CHECK((a - a).is_zero());
    CHECK(a.inv().str() == "4/3");
}

TEST_CASE("prime field arithmetic stays in [0, p)")
{
    auto F = Ring::prime_field(7);
    Scalar five = Scalar::from_int(F, 5);
    Scalar four = Scalar::from_int(F, 11); // 11 mod 7
    CHECK(four.str() == "4");
    CHECK((five + four).str() == "2");
    CHECK((five * four).str() == "6");
    CHECK((-five).str() == "2");
    CHECK(five.inv().str() == "3"); // 5 * 3 = 15 = 1 mod 7
    CHECK(Scalar::from_int(F, -1).str() == "6");
}

TEST_CASE("polynomials store sorted terms without zero coefficients")
{
    auto QQ = Ring::rationals();
    auto R = Ring::polynomial(QQ, {"x", "y"});
    Scalar p = Scalar::parse(R, "y + x + x^2*y - y");
    CHECK(p.str() == "x^2*y + x");
    CHECK(p.poly_terms().size() == 2);
    // graded lex: x^2*y (degree 3) before x (degree 1); x before y at equal degree
    Scalar q = Scalar::parse(R, "y + x");
    CHECK(q.str() == "x + y");
    Scalar z = p - p;
    CHECK(z.is_zero());
    CHECK(z.poly_terms().empty());
    CHECK(Scalar::zero(R).str() == "0");

    Scalar c = Scalar::parse(R, "3/2*x - 1");
    CHECK(c.str() == "3/2*x - 1");
    CHECK(Scalar::parse(R, c.str()) == c);
}

TEST_CASE("rational functions normalize by gcd with monic denominator")
{
    auto QQ = Ring::rationals();
    auto K = Ring::rational_functions(QQ, {"u"});
    Scalar f = Scalar::parse(K, "(u^2 - 1)/(u - 1)");
    CHECK(f.str() == "u + 1");
    Scalar g = Scalar::parse(K, "u/(2*u + 2)");
    // denominator made monic: u/(2u+2) = (1/2 u)/(u + 1)
    CHECK(g.str() == "(1/2*u)/(u + 1)");
    CHECK(g * g.inv() == Scalar::one(K));
    CHECK(Scalar::parse(K, g.str()) == g);
    // canonical equality
    CHECK(Scalar::parse(K, "(u^2 + u)/(u^2 - 1)") == Scalar::parse(K, "u/(u - 1)"));
}

TEST_CASE("dual numbers square to zero on eps")
{
    auto QQ = Ring::rationals();
    auto D = Ring::dual_numbers(QQ);
    Scalar e = Scalar::epsilon(D);
    CHECK((e * e).is_zero());
    Scalar d = Scalar::parse(D, "2 + 3*eps");
    CHECK((d * d).str() == "4 + 12*eps");
    CHECK(d.inv().str() == "1/2 - 3/4*eps");
    CHECK((d * d.inv()).is_one());
    CHECK(d.constant_part().str() == "2");
    CHECK(d.eps_part().str() == "3");
    CHECK_FALSE(e.is_unit());
    CHECK_THROWS_AS(e.inv(), Error);
    CHECK(D->is_field() == false);
}

TEST_CASE("multivariate gcd via primitive pseudo-remainders")
{
    auto QQ = Ring::rationals();
    auto R = Ring::polynomial(QQ, {"x", "y"});
    auto g1 = poly_gcd(Scalar::parse(R, "x^2 - y^2"), Scalar::parse(R, "x^2 + 2*x*y + y^2"));
    CHECK(g1 == Scalar::parse(R, "x + y"));
    auto g2 = poly_gcd(Scalar::parse(R, "x*y"), Scalar::parse(R, "y^2"));
    CHECK(g2 == Scalar::parse(R, "y"));
    auto g3 = poly_gcd(Scalar::parse(R, "x + 1"), Scalar::parse(R, "y + 1"));
    CHECK(g3 == Scalar::one(R));
    CHECK(poly_gcd(Scalar::zero(R), Scalar::parse(R, "2*x")) == Scalar::parse(R, "x"));

    // gcd over GF(5) coefficients
    auto R5 = Ring::polynomial(Ring::prime_field(5), {"x"});
    auto g4 = poly_gcd(Scalar::parse(R5, "x^2 + 1"), Scalar::parse(R5, "x + 2"));
    CHECK(g4 == Scalar::parse(R5, "x + 2")); // x^2 + 1 = (x+2)(x+3) mod 5
    CHECK(poly_gcd(Scalar::parse(R5, "x^2 + 4"), Scalar::parse(R5, "x + 2")) == Scalar::one(R5));
}

TEST_CASE("parse/render round trip on random scalars per ring")
{
    auto QQ = Ring::rationals();
    auto F = Ring::prime_field(13);
    auto P = Ring::polynomial(QQ, {"x", "y"});
    auto K = Ring::rational_functions(QQ, {"u"});
    auto D = Ring::dual_numbers(Ring::prime_field(5));

    SeedStream rng(20240809);
    auto random_int_scalar = [&](const RingPtr& r) {
        long long v = static_cast<long long>(rng.next_below(19)) - 9;
        return Scalar::from_int(r, v);
    };
    for (int i = 0; i < 50; ++i) {
        Scalar q = Scalar::rational(QQ, Rational(static_cast<long long>(rng.next_below(41)) - 20,
                                                 1 + static_cast<long long>(rng.next_below(9))));
        CHECK(Scalar::parse(QQ, q.str()) == q);

        Scalar f = random_int_scalar(F);
        CHECK(Scalar::parse(F, f.str()) == f);

        Scalar p = random_int_scalar(P);
        for (int t = 0; t < 3; ++t)
            p = p * Scalar::variable(P, rng.next_below(2)) + random_int_scalar(P);
        CHECK(Scalar::parse(P, p.str()) == p);

        Scalar num = random_int_scalar(K) * Scalar::variable(K, 0) + random_int_scalar(K);
        Scalar den = Scalar::variable(K, 0) + random_int_scalar(K);
        if (!den.is_zero()) {
            Scalar k = num * den.inv();
            CHECK(Scalar::parse(K, k.str()) == k);
        }

        Scalar d = Scalar::dual(D, Scalar::from_int(D->base(), rng.next_below(5)),
                                Scalar::from_int(D->base(), rng.next_below(5)));
        CHECK(Scalar::parse(D, d.str()) == d);
    }
}

TEST_CASE("parse failures carry PARSE_ERROR")
{
    auto QQ = Ring::rationals();
    auto P = Ring::polynomial(QQ, {"x"});
    for (const char* bad : {"", "1 +", "x", "2^", "(1", "1/0", "3..4", "y*x"}) {
        try {
            Scalar::parse(bad[0] == 'x' || bad[0] == 'y' ? QQ : P, bad);
            CHECK_MESSAGE(false, "expected parse error for: ", bad);
        } catch (const Error& e) {
            CHECK(e.code() == errc::parse_error);
        }
    }
}

TEST_CASE("evaluation substitutes base-field points")
{
    auto QQ = Ring::rationals();
    auto P = Ring::polynomial(QQ, {"t0", "t1"});
    Scalar f = Scalar::parse(P, "t0^2 + t0*t1");
    Scalar v = f.evaluate({Scalar::from_int(QQ, 2), Scalar::from_int(QQ, 3)});
    CHECK(v.str() == "10");
    CHECK_THROWS_AS(f.evaluate({Scalar::from_int(QQ, 2)}), Error);
}
