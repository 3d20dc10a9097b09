#ifndef PCX_SCALAR_HPP
#define PCX_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pcx/ring.hpp"

namespace pcx {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent vector, one slot per ring variable.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}

    std::uint64_t total_degree() const;
    bool is_constant() const;
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    Monomial operator/(const Monomial& other) const; // requires divides(other)==false? caller checks
    bool operator==(const Monomial& other) const { return exps == other.exps; }
};

/// Graded lexicographic order: total degree first, then lexicographic with
/// the first variable most significant. Term lists are kept sorted with the
/// leading monomial first.
bool graded_lex_greater(const Monomial& a, const Monomial& b);

class Scalar;

/// Sorted (graded-lex descending) list of monomial/coefficient pairs.
/// Coefficients live in the base ring and are never zero.
using TermList = std::vector<std::pair<Monomial, Scalar>>;

/// An exact element of a Ring in canonical form: reduced fractions over QQ,
/// residues in [0,p) over GF(p), sorted zero-free term lists for polynomials,
/// gcd-reduced fractions with monic denominator for rational functions, and
/// canonical (constant, eps) pairs for dual numbers. Structural equality is
/// semantic equality.
class Scalar {
public:
    Scalar() = default; // unusable until assigned

    static Scalar zero(const RingPtr& ring);
    static Scalar one(const RingPtr& ring);
    static Scalar from_int(const RingPtr& ring, long long n);
    static Scalar from_integer(const RingPtr& ring, const Integer& n);
    static Scalar rational(const RingPtr& ring, Rational q);
    static Scalar variable(const RingPtr& ring, std::size_t var); // Polynomial / RationalFunctions
    static Scalar epsilon(const RingPtr& ring);                   // DualNumbers
    static Scalar dual(const RingPtr& ring, Scalar constant_part, Scalar eps_part);
    static Scalar polynomial(const RingPtr& ring, TermList terms);
    static Scalar fraction(const RingPtr& ring, TermList num, TermList den);

    const RingPtr& ring() const { return ring_; }
    bool valid() const { return ring_ != nullptr; }

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inv() const; // units only
    /// Exact ring division; raises internal if the quotient does not exist.
    Scalar divide_exact(const Scalar& d) const;

    // --- kind-specific access ------------------------------------------
    const Rational& rational_value() const; // Rationals
    std::int64_t residue() const;           // PrimeField
    const TermList& poly_terms() const;     // Polynomial
    const TermList& numerator_terms() const;   // RationalFunctions
    const TermList& denominator_terms() const; // RationalFunctions
    Scalar constant_part() const; // DualNumbers: a of a + b*eps
    Scalar eps_part() const;      // DualNumbers: b of a + b*eps

    /// Polynomial ring only: true when no variable occurs.
    bool is_constant_poly() const;
    /// Polynomial ring only: the constant coefficient as a base scalar.
    Scalar constant_coefficient() const;
    /// Polynomial ring only: coefficient of the given monomial (base scalar).
    Scalar coefficient(const Monomial& m) const;
    /// Polynomial ring only: monomials present, graded-lex descending.
    std::vector<Monomial> monomials() const;
    /// Polynomial ring only: substitute base-ring values for all variables.
    Scalar evaluate(const std::vector<Scalar>& values) const;

    /// Canonical text form in the CLI scalar grammar.
    std::string str() const;
    /// Parse an expression (+, -, *, /, ^, parentheses, integers, variables,
    /// eps) and evaluate it in the given ring.
    static Scalar parse(const RingPtr& ring, const std::string& text);

private:
    struct RatV {
        Rational q;
        bool operator==(const RatV&) const = default;
    };
    struct GFpV {
        std::int64_t v = 0;
        bool operator==(const GFpV&) const = default;
    };
    struct PolyV {
        TermList terms;
        bool operator==(const PolyV&) const;
    };
    struct FracV {
        TermList num, den; // den monic, gcd(num, den) = 1
        bool operator==(const FracV&) const;
    };
    struct DualV {
        std::vector<Scalar> ab; // size 2: constant part, eps part
        bool operator==(const DualV&) const;
    };
    using Value = std::variant<RatV, GFpV, PolyV, FracV, DualV>;

    Scalar(RingPtr ring, Value v) : ring_(std::move(ring)), v_(std::move(v)) {}

    RingPtr ring_;
    Value v_;

    friend struct ScalarOps;
};

/// Embed a scalar into a ring built directly on top of its own
/// (field -> polynomial / rational functions / dual numbers over it),
/// or return it unchanged for the identity embedding.
Scalar embed_scalar(const Scalar& s, const RingPtr& target);

/// Monic gcd of two polynomial-ring scalars (primitive PRS).
Scalar poly_gcd(const Scalar& a, const Scalar& b);

} // namespace pcx

#endif
