#ifndef PCX_RING_HPP
#define PCX_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace pcx {

enum class RingKind {
    Rationals,         // QQ
    PrimeField,        // GF(p)
    RationalFunctions, // base(v1,...,vk), base a field kind
    Polynomial,        // base[v1,...,vk], base a field kind
    DualNumbers,       // base[eps]/(eps^2), base a field kind
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Immutable description of a supported base ring. Shared by every scalar
/// and matrix living over it. Structural equality, not pointer identity,
/// decides whether two rings agree.
class Ring {
public:
    static RingPtr rationals();
    static RingPtr prime_field(std::int64_t p);
    static RingPtr polynomial(RingPtr base, std::vector<std::string> vars);
    static RingPtr rational_functions(RingPtr base, std::vector<std::string> vars);
    static RingPtr dual_numbers(RingPtr base);

    RingKind kind() const { return kind_; }

    /// Rationals, PrimeField and RationalFunctions are the field kinds.
    bool is_field() const;

    std::int64_t prime() const; // PrimeField only

    /// Characteristic of the underlying prime field: p for GF(p) and
    /// anything built on it, 0 in characteristic zero.
    std::int64_t characteristic() const;

    const RingPtr& base() const;                 // RF / Polynomial / DualNumbers
    const std::vector<std::string>& vars() const; // RF / Polynomial
    std::size_t var_count() const;
    std::size_t var_index(const std::string& name) const; // throws missing_variable

    std::string description() const;

private:
    Ring() = default;

    RingKind kind_ = RingKind::Rationals;
    std::int64_t p_ = 0;
    RingPtr base_;
    std::vector<std::string> vars_;
};

bool same_ring(const Ring& a, const Ring& b);
bool same_ring(const RingPtr& a, const RingPtr& b);

} // namespace pcx

#endif
