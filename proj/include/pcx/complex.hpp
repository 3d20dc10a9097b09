#ifndef PCX_COMPLEX_HPP
#define PCX_COMPLEX_HPP

#include <map>
#include <optional>

#include "pcx/linalg.hpp"
#include "pcx/matrix.hpp"

namespace pcx {

/// Bounded cochain complex of finite free modules. Differentials raise
/// degree: d^n maps degree n to degree n+1 and is stored as a
/// ranks(n+1) x ranks(n) matrix. Everything outside [lo, hi] is zero.
class Complex {
public:
    Complex() = default;
    Complex(RingPtr ring, int lo, int hi, std::map<int, std::size_t> ranks,
            std::map<int, Matrix> diffs);

    static Complex zero(RingPtr ring, int lo, int hi);

    const RingPtr& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    std::size_t rank_at(int n) const;
    Matrix diff_at(int n) const; // ranks(n+1) x ranks(n); zero when absent

    std::size_t total_rank() const;
    long long euler_characteristic() const;

    friend bool operator==(const Complex& a, const Complex& b);
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

private:
    RingPtr ring_;
    int lo_ = 0, hi_ = 0;
    std::map<int, std::size_t> ranks_;
    std::map<int, Matrix> diffs_;
};

/// Raises not_a_complex naming the first degree where d(n+1) o d(n) != 0.
void validate(const Complex& c);

/// Degree-s collection of matrices between two complexes: chain maps at
/// s = 0, homotopies at s = -1, 2-homotopies at s = -2. Missing components
/// are zero.
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(Complex source, Complex target, int degree, std::map<int, Matrix> components);

    static GradedMap zero(Complex source, Complex target, int degree);
    static GradedMap identity(const Complex& c);

    const Complex& source() const { return source_; }
    const Complex& target() const { return target_; }
    int degree() const { return degree_; }
    const std::map<int, Matrix>& components() const { return components_; }

    Matrix component_at(int n) const; // target.rank(n+degree) x source.rank(n)
    bool is_zero() const;

    /// Exact check of d_target o f^n = f^{n+1} o d_source (degree 0 only).
    bool is_chain_map() const;

    friend bool operator==(const GradedMap& a, const GradedMap& b);
    friend bool operator!=(const GradedMap& a, const GradedMap& b) { return !(a == b); }

private:
    Complex source_, target_;
    int degree_ = 0;
    std::map<int, Matrix> components_; // normalized: nonzero shapes, nonzero matrices

    void normalize();
};

GradedMap compose(const GradedMap& g, const GradedMap& f); // g after f; degrees add
GradedMap add(const GradedMap& f, const GradedMap& g);
GradedMap sub(const GradedMap& f, const GradedMap& g);
GradedMap scale(const Scalar& s, const GradedMap& f);

/// Hom-complex differential on a degree-s map: d o F - (-1)^s F o d.
GradedMap hom_differential(const GradedMap& f);

/// Exact check of d o H + H o d = psi - phi for a degree -1 map H.
bool homotopy_check(const GradedMap& H, const GradedMap& phi, const GradedMap& psi);

/// Shifts: (c[k])^n = c^(n+k) with differential (-1)^k d.
Complex shift(const Complex& c, int k);
GradedMap shift(const GradedMap& f, int k);

struct ConeResult {
    Complex cone;
    GradedMap from_target;      // target -> cone, (0, q)
    GradedMap to_shifted_source; // cone -> source[1], (p, q) -> p
};

/// Mapping cone of a chain map: C^n = source^(n+1) (+) target^n with
/// differential [[-d_src, 0], [f, d_tgt]].
ConeResult cone(const GradedMap& f);

/// dim H^n = ranks(n) - rank(d^n) - rank(d^(n-1)) for every window degree.
std::map<int, std::size_t> cohomology_dims(const Complex& c);

bool is_exact(const Complex& c);

/// True iff the cone of f is exact. Requires a field kind.
bool is_qiso(const GradedMap& f);

/// Finitely presented module given by a presentation matrix. Desk scale
/// supports exactly the residue field of the ring.
struct ModulePresentation {
    RingPtr ring;
    Matrix presentation; // cokernel presentation of a map R^c -> R^1

    static ModulePresentation residue_field(const RingPtr& ring);
};

/// Degreewise tensor with a module; for complexes of free modules this is
/// the derived tensor. Supports the residue field only.
Complex tensor(const Complex& c, const ModulePresentation& m);

} // namespace pcx

#endif
