#ifndef PCX_LINALG_HPP
#define PCX_LINALG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcx/matrix.hpp"

namespace pcx {

/// Reduced row echelon form over a field kind together with the pivot columns.
struct Rref {
    Matrix mat;
    std::vector<std::size_t> pivot_cols;
};

Rref rref(const Matrix& m);

/// Exact rank over a field kind. Fraction-free (Bareiss) elimination over QQ
/// and rational-function fields, plain elimination over GF(p).
std::size_t rank(const Matrix& m);

/// Canonical basis of the right kernel, read off the reduced echelon form.
std::vector<Matrix> kernel_basis(const Matrix& m);

/// Some solution of a*x = b with free variables set to zero, or nullopt when
/// the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Substitute base-field values for all variables of a polynomial-ring matrix.
Matrix evaluate(const Matrix& m, const std::vector<Scalar>& values);
Matrix evaluate(const Matrix& m, const std::map<std::string, Scalar>& point);

/// Number of distinct designated sample values (integers embedded into the
/// field); 0 means unbounded.
std::uint64_t designated_sample_count(const RingPtr& ring);

/// Deterministic draw from the designated subset {0,...,sample_bound-1}
/// (truncated to the field size). Identical seeds give identical values.
Scalar random_scalar(const RingPtr& ring, std::uint64_t sample_bound, std::uint64_t seed);

/// SplitMix64-based deterministic stream used wherever reproducible
/// pseudo-randomness is required.
class SeedStream {
public:
    explicit SeedStream(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t next_below(std::uint64_t bound); // bound >= 1

private:
    std::uint64_t state_;
};

} // namespace pcx

#endif
