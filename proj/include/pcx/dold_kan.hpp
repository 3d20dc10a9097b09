#ifndef PCX_DOLD_KAN_HPP
#define PCX_DOLD_KAN_HPP

#include "pcx/derived.hpp"

namespace pcx {

/// Dold-Kan truncation of tau_le(0) of a complex at simplicial levels 0..3.
///
/// Level n is the direct sum over monotone surjections [n] ->> [k] of the
/// module in complex degree -k; faces and degeneracies come from the usual
/// combinatorial prescription (identity on surjective composites, the
/// differential when the epi-mono factorization misses exactly the last
/// vertex, zero otherwise). The Moore complex of the result recovers the
/// truncation, which is what dk_pi reads off.
class DKTruncation {
public:
    static constexpr int max_level = 3;

    explicit DKTruncation(const Complex& c); // applies tau_le(0); field kinds only

    struct Summand {
        std::vector<int> surjection; // values of [n] ->> [k]
        int k = 0;                   // module lives in complex degree -k
        std::size_t offset = 0;
        std::size_t dim = 0;
    };

    const Complex& base() const { return base_; }
    const RingPtr& ring() const { return base_.ring(); }

    std::size_t level_rank(int n) const;
    const std::vector<Summand>& level_summands(int n) const;

    /// Matrix of the map induced by a monotone theta: [m] -> [n],
    /// contravariantly from level n to level m.
    Matrix structure_map(const std::vector<int>& theta, int n) const;

    Matrix face(int n, int i) const;       // level n -> level n-1, 1 <= n <= 3
    Matrix degeneracy(int n, int i) const; // level n -> level n+1, 0 <= n <= 2

    /// Moore complex: M_n = intersection of ker(d_i), i < n, with the last
    /// face as differential.
    Matrix moore_basis(int n) const;        // columns span M_n inside level n
    std::size_t moore_rank(int n) const;
    Matrix moore_differential(int n) const; // M_n -> M_(n-1) in Moore coordinates

    std::size_t moore_homology_dim(int k) const; // k in {0,1,2}

private:
    Complex base_;
    std::vector<std::vector<Summand>> summands_; // per level 0..3
    std::vector<std::size_t> ranks_;
    std::vector<std::vector<Matrix>> faces_;      // faces_[n][i], n >= 1
    std::vector<std::vector<Matrix>> degeneracies_; // degeneracies_[n][i], n <= 2
    std::vector<Matrix> moore_basis_; // per level
    std::vector<Matrix> moore_diff_;  // per level >= 1

    void check_simplicial_identities() const;
};

DKTruncation dk_build(const Complex& c);

/// Dimension of pi_k of the truncation; equals dim H^(-k)(c) for k in {0,1,2}.
std::size_t dk_pi(const Complex& c, int k);

} // namespace pcx

#endif
