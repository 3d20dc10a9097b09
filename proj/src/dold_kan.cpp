#include "pcx/dold_kan.hpp"

#include <algorithm>

#include "pcx/errors.hpp"

namespace pcx {

namespace {

// Monotone surjections [n] ->> [k]: value sequences starting at 0, ending at
// k, with steps in {0, 1}; enumerated in lexicographic order.
void enumerate_surjections(int n, int k, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out)
{
    int pos = static_cast<int>(cur.size());
    if (pos == n + 1) {
        if (cur.back() == k)
            out.push_back(cur);
        return;
    }
    int prev = pos == 0 ? 0 : cur[pos - 1];
    for (int step = 0; step <= 1; ++step) {
        int v = pos == 0 ? 0 : prev + step;
        if (v > k)
            continue;
        // remaining positions must still be able to reach k
        if (k - v > n - pos)
            continue;
        cur.push_back(v);
        enumerate_surjections(n, k, cur, out);
        cur.pop_back();
        if (pos == 0)
            break; // the first value is always 0
    }
}

std::vector<std::vector<int>> surjections(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    enumerate_surjections(n, k, cur, out);
    return out;
}

std::vector<int> face_map(int n, int i)
{
    // delta^i: [n-1] -> [n] skipping i
    std::vector<int> v;
    for (int j = 0; j <= n; ++j)
        if (j != i)
            v.push_back(j);
    return v;
}

std::vector<int> degeneracy_map(int n, int i)
{
    // sigma^i: [n+1] -> [n] repeating i
    std::vector<int> v;
    for (int j = 0; j <= n + 1; ++j)
        v.push_back(j <= i ? j : j - 1);
    return v;
}

} // namespace

DKTruncation::DKTruncation(const Complex& c)
{
    base_ = truncate_le(c, 0);
    const RingPtr& ring = base_.ring();

    summands_.resize(max_level + 1);
    ranks_.assign(max_level + 1, 0);
    for (int n = 0; n <= max_level; ++n) {
        std::size_t off = 0;
        for (int k = 0; k <= n; ++k) {
            std::size_t dim = base_.rank_at(-k);
            for (auto& s : surjections(n, k)) {
                summands_[n].push_back(Summand{s, k, off, dim});
                off += dim;
            }
        }
        ranks_[n] = off;
    }

    faces_.resize(max_level + 1);
    for (int n = 1; n <= max_level; ++n)
        for (int i = 0; i <= n; ++i)
            faces_[n].push_back(structure_map(face_map(n, i), n));
    degeneracies_.resize(max_level);
    for (int n = 0; n + 1 <= max_level; ++n)
        for (int i = 0; i <= n; ++i)
            degeneracies_[n].push_back(structure_map(degeneracy_map(n, i), n));

    check_simplicial_identities();

    // Moore complex: M_0 = level 0; M_n = intersection of ker d_i, i < n.
    moore_basis_.resize(max_level + 1);
    moore_diff_.resize(max_level + 1);
    moore_basis_[0] = Matrix::identity(ring, ranks_[0]);
    for (int n = 1; n <= max_level; ++n) {
        Matrix stacked(ring, n * ranks_[n - 1], ranks_[n]);
        for (int i = 0; i < n; ++i)
            stacked.paste(static_cast<std::size_t>(i) * ranks_[n - 1], 0, faces_[n][i]);
        auto kb = kernel_basis(stacked);
        Matrix basis(ring, ranks_[n], kb.size());
        for (std::size_t j = 0; j < kb.size(); ++j)
            basis.paste(0, j, kb[j]);
        moore_basis_[n] = std::move(basis);
    }
    for (int n = 1; n <= max_level; ++n) {
        // last face restricted to M_n, expressed in the M_(n-1) basis
        Matrix img = faces_[n][n] * moore_basis_[n];
        Matrix d(ring, moore_basis_[n - 1].cols(), moore_basis_[n].cols());
        for (std::size_t j = 0; j < img.cols(); ++j) {
            Matrix col(ring, img.rows(), 1);
            for (std::size_t i = 0; i < img.rows(); ++i)
                col.set(i, 0, img.at(i, j));
            auto x = solve(moore_basis_[n - 1], col);
            if (!x)
                fail(errc::internal, "Moore differential does not land in the Moore complex");
            d.paste(0, j, *x);
        }
        moore_diff_[n] = std::move(d);
    }
}

std::size_t DKTruncation::level_rank(int n) const
{
    return ranks_.at(n);
}

const std::vector<DKTruncation::Summand>& DKTruncation::level_summands(int n) const
{
    return summands_.at(n);
}

Matrix DKTruncation::structure_map(const std::vector<int>& theta, int n) const
{
    const RingPtr& ring = base_.ring();
    int m = static_cast<int>(theta.size()) - 1;
    Matrix M(ring, ranks_.at(m), ranks_.at(n));
    for (const auto& src : summands_.at(n)) {
        if (src.dim == 0)
            continue;
        // sigma o theta and its epi-mono factorization
        std::vector<int> st(m + 1);
        for (int j = 0; j <= m; ++j)
            st[j] = src.surjection[theta[j]];
        std::vector<int> image = st;
        image.erase(std::unique(image.begin(), image.end()), image.end());
        int l = static_cast<int>(image.size()) - 1;
        std::vector<int> tau(m + 1);
        for (int j = 0; j <= m; ++j)
            tau[j] = static_cast<int>(std::lower_bound(image.begin(), image.end(), st[j]) -
                                      image.begin());

        bool is_identity = (l == src.k);
        bool misses_last = (l == src.k - 1) && (image.back() == src.k - 1) && (image.front() == 0);
        if (misses_last) {
            // image must be exactly 0..k-1
            for (int j = 0; j <= l; ++j)
                if (image[j] != j)
                    misses_last = false;
        }
        if (!is_identity && !misses_last)
            continue;

        // locate the target summand (tau, l) at level m
        const Summand* dst = nullptr;
        for (const auto& cand : summands_.at(m))
            if (cand.k == l && cand.surjection == tau) {
                dst = &cand;
                break;
            }
        if (!dst)
            fail(errc::internal, "target summand not found");
        if (dst->dim == 0)
            continue;
        if (is_identity)
            M.paste(dst->offset, src.offset, Matrix::identity(ring, src.dim));
        else
            M.paste(dst->offset, src.offset, base_.diff_at(-src.k));
    }
    return M;
}

Matrix DKTruncation::face(int n, int i) const
{
    return faces_.at(n).at(i);
}

Matrix DKTruncation::degeneracy(int n, int i) const
{
    return degeneracies_.at(n).at(i);
}

void DKTruncation::check_simplicial_identities() const
{
    // d_i d_j = d_(j-1) d_i (i < j)
    for (int n = 2; n <= max_level; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (faces_[n - 1][i] * faces_[n][j] != faces_[n - 1][j - 1] * faces_[n][i])
                    fail(errc::internal, "simplicial identity d_i d_j failed");
    // s_i s_j = s_(j+1) s_i (i <= j)
    for (int n = 0; n + 2 <= max_level; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (degeneracies_[n + 1][i] * degeneracies_[n][j] !=
                    degeneracies_[n + 1][j + 1] * degeneracies_[n][i])
                    fail(errc::internal, "simplicial identity s_i s_j failed");
    // d_i s_j relations (the i < j and i > j+1 cases only occur for n >= 1)
    for (int n = 0; n + 1 <= max_level; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                Matrix lhs = faces_[n + 1][i] * degeneracies_[n][j];
                Matrix rhs = (i == j || i == j + 1)
                                 ? Matrix::identity(base_.ring(), ranks_[n])
                                 : (i < j ? degeneracies_[n - 1][j - 1] * faces_[n][i]
                                          : degeneracies_[n - 1][j] * faces_[n][i - 1]);
                if (lhs != rhs)
                    fail(errc::internal, "simplicial identity d_i s_j failed");
            }
}

Matrix DKTruncation::moore_basis(int n) const
{
    return moore_basis_.at(n);
}

std::size_t DKTruncation::moore_rank(int n) const
{
    return moore_basis_.at(n).cols();
}

Matrix DKTruncation::moore_differential(int n) const
{
    return moore_diff_.at(n);
}

std::size_t DKTruncation::moore_homology_dim(int k) const
{
    if (k < 0 || k > 2)
        fail(errc::validation_error, "Moore homology available for k in {0, 1, 2}");
    std::size_t dim = moore_rank(k);
    std::size_t out = k == 0 ? 0 : rank(moore_diff_.at(k));
    std::size_t in = rank(moore_diff_.at(k + 1));
    if (out + in > dim)
        fail(errc::internal, "Moore complex is not a complex");
    return dim - out - in;
}

DKTruncation dk_build(const Complex& c)
{
    return DKTruncation(c);
}

std::size_t dk_pi(const Complex& c, int k)
{
    return DKTruncation(c).moore_homology_dim(k);
}

} // namespace pcx
