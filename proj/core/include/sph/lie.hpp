#ifndef SPH_LIE_HPP
#define SPH_LIE_HPP

#include <sph/subspace.hpp>
#include <memory>
#include <optional>
#include <string>

namespace sph {

struct BilinearFormData {
    enum class Kind { symmetric, hermitian, skew, skew_hermitian };
    Mat matrix;
    Kind kind;
    std::optional<Signature> sig;
};

// Sparse row of coefficients: [b_i, b_j] = sum over (k, c) of c * b_k
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

// Real Lie algebra presented by an ambient matrix size and an R-basis of
// complex matrices with exact entries. Structure constants are computed and
// closure is verified at construction.
class LieAlg {
public:
    LieAlg(std::size_t ambient_size, std::vector<Mat> basis, std::string label);

    std::size_t ambient_size() const { return m_n; }
    std::size_t dim() const { return m_basis.size(); }
    const std::string& label() const { return m_label; }
    const Mat& basis_mat(std::size_t i) const { return m_basis[i]; }
    const std::vector<Mat>& basis() const { return m_basis; }

    // real coordinate vector (re, im interleaved per entry) of an ambient matrix
    QVec flatten(const Mat& x) const;
    std::size_t flat_len() const { return 2 * m_n * m_n; }

    // expansion in the algebra basis; try_coords returns false when x is
    // outside the span, coords_of throws NotClosed
    bool try_coords(const Mat& x, QVec& out) const;
    QVec coords_of(const Mat& x) const;
    Mat from_coords(const QVec& c) const;

    const SparseVec& structure(std::size_t i, std::size_t j) const;

    QVec bracket(const QVec& x, const QVec& y) const;
    QMat ad(const QVec& x) const;

    // Gram matrix of B(x,y) = tr(ad x ad y) over the basis (cached)
    const QMat& killing_gram() const;
    BilinearFormData killing_form() const;

    Subspace centralizer(const Subspace& target) const;
    Subspace centralizer_elem(const QVec& x) const;

    bool is_subspace_closed(const Subspace& s) const;

    // Killing-orthogonal complement {x : B(x, s) = 0}
    Subspace killing_orthogonal(const Subspace& s) const;

private:
    std::size_t m_n;
    std::vector<Mat> m_basis;
    std::string m_label;

    // augmented echelon of flattened basis: sparse left (flat) and right
    // (original-coordinate) parts plus pivot columns
    std::vector<SparseVec> m_ech_left, m_ech_right;
    std::vector<std::size_t> m_ech_pivots;

    std::vector<std::vector<SparseVec>> m_struct;  // [i][j], j < i; antisymmetry for the rest
    mutable std::optional<QMat> m_killing;

    void build_echelon();
    void build_structure();
};

using LieAlgPtr = std::shared_ptr<const LieAlg>;

// Subalgebra as a canonical subspace of a parent algebra's coordinates.
struct Subalg {
    LieAlgPtr parent;
    Subspace coords;
    std::string provenance;

    std::size_t dim() const { return coords.dim(); }
    // basis element i as an ambient matrix
    Mat basis_mat(std::size_t i) const;
};

Subalg make_subalg(LieAlgPtr parent, const std::vector<Mat>& gens,
                   const std::string& provenance, bool check_closed = true);

} // namespace sph

#endif
