#ifndef SPH_SUBSPACE_HPP
#define SPH_SUBSPACE_HPP

#include <sph/linalg.hpp>

namespace sph {

// Subspace of Q^n held in unique reduced row echelon form, so equality is
// structural and all arithmetic is deterministic.
class Subspace {
public:
    Subspace() : m_ambient(0) {}
    explicit Subspace(std::size_t ambient) : m_ambient(ambient), m_basis(0, ambient) {}

    static Subspace span(std::size_t ambient, const QMat& rows);
    static Subspace full(std::size_t ambient);

    std::size_t ambient_dim() const { return m_ambient; }
    std::size_t dim() const { return m_basis.rows(); }
    const QMat& basis() const { return m_basis; }
    const std::vector<std::size_t>& pivots() const { return m_pivots; }

    QVec row(std::size_t i) const;

    // residual of v after reduction against the echelon basis
    QVec reduce(const QVec& v) const;
    bool contains(const QVec& v) const;
    bool contains(const Subspace& other) const;
    // coefficients of v in the echelon basis; throws AmbientMismatch /
    // returns false when v lies outside
    bool coords(const QVec& v, QVec& out) const;

    bool operator==(const Subspace& o) const {
        return m_ambient == o.m_ambient && m_basis == o.m_basis;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    std::size_t m_ambient;
    QMat m_basis;
    std::vector<std::size_t> m_pivots;
};

Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersect(const Subspace& u, const Subspace& w);

// right null space over Q
Subspace kernel(const QMat& m);
// right null space over Q(i) of a complex matrix, returned as the real
// subspace of the realified coordinates (real dim = 2x the Q(i) dim)
Subspace kernel(const Mat& m);

} // namespace sph

#endif
