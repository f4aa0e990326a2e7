#ifndef SPH_OCTONION_HPP
#define SPH_OCTONION_HPP

#include <sph/linalg.hpp>

namespace sph {

// 8-dimensional composition algebra over Q, basis e0 = 1, e1..e7, built by
// Cayley-Dickson doubling of the quaternions with parameter -1 (compact,
// norm signature (8,0)) or +1 (split, norm signature (4,4)).
struct OctonionAlgebra {
    bool split;
    std::vector<QMat> left;  // left[i] = matrix of y -> e_i y, entries 0, +-1

    QVec mult(std::size_t i, std::size_t j) const;
    const QMat& left_mult(std::size_t i) const { return left[i]; }

    // polarized norm form over the full 8-dim basis (diagonal, entries +-1)
    QMat norm_gram() const;
    // restriction to the imaginary part e1..e7
    QMat imaginary_gram() const;
};

OctonionAlgebra octonion_algebra(bool split);

// basis of Der(O) as 7x7 matrices on the imaginary part, dim 14
std::vector<QMat> derivation_matrices(const OctonionAlgebra& o);

} // namespace sph

#endif
