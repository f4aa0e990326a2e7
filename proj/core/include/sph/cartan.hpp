#ifndef SPH_CARTAN_HPP
#define SPH_CARTAN_HPP

#include <sph/lie.hpp>

namespace sph {

struct Root {
    QVec value;      // values on the ordered a-basis
    Subspace space;  // root space in g-coordinates
    bool positive() const {
        for (const auto& v : value) {
            int s = sgn(v);
            if (s != 0) return s > 0;
        }
        return false;
    }
};

struct ParabolicData {
    QMat theta;  // involution on coordinates
    Subspace k, s;
    Subspace a;
    std::vector<Root> roots;  // nonzero restricted roots, deterministic order
    Subspace m, n, nbar, p;
    bool quasi_split = false;

    std::size_t real_rank() const { return a.dim(); }
};

// theta(X) = -X^* expressed on coordinates; verified involutive and
// span-preserving
QMat theta_matrix(const LieAlg& g);

// eigenspaces of theta: (k, s) with checked sign rules
// [k,k] in k, [k,s] in s, [s,s] in k
std::pair<Subspace, Subspace> cartan_decomposition(const LieAlg& g, const QMat& theta);

// Simultaneous ad-eigenspace decomposition for a spanned by a_coords whose
// ambient matrices have the given rational spectra. Builds the positive
// system lexicographically and assembles m, n, nbar, p. Verifies: a abelian,
// a maximal abelian in s, full eigenspace decomposition, nilpotency of n,
// dim n = dim(g/k) - dim a.
ParabolicData make_parabolic(const LieAlg& g, const QMat& theta,
                             const std::vector<QVec>& a_coords,
                             const std::vector<std::vector<Rational>>& a_spectra);

} // namespace sph

#endif
