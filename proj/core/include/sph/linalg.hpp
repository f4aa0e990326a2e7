#ifndef SPH_LINALG_HPP
#define SPH_LINALG_HPP

#include <sph/matrix.hpp>
#include <sph/errors.hpp>
#include <cstdint>
#include <tuple>
#include <vector>

namespace sph {

using QVec = std::vector<Rational>;

// Exact rank via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
std::size_t rank_exact(const QMat& m);

// Rank of the reduction mod p. One-sided: always <= exact rank, with
// equality whenever p avoids the pivots' numerators; full modular rank
// therefore certifies full exact rank. Throws BadPrime if a denominator
// vanishes mod p.
std::size_t rank_mod_p(const QMat& m, std::uint64_t p);

// Modular-first rank: two pseudo-random 30-bit primes are tried; if either
// reaches min(rows, cols) that is the exact rank, otherwise exact
// elimination decides.
std::size_t rank(const QMat& m);

// Complex matrices are realified into 2x2 real blocks; rank over Q(i) is
// half the realified rank.
std::size_t rank(const Mat& m);
std::size_t rank_mod_p(const Mat& m, std::uint64_t p);

// In-place reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref_in_place(QMat& m);

// Gauss-Jordan inverse; throws if singular.
QMat inverse(const QMat& m);
Mat inverse(const Mat& m);

// Counts of positive/negative/zero eigenvalues of a real symmetric matrix,
// by exact congruence diagonalization. Throws NotSymmetric.
struct Signature {
    std::size_t pos, neg, zero;
    bool operator==(const Signature&) const = default;
};
Signature signature(const QMat& s);
Signature signature(const Mat& s);  // requires a real matrix

} // namespace sph

#endif
