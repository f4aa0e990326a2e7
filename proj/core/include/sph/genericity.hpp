#ifndef SPH_GENERICITY_HPP
#define SPH_GENERICITY_HPP

#include <sph/cartan.hpp>

namespace sph {

// splitmix64: z += 0x9e3779b97f4a7c15; mix with shifts 30/27/31 and the two
// fixed odd constants. Fixed here so sample streams are portable.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : m_state(seed) {}
    std::uint64_t next();

private:
    std::uint64_t m_state;
};

struct SampleConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 20;
    long height = 7;
};

// uniform over numerators [-height, height], denominators [1, height]
Rational random_rational(SplitMix64& rng, long height);

struct GenericRankResult {
    std::size_t max_rank = 0;
    Mat witness;  // group element attaining max_rank
    bool full = false;
    std::size_t samples_used = 0;
};

// exact exponential of a verified-nilpotent matrix
Mat exp_nilpotent(const Mat& n);

// span of {x b x^-1 : b basis of s} in g-coordinates
Subspace ad_conjugate(const LieAlg& g, const Mat& x, const Mat& x_inv, const Subspace& s);

// max over samples x = w * exp(Y), Y a random rational combination of the
// nbar basis and w sweeping the given cells (identity when empty), of
// dim(fixed + Ad(x) moving). full = reaching dim g is an exact certificate;
// anything less after all samples is probabilistic evidence only.
GenericRankResult generic_sum_rank(const LieAlg& g, const Subspace& fixed,
                                   const Subspace& moving, const Subspace& nbar,
                                   const SampleConfig& cfg,
                                   const std::vector<Mat>& weyl_cells = {});

// same estimator with Cayley-transform samples x = (I - S)(I + S)^{-1},
// S a random element of the sample_from subalgebra; used when no parabolic
// data is attached (factorizations inside compact or complex h)
GenericRankResult generic_sum_rank_cayley(const LieAlg& g, const Subspace& fixed,
                                          const Subspace& moving, const Subspace& sample_from,
                                          const SampleConfig& cfg);

} // namespace sph

#endif
