#ifndef SPH_CHECKS_HPP
#define SPH_CHECKS_HPP

#include <sph/embeddings.hpp>
#include <sph/genericity.hpp>
#include <map>

namespace sph {

enum class Outcome {
    spherical,
    not_spherical_probable,
    factorization,
    no_factorization_probable,
    prehomogeneous,
    not_prehomogeneous_probable,
    pass,
    fail,
};

std::string outcome_name(Outcome o);
bool outcome_positive(Outcome o);

// Positive outcomes carry an exactly re-verified witness; negative randomized
// outcomes carry the achieved/target defect.
struct Verdict {
    Outcome outcome;
    std::optional<Mat> witness;
    std::size_t achieved = 0, target = 0, samples_used = 0;
    std::map<std::string, long> numbers;
    std::vector<std::string> notes;

    std::size_t defect() const { return target - achieved; }
    bool positive() const { return outcome_positive(outcome); }
};

bool theta_stable(const RealForm& g, const Subspace& s);

// PASS iff dim h >= dim n = dim(g/k) - rank_R g
Verdict check_dimension_bound(const RealForm& g, const Subalg& h);

// real rank of a theta-stable subalgebra: dimension of the generic-element
// centralizer inside h cap s, minimum required at least twice
std::size_t subalg_real_rank(const RealForm& g, const Subalg& h, const SampleConfig& cfg);

// PASS iff rank_R g >= rank_R h; rank_h may be supplied by the constructor,
// otherwise it is computed for theta-stable h (NotThetaStable when neither)
Verdict check_rank_inequality(const RealForm& g, const Subalg& h, const SampleConfig& cfg,
                              std::optional<std::size_t> rank_h = {});

// randomized sphericity: h + Ad(x)p = g at a sampled x, exact witness on
// success, defect on failure; both necessary bounds are reported alongside
Verdict is_spherical(const RealForm& g, const Subalg& h, const SampleConfig& cfg,
                     std::optional<std::size_t> rank_h = {});

// h = h1 * Ad(x)h2 with Cayley-sampled x from the full algebra; reports
// dim(h1 cap Ad(x)h2) at the witness
Verdict is_factorization(LieAlgPtr h, const Subalg& h1, const Subalg& h2,
                         const SampleConfig& cfg);

// action of an algebra basis on V; over_c switches ranks to Q(i)
struct RepData {
    std::vector<Mat> action;
    std::size_t dim_v = 0;
    long dim_group = 0;  // dim G' over the same scalar field as V
    bool over_c = false;
};

// Zariski-open orbit detection: rank of {rho(b_i)v} + the scaling direction
Verdict is_prehomogeneous(const RepData& rep, const SampleConfig& cfg);

// 0 = no nondegenerate invariant bilinear form, 1 = symmetric, 2 = skew;
// signature reported for real representations
struct FormTypeResult {
    int type = 0;
    std::optional<Signature> sig;
};
FormTypeResult invariant_form_type(const RepData& rep);

// centralizer l of a generic X in h-perp cap k-perp (Killing-orthogonal),
// minimal dimension over samples achieved twice; checks
// dim(l cap h) = dim h - (dim g - dim l)/2
struct AdaptedLevi {
    Subalg l, l_cap_h;
    bool dim_identity = false;
};
AdaptedLevi adapted_levi_symmetric(const RealForm& g, const Subalg& h,
                                   const SampleConfig& cfg);

// necessary condition for (g, h') spherical under symmetric (g, h):
// PASS iff h = h' * (l cap h) as a factorization
Verdict tower_check(const RealForm& g, const Subalg& h, const Subalg& h_prime,
                    const SampleConfig& cfg);

} // namespace sph

#endif
