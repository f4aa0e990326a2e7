#include <sph/genericity.hpp>
#include <functional>

namespace sph {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (m_state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Rational random_rational(SplitMix64& rng, long height) {
    long num = long(rng.next() % std::uint64_t(2 * height + 1)) - height;
    long den = 1 + long(rng.next() % std::uint64_t(height));
    return rat(num, den);
}

Mat exp_nilpotent(const Mat& n) {
    std::size_t N = n.rows();
    Mat power = Mat::identity(N), sum = Mat::identity(N);
    Rational fact = 1;
    for (std::size_t k = 1; k <= N; ++k) {
        power = power * n;
        if (power.is_zero()) return sum;
        fact *= Rational(long(k));
        Mat term = power;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                term(i, j).re /= fact;
                term(i, j).im /= fact;
            }
        sum = sum + term;
    }
    throw NotNilpotent("exp_nilpotent: matrix is not nilpotent");
}

Subspace ad_conjugate(const LieAlg& g, const Mat& x, const Mat& x_inv, const Subspace& s) {
    QMat rows(s.dim(), g.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        QVec ci = s.row(i);
        Mat b = g.from_coords(ci);
        Mat conj = x * b * x_inv;
        QVec out;
        if (!g.try_coords(conj, out))
            throw LeavesAmbient("ad_conjugate: conjugate left the algebra span");
        for (std::size_t j = 0; j < g.dim(); ++j) rows(i, j) = out[j];
    }
    return Subspace::span(g.dim(), rows);
}

namespace {

GenericRankResult run_samples(const LieAlg& g, const Subspace& fixed, const Subspace& moving,
                              const SampleConfig& cfg,
                              const std::function<Mat(SplitMix64&)>& draw,
                              const std::vector<Mat>& weyl_cells) {
    GenericRankResult res;
    SplitMix64 rng(cfg.seed);
    std::vector<Mat> cells = weyl_cells;
    if (cells.empty()) cells.push_back(Mat::identity(g.ambient_size()));
    for (std::size_t t = 0; t < cfg.samples && !res.full; ++t) {
        Mat x0 = draw(rng);
        for (const Mat& w : cells) {
            Mat x = w * x0;
            Subspace conj = ad_conjugate(g, x, inverse(x), moving);
            QMat stacked(fixed.dim() + conj.dim(), g.dim());
            for (std::size_t i = 0; i < fixed.dim(); ++i)
                for (std::size_t j = 0; j < g.dim(); ++j) stacked(i, j) = fixed.basis()(i, j);
            for (std::size_t i = 0; i < conj.dim(); ++i)
                for (std::size_t j = 0; j < g.dim(); ++j)
                    stacked(fixed.dim() + i, j) = conj.basis()(i, j);
            std::size_t r = rank(stacked);
            ++res.samples_used;
            if (r > res.max_rank) {
                res.max_rank = r;
                res.witness = x;
            }
            if (r == g.dim()) {
                res.full = true;
                break;
            }
        }
    }
    return res;
}

} // namespace

GenericRankResult generic_sum_rank(const LieAlg& g, const Subspace& fixed,
                                   const Subspace& moving, const Subspace& nbar,
                                   const SampleConfig& cfg,
                                   const std::vector<Mat>& weyl_cells) {
    auto draw = [&](SplitMix64& rng) {
        std::size_t N = g.ambient_size();
        Mat y(N, N);
        for (std::size_t i = 0; i < nbar.dim(); ++i) {
            Rational c = random_rational(rng, cfg.height);
            if (sgn(c) == 0) continue;
            Mat b = g.from_coords(nbar.row(i));
            for (std::size_t a = 0; a < N; ++a)
                for (std::size_t bcol = 0; bcol < N; ++bcol) {
                    y(a, bcol).re += c * b(a, bcol).re;
                    y(a, bcol).im += c * b(a, bcol).im;
                }
        }
        return exp_nilpotent(y);
    };
    return run_samples(g, fixed, moving, cfg, draw, weyl_cells);
}

GenericRankResult generic_sum_rank_cayley(const LieAlg& g, const Subspace& fixed,
                                          const Subspace& moving, const Subspace& sample_from,
                                          const SampleConfig& cfg) {
    auto draw = [&](SplitMix64& rng) {
        std::size_t N = g.ambient_size();
        for (;;) {
            Mat s(N, N);
            for (std::size_t i = 0; i < sample_from.dim(); ++i) {
                Rational c = random_rational(rng, cfg.height);
                if (sgn(c) == 0) continue;
                Mat b = g.from_coords(sample_from.row(i));
                for (std::size_t a = 0; a < N; ++a)
                    for (std::size_t bcol = 0; bcol < N; ++bcol) {
                        s(a, bcol).re += c * b(a, bcol).re;
                        s(a, bcol).im += c * b(a, bcol).im;
                    }
            }
            Mat num = Mat::identity(N) - s, den = Mat::identity(N) + s;
            if (rank(den) < N) continue;  // resample past the singular locus
            return num * inverse(den);
        }
    };
    return run_samples(g, fixed, moving, cfg, draw, {});
}

} // namespace sph
