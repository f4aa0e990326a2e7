#include <sph/linalg.hpp>

#include <array>
#include <algorithm>

namespace sph {

namespace {

// 30-bit primes for the modular fast path
constexpr std::array<std::uint64_t, 12> kPrimes = {
    1073741789ull, 1073741783ull, 1073741741ull, 1073741723ull,
    1073741719ull, 1073741717ull, 1073741689ull, 1073741671ull,
    1073741663ull, 1073741651ull, 1073741621ull, 1073741567ull,
};

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a * b % p;  // p < 2^31 so the product fits
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
    std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (den == 0) throw BadPrime("denominator divisible by p");
    std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    return mulmod(num, invmod(den, p), p);
}

std::size_t rank_rows_mod_p(std::vector<std::vector<std::uint64_t>>& m, std::uint64_t p) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        std::uint64_t inv = invmod(m[r][col], p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            std::uint64_t f = mulmod(m[i][col], inv, p);
            for (std::size_t j = col; j < cols; ++j) {
                std::uint64_t sub = mulmod(f, m[r][j], p);
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        ++r;
    }
    return r;
}

// content-derived deterministic prime pair
std::pair<std::uint64_t, std::uint64_t> pick_primes(const QMat& m) {
    std::uint64_t h = 0x12345678abcdefull ^ (m.rows() * 7919 + m.cols());
    std::uint64_t a = splitmix64(h), b = splitmix64(h);
    std::size_t i = a % kPrimes.size();
    std::size_t j = b % (kPrimes.size() - 1);
    if (j >= i) ++j;
    return {kPrimes[i], kPrimes[j]};
}

} // namespace

std::size_t rank_exact(const QMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    // clear denominators row-wise
    std::vector<std::vector<mpz_class>> z(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class t = l / m(i, j).get_den();
            z[i][j] = m(i, j).get_num() * t;
        }
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && z[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(z[piv], z[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = z[r][col] * z[i][j] - z[i][col] * z[r][j];
                mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][col] = 0;
        }
        prev = z[r][col];
        ++r;
    }
    return r;
}

std::size_t rank_mod_p(const QMat& m, std::uint64_t p) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<std::uint64_t>> z(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) z[i][j] = reduce_mod(m(i, j), p);
    return rank_rows_mod_p(z, p);
}

std::size_t rank(const QMat& m) {
    const std::size_t full = std::min(m.rows(), m.cols());
    if (full == 0) return 0;
    auto [p1, p2] = pick_primes(m);
    try {
        std::size_t r1 = rank_mod_p(m, p1);
        if (r1 == full) return r1;
        std::size_t r2 = rank_mod_p(m, p2);
        if (r2 == full) return r2;
    } catch (const BadPrime&) {
        // fall through to exact elimination
    }
    return rank_exact(m);
}

std::size_t rank(const Mat& m) {
    if (is_real(m)) return rank(real_part(m));
    return rank(realify(m)) / 2;
}

std::size_t rank_mod_p(const Mat& m, std::uint64_t p) {
    if (is_real(m)) return rank_mod_p(real_part(m), p);
    return rank_mod_p(realify(m), p) / 2;
}

std::vector<std::size_t> rref_in_place(QMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && sgn(m(piv, col)) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) swap(m(r, j), m(piv, j));
        Rational inv = 1 / m(r, col);
        for (std::size_t j = col; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, col)) == 0) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

namespace {

template <typename T>
Matrix<T> gauss_jordan_inverse(const Matrix<T>& m, bool (*iszero)(const T&)) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("inverse: non-square");
    Matrix<T> a = m, inv = Matrix<T>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && iszero(a(piv, col))) ++piv;
        if (piv == n) throw std::domain_error("inverse: singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(col, j), a(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
        T d = T(1) / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) = a(col, j) * d;
            inv(col, j) = inv(col, j) * d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || iszero(a(i, col))) continue;
            T f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = a(i, j) - f * a(col, j);
                inv(i, j) = inv(i, j) - f * inv(col, j);
            }
        }
    }
    return inv;
}

bool qzero(const Rational& x) { return sgn(x) == 0; }
bool gzero(const GaussRational& x) { return x.is_zero(); }

} // namespace

QMat inverse(const QMat& m) { return gauss_jordan_inverse<Rational>(m, qzero); }
Mat inverse(const Mat& m) { return gauss_jordan_inverse<GaussRational>(m, gzero); }

Signature signature(const QMat& s) {
    const std::size_t n = s.rows();
    if (s.cols() != n) throw NotSymmetric("non-square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (s(i, j) != s(j, i)) throw NotSymmetric("matrix != transpose");
    QMat a = s;
    Signature sig{0, 0, 0};
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            // try a later nonzero diagonal entry
            std::size_t d = k + 1;
            while (d < n && sgn(a(d, d)) == 0) ++d;
            if (d < n) {
                for (std::size_t j = 0; j < n; ++j) swap(a(k, j), a(d, j));
                for (std::size_t i = 0; i < n; ++i) swap(a(i, k), a(i, d));
            } else {
                // all remaining diagonal zero: borrow an off-diagonal entry
                std::size_t j = k + 1;
                while (j < n && sgn(a(j, k)) == 0) ++j;
                if (j == n) { ++sig.zero; continue; }
                for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
                for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
            }
        }
        Rational piv = a(k, k);
        int sg = sgn(piv);
        if (sg > 0) ++sig.pos; else ++sig.neg;
        // after the row ops alone, the trailing submatrix equals the
        // congruence complement C - b b^T / piv, which is symmetric
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(a(i, k)) == 0) continue;
            Rational f = a(i, k) / piv;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
        for (std::size_t i = k + 1; i < n; ++i) { a(i, k) = 0; a(k, i) = 0; }
    }
    return sig;
}

Signature signature(const Mat& s) {
    if (!is_real(s)) throw NotSymmetric("signature requires a real matrix");
    return signature(real_part(s));
}

} // namespace sph
