#include <sph/octonion.hpp>
#include <sph/subspace.hpp>

namespace sph {

namespace {

// quaternion product q_a q_b = sign * q_idx on basis 1,i,j,k
void quat_mult(std::size_t a, std::size_t b, int& sign, std::size_t& idx) {
    if (a == 0) { sign = 1; idx = b; return; }
    if (b == 0) { sign = 1; idx = a; return; }
    if (a == b) { sign = -1; idx = 0; return; }
    // cyclic (1,2,3)
    static const int eps[4][4] = {
        {0, 0, 0, 0}, {0, 0, 1, -1}, {0, -1, 0, 1}, {0, 1, -1, 0}};
    sign = eps[a][b];
    idx = 6 - a - b;
}

int quat_conj_sign(std::size_t a) { return a == 0 ? 1 : -1; }

} // namespace

QVec OctonionAlgebra::mult(std::size_t i, std::size_t j) const {
    QVec out(8, Rational(0));
    // (a,b)(c,d) = (ac + mu * conj(d) b, da + b conj(c)), mu = split ? 1 : -1
    std::size_t hi = i / 4, a = i % 4;
    std::size_t hj = j / 4, c = j % 4;
    int sign;
    std::size_t idx;
    if (hi == 0 && hj == 0) {
        quat_mult(a, c, sign, idx);
        out[idx] = sign;
    } else if (hi == 0 && hj == 1) {
        quat_mult(c, a, sign, idx);  // d a
        out[4 + idx] = sign;
    } else if (hi == 1 && hj == 0) {
        quat_mult(a, c, sign, idx);  // b conj(c)
        out[4 + idx] = sign * quat_conj_sign(c);
    } else {
        quat_mult(c, a, sign, idx);  // conj(d) b
        out[idx] = sign * quat_conj_sign(c) * (split ? 1 : -1);
    }
    return out;
}

QMat OctonionAlgebra::norm_gram() const {
    // B(x,y) = scalar part of (x conj(y) + y conj(x)) / 2; diagonal here
    QMat g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) {
        QVec p = mult(i, i);  // e_i e_i = +- e_0 for i > 0; e_0 e_0 = e_0
        // N(e_i) = e_i conj(e_i) = -e_i e_i for imaginary units
        g(i, i) = i == 0 ? p[0] : -p[0];
    }
    return g;
}

QMat OctonionAlgebra::imaginary_gram() const {
    QMat full = norm_gram();
    QMat g(7, 7);
    for (std::size_t i = 0; i < 7; ++i) g(i, i) = full(i + 1, i + 1);
    return g;
}

OctonionAlgebra octonion_algebra(bool split) {
    OctonionAlgebra o;
    o.split = split;
    o.left.resize(8);
    for (std::size_t i = 0; i < 8; ++i) {
        QMat L(8, 8);
        for (std::size_t j = 0; j < 8; ++j) {
            QVec p = o.mult(i, j);
            for (std::size_t k = 0; k < 8; ++k) L(k, j) = p[k];
        }
        o.left[i] = std::move(L);
    }
    return o;
}

std::vector<QMat> derivation_matrices(const OctonionAlgebra& o) {
    // unknowns d(a,b), a,b in 1..7: D e_b = sum_a d(a,b) e_a, D e_0 = 0.
    // Leibniz on each basis pair (i,j): D(e_i e_j) = (D e_i) e_j + e_i (D e_j)
    auto col = [](std::size_t a, std::size_t b) { return (a - 1) * 7 + (b - 1); };
    QMat sys(7 * 7 * 8, 49);
    std::size_t row = 0;
    for (std::size_t i = 1; i <= 7; ++i)
        for (std::size_t j = 1; j <= 7; ++j) {
            QVec m = o.mult(i, j);
            for (std::size_t c = 0; c < 8; ++c) {
                // (D m)_c
                if (c >= 1)
                    for (std::size_t a = 1; a <= 7; ++a)
                        sys(row + c, col(c, a)) += m[a];
                // -(D e_i) e_j and -e_i (D e_j)
                for (std::size_t a = 1; a <= 7; ++a) {
                    sys(row + c, col(a, i)) -= o.mult(a, j)[c];
                    sys(row + c, col(a, j)) -= o.mult(i, a)[c];
                }
            }
            row += 8;
        }
    Subspace ker = kernel(sys);
    std::vector<QMat> out;
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        QVec v = ker.row(r);
        QMat d(7, 7);
        for (std::size_t a = 0; a < 7; ++a)
            for (std::size_t b = 0; b < 7; ++b) d(a, b) = v[a * 7 + b];
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace sph
