#include <sph/reps.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace sph {

namespace {

bool is_complex_family(FamilyTag t) {
    return t == FamilyTag::complex_sl || t == FamilyTag::complex_so ||
           t == FamilyTag::complex_sp;
}

long group_dim(const RealForm& f) {
    long d = long(f.dim());
    return is_complex_family(f.family.tag) ? d / 2 : d;
}

// action on Lambda^k via increasing index tuples
RepData wedge_rep(const RealForm& f, unsigned k) {
    std::size_t d = f.alg->ambient_size();
    std::vector<std::vector<std::size_t>> idx;
    if (k == 2) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) idx.push_back({i, j});
    } else if (k == 3) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                for (std::size_t l = j + 1; l < d; ++l) idx.push_back({i, j, l});
    } else {
        throw BadParams("wedge power " + std::to_string(k) + " is not available");
    }
    std::map<std::vector<std::size_t>, std::size_t> pos;
    for (std::size_t t = 0; t < idx.size(); ++t) pos[idx[t]] = t;

    RepData rep;
    rep.dim_v = idx.size();
    rep.dim_group = group_dim(f);
    rep.over_c = true;
    for (const Mat& x : f.alg->basis()) {
        Mat a(idx.size(), idx.size());
        for (std::size_t col = 0; col < idx.size(); ++col)
            for (std::size_t slot = 0; slot < k; ++slot)
                for (std::size_t j = 0; j < d; ++j) {
                    if (x(j, idx[col][slot]).is_zero()) continue;
                    std::vector<std::size_t> s = idx[col];
                    s[slot] = j;
                    // sort with sign, drop repeats
                    int sign = 1;
                    bool dup = false;
                    for (std::size_t a1 = 0; a1 < k && !dup; ++a1)
                        for (std::size_t b1 = a1 + 1; b1 < k; ++b1) {
                            if (s[a1] == s[b1]) { dup = true; break; }
                            if (s[a1] > s[b1]) { std::swap(s[a1], s[b1]); sign = -sign; }
                        }
                    if (dup) continue;
                    a(pos[s], col) += x(j, idx[col][slot]) * GaussRational(sign);
                }
        rep.action.push_back(std::move(a));
    }
    return rep;
}

// action on Sym^k via monomial exponent vectors
RepData sym_rep(const RealForm& f, unsigned k) {
    if (k != 2 && k != 3) throw BadParams("sym power " + std::to_string(k) + " is not available");
    std::size_t d = f.alg->ambient_size();
    std::vector<std::vector<unsigned>> mono;
    std::vector<unsigned> alpha(d, 0);
    std::function<void(std::size_t, unsigned)> gen = [&](std::size_t i, unsigned left) {
        if (i + 1 == d) {
            alpha[i] = left;
            mono.push_back(alpha);
            return;
        }
        for (unsigned c = 0; c <= left; ++c) {
            alpha[i] = c;
            gen(i + 1, left - c);
        }
    };
    gen(0, k);
    std::map<std::vector<unsigned>, std::size_t> pos;
    for (std::size_t t = 0; t < mono.size(); ++t) pos[mono[t]] = t;

    RepData rep;
    rep.dim_v = mono.size();
    rep.dim_group = group_dim(f);
    rep.over_c = true;
    for (const Mat& x : f.alg->basis()) {
        Mat a(mono.size(), mono.size());
        for (std::size_t col = 0; col < mono.size(); ++col)
            for (std::size_t i = 0; i < d; ++i) {
                if (mono[col][i] == 0) continue;
                for (std::size_t j = 0; j < d; ++j) {
                    if (x(j, i).is_zero()) continue;
                    std::vector<unsigned> m = mono[col];
                    --m[i];
                    ++m[j];
                    a(pos[m], col) += GaussRational(int(mono[col][i])) * x(j, i);
                }
            }
        rep.action.push_back(std::move(a));
    }
    return rep;
}

} // namespace

RepData standard_rep(const FormFamily& f) {
    RealForm g = construct(f);
    RepData rep;
    rep.action = g.alg->basis();
    rep.dim_v = g.alg->ambient_size();
    rep.dim_group = group_dim(g);
    rep.over_c = is_complex_family(f.tag);
    return rep;
}

RepData adjoint_rep(const FormFamily& f) {
    RealForm g = construct(f);
    RepData rep;
    std::size_t d = g.dim();
    for (std::size_t i = 0; i < d; ++i) {
        QVec e(d, Rational(0));
        e[i] = 1;
        rep.action.push_back(to_complex(g.alg->ad(e)));
    }
    rep.dim_v = d;
    rep.dim_group = long(d);
    rep.over_c = false;
    if (is_complex_family(f.tag)) {
        // adjoint of a complex algebra: treat the complex structure exactly
        rep.over_c = true;
        rep.dim_group = long(d) / 2;
    }
    return rep;
}

RepData sym_power_rep(const FormFamily& f, unsigned k) { return sym_rep(construct(f), k); }

RepData wedge_power_rep(const FormFamily& f, unsigned k) { return wedge_rep(construct(f), k); }

RepData wedge_primitive_rep(unsigned n, unsigned k) {
    if (k != 2 && k != 3)
        throw BadParams("primitive wedge power " + std::to_string(k) + " is not available");
    RealForm g = construct({FamilyTag::complex_sp, {int(n)}});
    RepData full = wedge_rep(g, k);
    std::size_t d = 2 * n;
    auto omega = [&](std::size_t a, std::size_t b) -> int {
        if (b == a + n && a < n) return 1;
        if (a == b + n && b < n) return -1;
        return 0;
    };
    std::vector<std::vector<std::size_t>> idx;
    if (k == 2) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) idx.push_back({i, j});
    } else {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                for (std::size_t l = j + 1; l < d; ++l) idx.push_back({i, j, l});
    }

    // contraction rows: omega paired into each slot pair, sign by position
    std::size_t crows = k == 2 ? 1 : d;
    QMat cond(crows, idx.size());
    for (std::size_t t = 0; t < idx.size(); ++t) {
        const auto& s = idx[t];
        if (k == 2) {
            cond(0, t) += omega(s[0], s[1]);
        } else {
            cond(s[2], t) += omega(s[0], s[1]);
            cond(s[1], t) -= omega(s[0], s[2]);
            cond(s[0], t) += omega(s[1], s[2]);
        }
    }
    Subspace prim = kernel(cond);
    std::size_t m = prim.dim();

    // complete the basis with the complement omega wedge Lambda^(k-2)
    Mat bmat(idx.size(), idx.size());
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t r = 0; r < idx.size(); ++r) bmat(r, c) = GaussRational(prim.row(c)[r]);
    std::map<std::vector<std::size_t>, std::size_t> pos;
    for (std::size_t t = 0; t < idx.size(); ++t) pos[idx[t]] = t;
    std::size_t col = m;
    auto put_omega_wedge = [&](const std::vector<std::size_t>& rest) {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::size_t> s = {i, n + i};
            s.insert(s.end(), rest.begin(), rest.end());
            int sign = 1;
            bool dup = false;
            for (std::size_t a1 = 0; a1 < s.size() && !dup; ++a1)
                for (std::size_t b1 = a1 + 1; b1 < s.size(); ++b1) {
                    if (s[a1] == s[b1]) { dup = true; break; }
                    if (s[a1] > s[b1]) { std::swap(s[a1], s[b1]); sign = -sign; }
                }
            if (!dup) bmat(pos[s], col) += GaussRational(sign);
        }
        ++col;
    };
    if (k == 2) {
        put_omega_wedge({});
    } else {
        for (std::size_t l = 0; l < d; ++l) put_omega_wedge({l});
    }
    Mat binv = inverse(bmat);

    RepData rep;
    rep.dim_v = m;
    rep.dim_group = full.dim_group;
    rep.over_c = true;
    for (const Mat& a : full.action) {
        Mat conj_a = binv * a * bmat;
        Mat cut(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) cut(i, j) = conj_a(i, j);
        rep.action.push_back(std::move(cut));
    }
    return rep;
}

RepData spin_rep_c(unsigned m) {
    RepData rep;
    rep.over_c = true;
    std::vector<Mat> real_gens;
    if (m == 7) {
        auto o = octonion_algebra(false);
        for (std::size_t i = 1; i <= 7; ++i)
            for (std::size_t j = i + 1; j <= 7; ++j)
                real_gens.push_back(to_complex(o.left_mult(i) * o.left_mult(j)));
        rep.dim_v = 8;
        rep.dim_group = 21;
    } else if (m == 9) {
        auto o = octonion_algebra(false);
        std::vector<QMat> gam;
        for (std::size_t i = 1; i <= 7; ++i) {
            QMat g16(16, 16);
            const QMat& l = o.left_mult(i);
            for (std::size_t a = 0; a < 8; ++a)
                for (std::size_t b = 0; b < 8; ++b) {
                    g16(a, 8 + b) = l(a, b);
                    g16(8 + a, b) = l(b, a);
                }
            gam.push_back(std::move(g16));
        }
        QMat g8(16, 16), g9(16, 16);
        for (std::size_t a = 0; a < 8; ++a) {
            g8(a, 8 + a) = 1;
            g8(8 + a, a) = 1;
            g9(a, a) = 1;
            g9(8 + a, 8 + a) = -1;
        }
        gam.push_back(std::move(g8));
        gam.push_back(std::move(g9));
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = i + 1; j < 9; ++j)
                real_gens.push_back(to_complex(gam[i] * gam[j]));
        rep.dim_v = 16;
        rep.dim_group = 36;
    } else {
        throw BadParams("spin(" + std::to_string(m) + ",C) representation is not available");
    }
    for (const Mat& x : real_gens) {
        rep.action.push_back(x);
        rep.action.push_back(x * gauss_i());
    }
    return rep;
}

RepData g2_rep_c() {
    auto o = octonion_algebra(false);
    RepData rep;
    rep.dim_v = 7;
    rep.dim_group = 14;
    rep.over_c = true;
    for (const QMat& der : derivation_matrices(o)) {
        Mat a = to_complex(der);
        rep.action.push_back(a);
        rep.action.push_back(a * gauss_i());
    }
    return rep;
}

} // namespace sph
