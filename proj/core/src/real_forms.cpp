#include <sph/real_forms.hpp>

namespace sph {

std::string family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::su: return "su";
        case FamilyTag::sl_R: return "sl_R";
        case FamilyTag::sl_H: return "sl_H";
        case FamilyTag::so: return "so";
        case FamilyTag::so_star: return "so_star";
        case FamilyTag::sp_R: return "sp_R";
        case FamilyTag::sp_pq: return "sp";
        case FamilyTag::su_compact: return "su_c";
        case FamilyTag::so_compact: return "so_c";
        case FamilyTag::sp_compact: return "sp_c";
        case FamilyTag::complex_sl: return "sl_C";
        case FamilyTag::complex_so: return "so_C";
        case FamilyTag::complex_sp: return "sp_C";
    }
    return "?";
}

std::string FormFamily::str() const {
    std::string s = family_name(tag) + "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(params[i]);
    }
    return s + ")";
}

Mat form_split(std::size_t p, std::size_t q) {
    const std::size_t r = std::min(p, q), d = (p > q ? p - q : q - p), n = p + q;
    Mat j(n, n);
    for (std::size_t i = 0; i < r; ++i) {
        j(i, r + i) = GaussRational(1);
        j(r + i, i) = GaussRational(1);
    }
    for (std::size_t i = 0; i < d; ++i) j(2 * r + i, 2 * r + i) = GaussRational(1);
    return j;
}

Mat split_to_diag_basis(std::size_t p, std::size_t q) {
    const std::size_t r = std::min(p, q), d = (p > q ? p - q : q - p), n = p + q;
    Mat t(n, n);
    // columns e_i + e_{r+i} (norm 2) and e_i - e_{r+i} (norm -2), then the
    // definite block unchanged
    for (std::size_t i = 0; i < r; ++i) {
        t(i, i) = GaussRational(1);
        t(r + i, i) = GaussRational(1);
        t(i, r + i) = GaussRational(1);
        t(r + i, r + i) = GaussRational(-1);
    }
    for (std::size_t i = 0; i < d; ++i) t(2 * r + i, 2 * r + i) = GaussRational(1);
    return t;
}

std::vector<Mat> solve_conditions(std::size_t N,
                                  const std::vector<std::function<Mat(const Mat&)>>& conds,
                                  bool real_only) {
    const std::size_t units = real_only ? N * N : 2 * N * N;
    // probe each condition's output shape
    std::vector<std::size_t> offs(conds.size() + 1, 0);
    {
        Mat probe(N, N);
        for (std::size_t c = 0; c < conds.size(); ++c) {
            Mat img = conds[c](probe);
            offs[c + 1] = offs[c] + 2 * img.rows() * img.cols();
        }
    }
    QMat sys(offs.back(), units);
    for (std::size_t u = 0; u < units; ++u) {
        Mat unit(N, N);
        std::size_t e = real_only ? u : u / 2;
        bool imag = !real_only && (u % 2 == 1);
        unit(e / N, e % N) = imag ? gauss_i() : GaussRational(1);
        for (std::size_t c = 0; c < conds.size(); ++c) {
            Mat img = conds[c](unit);
            const std::size_t w = img.cols();
            for (std::size_t i = 0; i < img.rows(); ++i)
                for (std::size_t j = 0; j < w; ++j) {
                    sys(offs[c] + 2 * (i * w + j), u) = img(i, j).re;
                    sys(offs[c] + 2 * (i * w + j) + 1, u) = img(i, j).im;
                }
        }
    }
    Subspace ker = kernel(sys);
    std::vector<Mat> basis;
    basis.reserve(ker.dim());
    for (std::size_t b = 0; b < ker.dim(); ++b) {
        Mat x(N, N);
        for (std::size_t u = 0; u < units; ++u) {
            const Rational& v = ker.basis()(b, u);
            if (sgn(v) == 0) continue;
            std::size_t e = real_only ? u : u / 2;
            bool imag = !real_only && (u % 2 == 1);
            if (imag) x(e / N, e % N) += GaussRational(Rational(0), v);
            else x(e / N, e % N) += GaussRational(v);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

namespace {

using Cond = std::function<Mat(const Mat&)>;

Cond form_cond_hermitian(const Mat& j) {
    return [j](const Mat& x) { return ctranspose(x) * j + j * x; };
}
Cond form_cond_bilinear(const Mat& j) {
    return [j](const Mat& x) { return x.transpose() * j + j * x; };
}
Cond quaternion_cond(std::size_t n) {
    Mat j(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, n + i) = GaussRational(1);
        j(n + i, i) = GaussRational(-1);
    }
    return [j](const Mat& x) { return x * j - j * conj(x); };
}
Cond trace_cond() {
    return [](const Mat& x) {
        Mat t(1, 1);
        t(0, 0) = x.trace();
        return t;
    };
}
Cond skew_cond() {
    return [](const Mat& x) { return x.transpose() + x; };
}
Cond antihermitian_cond() {
    return [](const Mat& x) { return ctranspose(x) + x; };
}

Mat sympl_omega(std::size_t n, const Mat& f) {
    // [[0, F], [-F, 0]] of size 2n
    Mat o(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            o(i, n + j) = f(i, j);
            o(n + i, j) = -f(i, j);
        }
    return o;
}

Mat diag_double(std::size_t n, const Mat& f) {
    Mat h(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            h(i, j) = f(i, j);
            h(n + i, n + j) = f(i, j);
        }
    return h;
}

QVec ambient_to_coords(const LieAlg& g, const Mat& x) { return g.coords_of(x); }

struct ABasis {
    std::vector<Mat> mats;
    std::vector<std::vector<Rational>> spectra;
    void add(Mat m, std::vector<long> spec) {
        mats.push_back(std::move(m));
        std::vector<Rational> s;
        for (long v : spec) s.emplace_back(v);
        spectra.push_back(std::move(s));
    }
};

Mat diag_unit(std::size_t N, std::initializer_list<std::pair<std::size_t, long>> entries) {
    Mat m(N, N);
    for (auto [i, v] : entries) m(i, i) = GaussRational(Rational(v));
    return m;
}

} // namespace

RealForm construct(const FormFamily& f) {
    for (int p : f.params)
        if (p < 0) throw BadParams("negative parameter in " + f.str());
    RealForm rf;
    rf.family = f;

    std::vector<Mat> basis;
    std::size_t N = 0;
    ABasis ab;

    auto need = [&](std::size_t k) {
        if (f.params.size() != k) throw BadParams(f.str() + ": wrong parameter count");
    };

    switch (f.tag) {
        case FamilyTag::su:
        case FamilyTag::su_compact: {
            std::size_t p, q;
            if (f.tag == FamilyTag::su_compact) {
                need(1);
                p = std::size_t(f.params[0]); q = 0;
            } else {
                need(2);
                p = std::size_t(f.params[0]); q = std::size_t(f.params[1]);
            }
            if (p + q < 2) throw BadParams(f.str() + ": needs p+q >= 2");
            N = p + q;
            const std::size_t r = std::min(p, q);
            Mat j = form_split(p, q);
            basis = solve_conditions(N, {form_cond_hermitian(j), trace_cond()}, false);
            rf.form = BilinearFormData{j, BilinearFormData::Kind::hermitian, signature(realify(j))};
            rf.split_pairs = r;
            rf.definite = N - 2 * r;
            for (std::size_t k = 0; k < r; ++k)
                ab.add(diag_unit(N, {{k, 1}, {r + k, -1}}), {1, -1, 0});
            break;
        }
        case FamilyTag::sl_R: {
            need(1);
            N = std::size_t(f.params[0]);
            if (N < 2) throw BadParams(f.str() + ": needs n >= 2");
            basis = solve_conditions(N, {trace_cond()}, true);
            for (std::size_t k = 0; k + 1 < N; ++k)
                ab.add(diag_unit(N, {{k, 1}, {k + 1, -1}}), {1, -1, 0});
            break;
        }
        case FamilyTag::sl_H: {
            need(1);
            std::size_t n = std::size_t(f.params[0]);
            if (n < 2) throw BadParams(f.str() + ": needs n >= 2");
            N = 2 * n;
            basis = solve_conditions(N, {quaternion_cond(n), trace_cond()}, false);
            rf.half_size = n;
            for (std::size_t k = 0; k + 1 < n; ++k)
                ab.add(diag_unit(N, {{k, 1}, {k + 1, -1}, {n + k, 1}, {n + k + 1, -1}}),
                       {1, -1, 0});
            break;
        }
        case FamilyTag::so:
        case FamilyTag::so_compact: {
            std::size_t p, q;
            if (f.tag == FamilyTag::so_compact) {
                need(1);
                p = std::size_t(f.params[0]); q = 0;
            } else {
                need(2);
                p = std::size_t(f.params[0]); q = std::size_t(f.params[1]);
            }
            N = p + q;
            if (N < 2) throw BadParams(f.str() + ": needs p+q >= 2");
            const std::size_t r = std::min(p, q);
            Mat j = form_split(p, q);
            basis = solve_conditions(N, {form_cond_bilinear(j)}, true);
            rf.form = BilinearFormData{j, BilinearFormData::Kind::symmetric, signature(j)};
            rf.split_pairs = r;
            rf.definite = N - 2 * r;
            for (std::size_t k = 0; k < r; ++k)
                ab.add(diag_unit(N, {{k, 1}, {r + k, -1}}), {1, -1, 0});
            break;
        }
        case FamilyTag::so_star: {
            need(1);
            // parameter is the full size: so_star(2n)
            if (f.params[0] < 4 || f.params[0] % 2 != 0)
                throw BadParams(f.str() + ": needs even size >= 4");
            std::size_t n = std::size_t(f.params[0]) / 2;
            N = 2 * n;
            Mat hp(N, N);  // [[0, iI], [-iI, 0]]
            for (std::size_t i = 0; i < n; ++i) {
                hp(i, n + i) = gauss_i();
                hp(n + i, i) = -gauss_i();
            }
            basis = solve_conditions(N, {skew_cond(), form_cond_hermitian(hp)}, false);
            rf.form = BilinearFormData{hp, BilinearFormData::Kind::hermitian,
                                       signature(realify(hp))};
            rf.half_size = n;
            for (std::size_t k = 0; 2 * k + 1 < n; ++k) {
                std::size_t u = 2 * k, v = 2 * k + 1;
                Mat x(N, N);
                x(u, n + v) = gauss_i();
                x(v, n + u) = -gauss_i();
                x(n + u, v) = gauss_i();
                x(n + v, u) = -gauss_i();
                ab.add(std::move(x), {1, -1, 0});
            }
            break;
        }
        case FamilyTag::sp_R: {
            need(1);
            std::size_t n = std::size_t(f.params[0]);
            if (n < 1) throw BadParams(f.str() + ": needs n >= 1");
            N = 2 * n;
            Mat omega = sympl_omega(n, to_complex(QMat::identity(n)));
            basis = solve_conditions(N, {form_cond_bilinear(omega)}, true);
            rf.form = BilinearFormData{omega, BilinearFormData::Kind::skew, std::nullopt};
            rf.half_size = n;
            for (std::size_t k = 0; k < n; ++k)
                ab.add(diag_unit(N, {{k, 1}, {n + k, -1}}), {1, -1, 0});
            break;
        }
        case FamilyTag::sp_pq:
        case FamilyTag::sp_compact: {
            std::size_t p, q;
            if (f.tag == FamilyTag::sp_compact) {
                need(1);
                p = std::size_t(f.params[0]); q = 0;
            } else {
                need(2);
                p = std::size_t(f.params[0]); q = std::size_t(f.params[1]);
            }
            std::size_t n = p + q;
            if (n < 1) throw BadParams(f.str() + ": needs p+q >= 1");
            N = 2 * n;
            const std::size_t r = std::min(p, q);
            Mat fmat = form_split(p, q);
            Mat omega = sympl_omega(n, fmat);
            Mat h = diag_double(n, fmat);
            basis = solve_conditions(N, {form_cond_bilinear(omega), form_cond_hermitian(h)},
                                     false);
            rf.form = BilinearFormData{h, BilinearFormData::Kind::hermitian,
                                       signature(realify(h))};
            rf.form2 = BilinearFormData{omega, BilinearFormData::Kind::skew, std::nullopt};
            rf.split_pairs = r;
            rf.definite = n - 2 * r;
            rf.half_size = n;
            for (std::size_t k = 0; k < r; ++k)
                ab.add(diag_unit(N, {{k, 1}, {r + k, -1}, {n + k, 1}, {n + r + k, -1}}),
                       {1, -1, 0});
            break;
        }
        case FamilyTag::complex_sl: {
            need(1);
            N = std::size_t(f.params[0]);
            if (N < 2) throw BadParams(f.str() + ": needs n >= 2");
            basis = solve_conditions(N, {trace_cond()}, false);
            for (std::size_t k = 0; k + 1 < N; ++k)
                ab.add(diag_unit(N, {{k, 1}, {k + 1, -1}}), {1, -1, 0});
            break;
        }
        case FamilyTag::complex_so: {
            need(1);
            N = std::size_t(f.params[0]);
            if (N < 3) throw BadParams(f.str() + ": needs n >= 3");
            const std::size_t r = N / 2;
            Mat j = form_split(r, N - r);
            basis = solve_conditions(N, {form_cond_bilinear(j)}, false);
            rf.form = BilinearFormData{j, BilinearFormData::Kind::symmetric, signature(j)};
            rf.split_pairs = r;
            rf.definite = N - 2 * r;
            for (std::size_t k = 0; k < r; ++k)
                ab.add(diag_unit(N, {{k, 1}, {r + k, -1}}), {1, -1, 0});
            break;
        }
        case FamilyTag::complex_sp: {
            need(1);
            std::size_t n = std::size_t(f.params[0]);
            if (n < 1) throw BadParams(f.str() + ": needs n >= 1");
            N = 2 * n;
            Mat omega = sympl_omega(n, to_complex(QMat::identity(n)));
            basis = solve_conditions(N, {form_cond_bilinear(omega)}, false);
            rf.form = BilinearFormData{omega, BilinearFormData::Kind::skew, std::nullopt};
            rf.half_size = n;
            for (std::size_t k = 0; k < n; ++k)
                ab.add(diag_unit(N, {{k, 1}, {n + k, -1}}), {1, -1, 0});
            break;
        }
    }

    auto alg = std::make_shared<LieAlg>(N, std::move(basis), f.str());
    rf.alg = alg;
    rf.theta = theta_matrix(*alg);

    std::vector<QVec> a_coords;
    a_coords.reserve(ab.mats.size());
    for (const auto& m : ab.mats) a_coords.push_back(ambient_to_coords(*alg, m));
    rf.par = make_parabolic(*alg, rf.theta, a_coords, ab.spectra);
    return rf;
}

RealForm complexify_as_real(const RealForm& g) {
    if (g.complexified) throw BadParams("complexify_as_real: already complexified");
    const LieAlg& a = *g.alg;
    std::vector<Mat> basis;
    basis.reserve(2 * a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back(a.basis_mat(i));
    for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back(a.basis_mat(i) * gauss_i());
    RealForm rf;
    rf.family = g.family;
    rf.alg = std::make_shared<LieAlg>(a.ambient_size(), std::move(basis),
                                      g.family.str() + "xC");
    rf.complexified = true;
    rf.split_pairs = g.split_pairs;
    rf.definite = g.definite;
    rf.half_size = g.half_size;
    rf.form = g.form;
    rf.form2 = g.form2;
    return rf;
}

} // namespace sph
