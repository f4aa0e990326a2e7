#include <sph/embeddings.hpp>

#include <functional>

namespace sph {

namespace {

enum class AmbClass {
    plain_diag,      // su, so, su_c, so_c, complex_so: slot = index, +-diag model
    mirrored_diag,   // sp_pq, sp_c, sp_R, complex_sp: slot = F-slot, mirrored
    mirrored_plain,  // sl_H, so_star: slot = mirrored index, no form model
    plain,           // sl_R, complex_sl: slot = index
};

AmbClass amb_class(FamilyTag t) {
    switch (t) {
        case FamilyTag::su:
        case FamilyTag::su_compact:
        case FamilyTag::so:
        case FamilyTag::so_compact:
        case FamilyTag::complex_so: return AmbClass::plain_diag;
        case FamilyTag::sp_pq:
        case FamilyTag::sp_compact:
        case FamilyTag::sp_R:
        case FamilyTag::complex_sp: return AmbClass::mirrored_diag;
        case FamilyTag::sl_H:
        case FamilyTag::so_star: return AmbClass::mirrored_plain;
        case FamilyTag::sl_R:
        case FamilyTag::complex_sl: return AmbClass::plain;
    }
    throw BadTarget("unknown family class");
}

// columns turning the split form layout (r pairs then d definite) into the
// diagonal model diag(I_{r+d}, -I_r)
Mat split_diag_columns(std::size_t r, std::size_t d) {
    std::size_t n = 2 * r + d;
    Mat p(n, n);
    for (std::size_t i = 0; i < r; ++i) {
        p(i, i) = GaussRational(1);
        p(r + i, i) = GaussRational(rat(1, 2));
        p(i, r + d + i) = GaussRational(1);
        p(r + i, r + d + i) = GaussRational(rat(-1, 2));
    }
    for (std::size_t i = 0; i < d; ++i) p(2 * r + i, r + i) = GaussRational(1);
    return p;
}

Mat mirror2(const Mat& p) {
    std::size_t n = p.rows();
    Mat m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = p(i, j);
            m(n + i, n + j) = p(i, j);
        }
    return m;
}

struct DiagGens {
    std::vector<Mat> gens;      // diag-model matrices (mirrored ones doubled)
    std::vector<int> signs;     // per slot (F-slot when mirrored)
    bool mirrored = false;
    std::size_t rank = 0;
};

DiagGens diag_gens(const RealForm& f) {
    DiagGens dg;
    dg.rank = f.complexified ? 0 : f.real_rank();
    const LieAlg& a = *f.alg;
    switch (amb_class(f.family.tag)) {
        case AmbClass::plain_diag: {
            std::size_t r = f.split_pairs, d = f.definite;
            Mat p = split_diag_columns(r, d), pinv = inverse(p);
            for (std::size_t i = 0; i < a.dim(); ++i)
                dg.gens.push_back(pinv * a.basis_mat(i) * p);
            dg.signs.assign(r + d, 1);
            dg.signs.insert(dg.signs.end(), r, -1);
            break;
        }
        case AmbClass::mirrored_diag: {
            std::size_t r = f.split_pairs, d = f.definite;
            std::size_t n = f.half_size;
            Mat pf = (r || d) ? split_diag_columns(r, d)
                              : Mat::identity(n);  // sp_R / complex_sp: F = I
            if (pf.rows() != n) pf = Mat::identity(n);
            Mat p = mirror2(pf), pinv = inverse(p);
            for (std::size_t i = 0; i < a.dim(); ++i)
                dg.gens.push_back(pinv * a.basis_mat(i) * p);
            if (r + d > 0) {
                dg.signs.assign(r + d, 1);
                dg.signs.insert(dg.signs.end(), r, -1);
            } else {
                dg.signs.assign(n, 1);
            }
            dg.mirrored = true;
            break;
        }
        case AmbClass::mirrored_plain:
            for (std::size_t i = 0; i < a.dim(); ++i) dg.gens.push_back(a.basis_mat(i));
            dg.signs.assign(f.half_size, 1);
            dg.mirrored = true;
            break;
        case AmbClass::plain:
            for (std::size_t i = 0; i < a.dim(); ++i) dg.gens.push_back(a.basis_mat(i));
            dg.signs.assign(a.ambient_size(), 1);
            break;
    }
    return dg;
}

std::size_t count_of(const std::vector<int>& signs, int s) {
    std::size_t c = 0;
    for (int v : signs)
        if (v == s) ++c;
    return c;
}

// allocate diag-model slots for the given sign pattern, flipping globally if
// the budget only fits the flipped pattern
std::vector<std::size_t> allocate_slots(EmbeddingContext& ctx, std::vector<int> signs) {
    auto fits = [&](const std::vector<int>& sg) {
        return ctx.plus_used + count_of(sg, 1) <= ctx.plus_total &&
               ctx.minus_used + count_of(sg, -1) <= ctx.minus_total;
    };
    if (!fits(signs)) {
        for (int& s : signs) s = -s;
        if (!fits(signs))
            throw FormIncompatible(ctx.desc + ": factor does not fit the remaining slots");
    }
    std::vector<std::size_t> map(signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i)
        map[i] = signs[i] > 0 ? ctx.plus_used++ : ctx.plus_total + ctx.minus_used++;
    return map;
}

void push_diag(EmbeddingContext& ctx, const Mat& z) {
    ctx.gens.push_back(ctx.trans * z * ctx.trans_inv);
}

// scatter a diag-model factor generator through a slot map; mirrored ambients
// duplicate the map across the two halves
void place(EmbeddingContext& ctx, const DiagGens& dg, const std::string& what) {
    AmbClass ac = amb_class(ctx.g->family.tag);
    std::size_t N = ctx.g->alg->ambient_size();
    bool amb_mirrored = ac == AmbClass::mirrored_diag || ac == AmbClass::mirrored_plain;

    std::vector<int> signs = dg.signs;
    if (dg.mirrored && !amb_mirrored) {
        // flatten a mirrored factor into a plain ambient: both halves get slots
        signs.insert(signs.end(), dg.signs.begin(), dg.signs.end());
    }
    if (!dg.mirrored && amb_mirrored)
        throw BadTarget(what + ": plain factor cannot occupy a mirrored ambient block");
    if (ac == AmbClass::plain || ac == AmbClass::mirrored_plain)
        for (int& s : signs) s = 1;  // no form, slots carry no sign

    std::vector<std::size_t> map = allocate_slots(ctx, signs);
    std::size_t half = amb_mirrored ? N / 2 : 0;
    std::size_t fhalf = dg.mirrored ? dg.signs.size() : 0;
    auto amb_index = [&](std::size_t a) {
        if (dg.mirrored && amb_mirrored)
            return a < fhalf ? map[a] : half + map[a - fhalf];
        return map[a];
    };

    for (const Mat& gme : dg.gens) {
        Mat z(N, N);
        for (std::size_t i = 0; i < gme.rows(); ++i)
            for (std::size_t j = 0; j < gme.cols(); ++j)
                if (!gme(i, j).is_zero()) z(amb_index(i), amb_index(j)) = gme(i, j);
        push_diag(ctx, z);
    }
    ctx.h_rank += dg.rank;
    if (!ctx.desc.empty()) ctx.desc += " + ";
    ctx.desc += what;
}

Mat tensor_form(const RealForm& f) {
    switch (f.family.tag) {
        case FamilyTag::su:
        case FamilyTag::so:
        case FamilyTag::complex_so: return f.form->matrix;
        case FamilyTag::su_compact:
        case FamilyTag::so_compact: return Mat::identity(f.alg->ambient_size());
        case FamilyTag::sp_R:
        case FamilyTag::complex_sp: return f.form->matrix;  // omega
        case FamilyTag::sp_pq:
        case FamilyTag::sp_compact: return f.form2->matrix;  // omega
        default: throw BadTarget("tensor factor " + f.family.str() + " carries no form");
    }
}

// complex transition with U^T J U = I for a complex-bilinear split form
Mat complex_to_unit_form(std::size_t r, std::size_t d) {
    std::size_t n = 2 * r + d;
    Mat u(n, n);
    for (std::size_t i = 0; i < r; ++i) {
        u(i, 2 * i) = GaussRational(1);
        u(r + i, 2 * i) = GaussRational(rat(1, 2));
        u(i, 2 * i + 1) = gauss_i();
        u(r + i, 2 * i + 1) = -gauss_i() * GaussRational(rat(1, 2));
    }
    for (std::size_t i = 0; i < d; ++i) u(2 * r + i, 2 * r + i) = GaussRational(1);
    return u;
}

} // namespace

EmbeddingContext make_context(const RealForm& g) {
    EmbeddingContext ctx;
    ctx.g = &g;
    std::size_t N = g.alg->ambient_size();
    switch (amb_class(g.family.tag)) {
        case AmbClass::plain_diag: {
            ctx.trans = split_diag_columns(g.split_pairs, g.definite);
            ctx.plus_total = g.split_pairs + g.definite;
            ctx.minus_total = g.split_pairs;
            break;
        }
        case AmbClass::mirrored_diag: {
            std::size_t n = g.half_size;
            bool has_form = g.split_pairs + g.definite > 0;  // sp(p,q); sp_R has F = I
            Mat pf = has_form ? split_diag_columns(g.split_pairs, g.definite)
                              : Mat::identity(n);
            ctx.trans = mirror2(pf);
            ctx.plus_total = has_form ? g.split_pairs + g.definite : n;
            ctx.minus_total = g.split_pairs;
            break;
        }
        case AmbClass::mirrored_plain:
            ctx.trans = Mat::identity(N);
            ctx.plus_total = g.half_size;
            ctx.minus_total = 0;
            break;
        case AmbClass::plain:
            ctx.trans = Mat::identity(N);
            ctx.plus_total = N;
            ctx.minus_total = 0;
            break;
    }
    ctx.trans_inv = inverse(ctx.trans);
    return ctx;
}

void add_block(EmbeddingContext& ctx, const FormFamily& factor) {
    RealForm f = construct(factor);
    FamilyTag at = ctx.g->family.tag;
    // only real factors can sit inside a real ambient block
    bool real_ambient = at == FamilyTag::sl_R || at == FamilyTag::so ||
                        at == FamilyTag::so_compact || at == FamilyTag::sp_R;
    if (real_ambient)
        for (std::size_t i = 0; i < f.alg->dim(); ++i)
            if (!is_real(f.alg->basis_mat(i)))
                throw BadTarget(factor.str() + ": complex factor in a real ambient block");
    place(ctx, diag_gens(f), factor.str());
}

void add_realify(EmbeddingContext& ctx, const FormFamily& factor) {
    FamilyTag at = ctx.g->family.tag;
    RealForm f = construct(factor);
    if (at == FamilyTag::so || at == FamilyTag::so_compact) {
        // complex unitary factor as real 2x2 blocks
        DiagGens dg = diag_gens(f);
        DiagGens out;
        out.rank = dg.rank;
        std::vector<int> s2;
        std::vector<int> base = dg.signs;
        if (dg.mirrored) base.insert(base.end(), dg.signs.begin(), dg.signs.end());
        for (int s : base) {
            s2.push_back(s);
            s2.push_back(s);
        }
        out.signs = std::move(s2);
        for (const Mat& m : dg.gens) out.gens.push_back(to_complex(realify(m)));
        place(ctx, out, factor.str() + "@realify");
        return;
    }
    if (at == FamilyTag::sp_R) {
        // u-type factor: X = A + iB against its diagonal model D becomes
        // [[A, -BD], [DB, DAD]] in sp(2n,R)
        if (factor.tag != FamilyTag::su && factor.tag != FamilyTag::su_compact)
            throw BadTarget(factor.str() + " cannot realify into sp_R");
        DiagGens dg = diag_gens(f);
        std::size_t m = dg.signs.size();
        QMat d(m, m);
        for (std::size_t i = 0; i < m; ++i) d(i, i) = dg.signs[i];
        DiagGens out;
        out.rank = dg.rank;
        out.mirrored = true;
        out.signs.assign(m, 1);
        for (const Mat& gm : dg.gens) {
            QMat a = real_part(gm), b(m, m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) b(i, j) = gm(i, j).im;
            QMat z(2 * m, 2 * m);
            QMat bd = b * d, db = d * b, dad = d * a * d;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    z(i, j) = a(i, j);
                    z(i, m + j) = -bd(i, j);
                    z(m + i, j) = db(i, j);
                    z(m + i, m + j) = dad(i, j);
                }
            out.gens.push_back(to_complex(z));
        }
        place(ctx, out, factor.str() + "@realify");
        return;
    }
    if (at == FamilyTag::su || at == FamilyTag::su_compact) {
        // quaternionic factor flattened over C
        if (factor.tag != FamilyTag::sp_pq && factor.tag != FamilyTag::sp_compact)
            throw BadTarget(factor.str() + " cannot realify into su");
        place(ctx, diag_gens(f), factor.str() + "@realify");
        return;
    }
    throw BadTarget("realify into " + ctx.g->family.str() + " is not supported");
}

void add_quaternionify(EmbeddingContext& ctx, const FamilyTag, const FormFamily& factor) {
    FamilyTag at = ctx.g->family.tag;
    RealForm f = construct(factor);
    const LieAlg& a = *f.alg;
    std::size_t m = a.ambient_size();
    DiagGens out;
    out.mirrored = true;
    out.rank = f.complexified ? 0 : f.real_rank();

    std::vector<Mat> base;
    if (at == FamilyTag::sp_pq || at == FamilyTag::sp_compact) {
        if (factor.tag != FamilyTag::su && factor.tag != FamilyTag::su_compact)
            throw BadTarget(factor.str() + " cannot quaternionify into sp");
        DiagGens dg = diag_gens(f);
        base = dg.gens;
        out.signs = dg.signs;
        out.rank = dg.rank;
    } else if (at == FamilyTag::sl_H) {
        if (factor.tag != FamilyTag::complex_sl)
            throw BadTarget(factor.str() + " cannot quaternionify into sl_H");
        for (std::size_t i = 0; i < a.dim(); ++i) base.push_back(a.basis_mat(i));
        out.signs.assign(m, 1);
    } else if (at == FamilyTag::so_star) {
        if (factor.tag != FamilyTag::complex_so)
            throw BadTarget(factor.str() + " cannot quaternionify into so_star");
        Mat u = complex_to_unit_form(f.split_pairs, f.definite), uinv = inverse(u);
        for (std::size_t i = 0; i < a.dim(); ++i)
            base.push_back(uinv * a.basis_mat(i) * u);
        out.signs.assign(m, 1);
    } else {
        throw BadTarget("quaternionify into " + ctx.g->family.str() + " is not supported");
    }

    for (const Mat& x : base) {
        Mat z(2 * m, 2 * m);
        Mat xc = conj(x);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                z(i, j) = x(i, j);
                z(m + i, m + j) = xc(i, j);
            }
        out.gens.push_back(z);
    }
    place(ctx, out, factor.str() + "@quaternionify");
}

void add_diag_double(EmbeddingContext& ctx, const FormFamily& factor) {
    add_quaternionify(ctx, ctx.g->family.tag, factor);
}

Mat form_align(const Mat& m, const RealForm& g) {
    AmbClass ac = amb_class(g.family.tag);
    std::size_t N = g.alg->ambient_size();
    if (m.rows() != N || m.cols() != N)
        throw FormIncompatible("form_align: size mismatch");
    bool complex_ok = g.family.tag == FamilyTag::complex_so;

    auto try_align = [&](const Mat& target) -> Mat {
        // decompose the target into monomial pairs and diagonal entries
        std::vector<std::pair<std::size_t, std::size_t>> pairs;  // A < B
        std::vector<GaussRational> pair_vals;
        std::vector<std::size_t> plus_diag, minus_diag;
        std::vector<bool> seen(N, false);
        for (std::size_t i = 0; i < N; ++i) {
            if (seen[i]) continue;
            std::size_t nz = 0, j = 0;
            for (std::size_t c = 0; c < N; ++c)
                if (!target(i, c).is_zero()) {
                    ++nz;
                    j = c;
                }
            if (nz != 1) throw FormIncompatible("form_align: target is not monomial");
            if (i == j) {
                if (target(i, i) == GaussRational(1)) plus_diag.push_back(i);
                else if (target(i, i) == GaussRational(-1)) minus_diag.push_back(i);
                else throw FormIncompatible("form_align: non-unit diagonal");
            } else {
                pairs.emplace_back(i, j);
                pair_vals.push_back(target(i, j));
                seen[j] = true;
            }
            seen[i] = true;
        }

        if (ac == AmbClass::mirrored_diag) {
            // skew ambient with F = I: every target orbit must be a pair
            if (g.split_pairs > 0)
                throw FormIncompatible("form_align: indefinite sp ambient unsupported");
            if (!plus_diag.empty() || !minus_diag.empty())
                throw FormIncompatible("form_align: diagonal target for a skew form");
            std::size_t n = g.half_size;
            if (pairs.size() != n) throw SignatureMismatch("form_align: pair count");
            Mat p(N, N);
            for (std::size_t t = 0; t < n; ++t) {
                auto [A, B] = pairs[t];
                // omega(t, n+t) = 1
                p(t, A) = GaussRational(1);
                p(n + t, B) = pair_vals[t];
            }
            return p;
        }

        std::size_t r = g.split_pairs, d = g.definite;
        std::size_t hyper = std::min(plus_diag.size(), minus_diag.size());
        if (minus_diag.size() > plus_diag.size() && !complex_ok)
            throw SignatureMismatch("form_align: too many negative directions");
        std::size_t singles = complex_ok ? plus_diag.size() + minus_diag.size() - 2 * hyper
                                         : plus_diag.size() - hyper;
        // over C two same-sign directions also span a hyperbolic pair
        std::size_t extra = 0;
        if (complex_ok && pairs.size() + hyper < r) {
            extra = std::min(r - pairs.size() - hyper, singles / 2);
            singles -= 2 * extra;
        }
        if (pairs.size() + hyper + extra > r || singles > d)
            throw SignatureMismatch("form_align: slot budget exceeded");
        if (pairs.size() + hyper + extra != r || singles != d)
            throw SignatureMismatch("form_align: target does not fill the ambient form");

        Mat p(N, N);
        std::size_t t = 0, s = 0;
        for (std::size_t k = 0; k < pairs.size(); ++k, ++t) {
            auto [A, B] = pairs[k];
            p(t, A) = GaussRational(1);
            p(r + t, B) = pair_vals[k];
        }
        for (std::size_t k = 0; k < hyper; ++k, ++t) {
            p(t, plus_diag[k]) = GaussRational(1);
            p(r + t, plus_diag[k]) = GaussRational(rat(1, 2));
            p(t, minus_diag[k]) = GaussRational(1);
            p(r + t, minus_diag[k]) = GaussRational(rat(-1, 2));
        }
        const auto& surplus = plus_diag.size() > minus_diag.size() ? plus_diag : minus_diag;
        int sg = plus_diag.size() > minus_diag.size() ? 1 : -1;
        std::size_t used = hyper;
        for (std::size_t k = 0; k < extra; ++k, ++t, used += 2) {
            std::size_t A = surplus[used], B = surplus[used + 1];
            p(t, A) = GaussRational(1);
            p(t, B) = gauss_i();
            p(r + t, A) = GaussRational(rat(sg, 2));
            p(r + t, B) = GaussRational(rat(-sg, 2)) * gauss_i();
        }
        for (std::size_t k = hyper + (sg > 0 ? 2 * extra : 0); k < plus_diag.size(); ++k, ++s)
            p(2 * r + s, plus_diag[k]) = GaussRational(1);
        for (std::size_t k = hyper + (sg > 0 ? 0 : 2 * extra); k < minus_diag.size(); ++k, ++s)
            p(2 * r + s, minus_diag[k]) = gauss_i();  // complex bilinear ambient only
        return p;
    };

    try {
        return try_align(m);
    } catch (const SignatureMismatch&) {
        return try_align(-m);
    }
}

void add_tensor(EmbeddingContext& ctx, const FormFamily& f1, const FormFamily& f2) {
    RealForm a = construct(f1), b = construct(f2);
    std::size_t n1 = a.alg->ambient_size(), n2 = b.alg->ambient_size();
    std::size_t N = ctx.g->alg->ambient_size();
    if (n1 * n2 != N) throw BadTarget("tensor factors do not fill the ambient space");
    if (ctx.plus_used || ctx.minus_used)
        throw BadTarget("tensor embedding needs the whole ambient space");
    Mat m = tensor_form(a).kron(tensor_form(b));
    Mat p = form_align(m, *ctx.g), pinv = inverse(p);
    Mat i1 = Mat::identity(n1), i2 = Mat::identity(n2);
    for (std::size_t i = 0; i < a.alg->dim(); ++i)
        ctx.gens.push_back(p * a.alg->basis_mat(i).kron(i2) * pinv);
    for (std::size_t i = 0; i < b.alg->dim(); ++i)
        ctx.gens.push_back(p * i1.kron(b.alg->basis_mat(i)) * pinv);
    ctx.plus_used = ctx.plus_total;
    ctx.minus_used = ctx.minus_total;
    ctx.h_rank += a.real_rank() + b.real_rank();
    if (!ctx.desc.empty()) ctx.desc += " + ";
    ctx.desc += f1.str() + "x" + f2.str();
}

namespace {

// 2x2 generators: 0 = I, 1 = [[0,1],[1,0]], 2 = [[0,-i],[i,0]], 3 = diag(1,-1)
Mat pauli(int t) {
    Mat m(2, 2);
    switch (t) {
        case 0: m(0, 0) = m(1, 1) = GaussRational(1); break;
        case 1: m(0, 1) = m(1, 0) = GaussRational(1); break;
        case 2: m(0, 1) = -gauss_i(); m(1, 0) = gauss_i(); break;
        default: m(0, 0) = GaussRational(1); m(1, 1) = GaussRational(-1); break;
    }
    return m;
}

Mat pauli_kron(int a, int b, int c, bool times_i) {
    Mat m = pauli(a).kron(pauli(b)).kron(pauli(c));
    return times_i ? m * gauss_i() : m;
}

// anticommuting antisymmetric Clifford generators on C^8 compatible with the
// quaternionic structure of so*(8): conj(G) = +-H' G H'^-1 with a uniform
// sign, so all products G_a G_b land in the so*(8) realization
std::vector<Mat> star_clifford(int p, int q) {
    if (p == 6 && q == 1)
        return {pauli_kron(1, 0, 2, false), pauli_kron(1, 2, 1, false),
                pauli_kron(1, 2, 3, false), pauli_kron(3, 1, 2, false),
                pauli_kron(3, 2, 0, false), pauli_kron(3, 3, 2, false),
                pauli_kron(2, 0, 0, true)};
    return {pauli_kron(0, 0, 2, false), pauli_kron(0, 2, 1, false),
            pauli_kron(2, 0, 3, false), pauli_kron(2, 1, 1, false),
            pauli_kron(2, 3, 1, false), pauli_kron(1, 2, 3, true),
            pauli_kron(3, 2, 3, true)};
}

} // namespace

void add_spin(EmbeddingContext& ctx, int p, int q) {
    DiagGens dg;
    if ((p == 6 && q == 1) || (p == 5 && q == 2)) {
        if (ctx.g->family.tag != FamilyTag::so_star)
            throw BadTarget("spin(" + std::to_string(p) + "," + std::to_string(q) +
                            ") needs an so_star ambient");
        std::vector<Mat> gam = star_clifford(p, q);
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = i + 1; j < 7; ++j) dg.gens.push_back(gam[i] * gam[j]);
        dg.signs.assign(4, 1);
        dg.mirrored = true;
        dg.rank = std::min(p, q);
        place(ctx, dg, "spin(" + std::to_string(p) + "," + std::to_string(q) + ")");
        return;
    }
    if (p == 7 && q == 0) {
        auto o = octonion_algebra(false);
        for (std::size_t i = 1; i <= 7; ++i)
            for (std::size_t j = i + 1; j <= 7; ++j)
                dg.gens.push_back(to_complex(o.left_mult(i) * o.left_mult(j)));
        dg.signs.assign(8, 1);
        dg.rank = 0;
    } else if (p == 3 && q == 4) {
        auto o = octonion_algebra(true);
        for (std::size_t i = 1; i <= 7; ++i)
            for (std::size_t j = i + 1; j <= 7; ++j)
                dg.gens.push_back(to_complex(o.left_mult(i) * o.left_mult(j)));
        QMat gr = o.norm_gram();
        for (std::size_t i = 0; i < 8; ++i) dg.signs.push_back(sgn(gr(i, i)));
        dg.rank = 3;
    } else if (p == 9 && q == 0) {
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
                dg.gens.push_back(to_complex(gam[i] * gam[j]));
        dg.signs.assign(16, 1);
        dg.rank = 0;
    } else {
        throw UnsupportedSignature("spin(" + std::to_string(p) + "," + std::to_string(q) +
                                   ") is not available");
    }
    place(ctx, dg, "spin(" + std::to_string(p) + "," + std::to_string(q) + ")");
}

void add_octonion_derivations(EmbeddingContext& ctx, bool split) {
    auto o = octonion_algebra(split);
    DiagGens dg;
    for (const QMat& d : derivation_matrices(o)) dg.gens.push_back(to_complex(d));
    QMat gr = o.imaginary_gram();
    for (std::size_t i = 0; i < 7; ++i) dg.signs.push_back(sgn(gr(i, i)));
    dg.rank = split ? 2 : 0;
    place(ctx, dg, split ? "g2_split" : "g2");
}

void add_verbatim(EmbeddingContext& ctx, const std::vector<Mat>& gens, std::size_t rank,
                  const std::string& what) {
    for (const Mat& m : gens) ctx.gens.push_back(m);
    ctx.plus_used = ctx.plus_total;
    ctx.minus_used = ctx.minus_total;
    ctx.h_rank += rank;
    if (!ctx.desc.empty()) ctx.desc += " + ";
    ctx.desc += what;
}

Subalg finish(EmbeddingContext& ctx) {
    return make_subalg(ctx.g->alg, ctx.gens, ctx.desc);
}

Subalg center_piece(const RealForm& g, const Subalg& h, CenterKind kind) {
    Subspace c = g.alg->centralizer(h.coords);
    std::vector<Mat> gens;
    for (std::size_t i = 0; i < h.dim(); ++i) gens.push_back(h.basis_mat(i));

    // centralizer directions not already inside h
    std::vector<QVec> cand;
    Subspace acc = h.coords;
    for (std::size_t i = 0; i < c.dim(); ++i) {
        QVec v = c.row(i);
        if (!acc.contains(v)) {
            cand.push_back(v);
            QMat one(1, v.size());
            for (std::size_t j = 0; j < v.size(); ++j) one(0, j) = v[j];
            acc = subspace_sum(acc, Subspace::span(v.size(), one));
        }
    }
    if (cand.empty()) throw CentralizerTooSmall("center_piece: centralizer lies inside h");

    if (kind == CenterKind::full) {
        for (const QVec& v : cand) gens.push_back(g.alg->from_coords(v));
        return make_subalg(g.alg, gens, h.provenance + " + f");
    }

    // the centralizer need not be theta-stable, so compact vs split directions
    // are read off from the Killing form: diagonalize B on the candidates by
    // congruence and pick a strictly negative (u1) or positive (gl1) vector
    const QMat& kg = g.alg->killing_gram();
    auto bform = [&](const QVec& x, const QVec& y) {
        Rational s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (sgn(x[i]) == 0) continue;
            for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * kg(i, j) * y[j];
        }
        return s;
    };
    for (std::size_t i = 0; i < cand.size(); ++i) {
        if (sgn(bform(cand[i], cand[i])) == 0)
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (sgn(bform(cand[i], cand[j])) != 0) {
                    for (std::size_t t = 0; t < cand[i].size(); ++t) cand[i][t] += cand[j][t];
                    break;
                }
        Rational d = bform(cand[i], cand[i]);
        if (sgn(d) == 0) continue;
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
            Rational f = bform(cand[i], cand[j]) / d;
            if (sgn(f) == 0) continue;
            for (std::size_t t = 0; t < cand[j].size(); ++t) cand[j][t] -= f * cand[i][t];
        }
    }
    int want = kind == CenterKind::u1 ? -1 : 1;
    for (const QVec& v : cand)
        if (sgn(bform(v, v)) == want) {
            gens.push_back(g.alg->from_coords(v));
            return make_subalg(g.alg, gens, h.provenance + " + f");
        }
    throw CentralizerTooSmall(std::string("center_piece: no ") +
                              (want < 0 ? "compact u1" : "split gl1") + " direction");
}

Subalg block_embed(const RealForm& g, const std::vector<FormFamily>& factors) {
    EmbeddingContext ctx = make_context(g);
    for (const auto& f : factors) add_block(ctx, f);
    return finish(ctx);
}

Subalg split_block_embed(const RealForm& g, const std::vector<FormFamily>& factors) {
    AmbClass ac = amb_class(g.family.tag);
    std::size_t N = g.alg->ambient_size();
    std::size_t r = g.split_pairs, d = g.definite, n = g.half_size;
    bool plain_sp = (g.family.tag == FamilyTag::sp_R || g.family.tag == FamilyTag::complex_sp);
    std::size_t pu = 0, du = 0, iu = 0;
    std::vector<Mat> gens;
    std::string desc;

    for (const auto& fam : factors) {
        RealForm f = construct(fam);
        std::size_t fn = f.alg->ambient_size();
        std::vector<std::size_t> map(fn);
        switch (ac) {
            case AmbClass::plain_diag: {
                std::size_t rf = f.split_pairs, df = f.definite, fh = f.half_size;
                if (fh != 0 && 2 * fh == fn) {
                    // quaternionic factor in a hermitian ambient: the two
                    // defining-form copies diag(F,F) map onto ambient pairs
                    if (pu + 2 * rf > r || du + 2 * df > d)
                        throw FormIncompatible(fam.str() + ": split slots exhausted");
                    for (std::size_t i = 0; i < rf; ++i) {
                        map[i] = pu + i;
                        map[rf + i] = r + pu + i;
                        map[fh + i] = pu + rf + i;
                        map[fh + rf + i] = r + pu + rf + i;
                    }
                    for (std::size_t i = 0; i < df; ++i) {
                        map[2 * rf + i] = 2 * r + du + i;
                        map[fh + 2 * rf + i] = 2 * r + du + df + i;
                    }
                    pu += 2 * rf;
                    du += 2 * df;
                    break;
                }
                if (2 * rf + df != fn)
                    throw BadTarget(fam.str() + ": not a split-form factor");
                if (pu + rf > r || du + df > d)
                    throw FormIncompatible(fam.str() + ": split slots exhausted");
                for (std::size_t i = 0; i < rf; ++i) {
                    map[i] = pu + i;
                    map[rf + i] = r + pu + i;
                }
                for (std::size_t i = 0; i < df; ++i) map[2 * rf + i] = 2 * r + du + i;
                pu += rf;
                du += df;
                break;
            }
            case AmbClass::mirrored_diag: {
                std::size_t fh = f.half_size;
                if (fh == 0 || 2 * fh != fn)
                    throw BadTarget(fam.str() + ": not a doubled factor");
                if (plain_sp) {
                    if (iu + fh > n) throw FormIncompatible(fam.str() + ": slots exhausted");
                    for (std::size_t i = 0; i < fh; ++i) {
                        map[i] = iu + i;
                        map[fh + i] = n + iu + i;
                    }
                    iu += fh;
                } else {
                    std::size_t rf = f.split_pairs, df = f.definite;
                    if (2 * rf + df != fh)
                        throw BadTarget(fam.str() + ": not a split-form factor");
                    if (pu + rf > r || du + df > d)
                        throw FormIncompatible(fam.str() + ": split slots exhausted");
                    for (std::size_t i = 0; i < rf; ++i) {
                        map[i] = pu + i;
                        map[rf + i] = r + pu + i;
                        map[fh + i] = n + pu + i;
                        map[fh + rf + i] = n + r + pu + i;
                    }
                    for (std::size_t i = 0; i < df; ++i) {
                        map[2 * rf + i] = 2 * r + du + i;
                        map[fh + 2 * rf + i] = n + 2 * r + du + i;
                    }
                    pu += rf;
                    du += df;
                }
                break;
            }
            case AmbClass::mirrored_plain: {
                std::size_t fh = f.half_size;
                if (fh == 0 || 2 * fh != fn)
                    throw BadTarget(fam.str() + ": not a doubled factor");
                if (iu + fh > n) throw FormIncompatible(fam.str() + ": slots exhausted");
                for (std::size_t i = 0; i < fh; ++i) {
                    map[i] = iu + i;
                    map[fh + i] = n + iu + i;
                }
                iu += fh;
                break;
            }
            case AmbClass::plain: {
                if (iu + fn > N) throw FormIncompatible(fam.str() + ": slots exhausted");
                for (std::size_t i = 0; i < fn; ++i) map[i] = iu + i;
                iu += fn;
                break;
            }
        }
        for (std::size_t bi = 0; bi < f.alg->dim(); ++bi) {
            const Mat& x = f.alg->basis_mat(bi);
            Mat z(N, N);
            for (std::size_t i = 0; i < fn; ++i)
                for (std::size_t j = 0; j < fn; ++j)
                    if (!x(i, j).is_zero()) z(map[i], map[j]) = x(i, j);
            gens.push_back(std::move(z));
        }
        if (!desc.empty()) desc += " + ";
        desc += fam.str();
    }
    return make_subalg(g.alg, gens, desc + " (split blocks)");
}

Subalg tensor_embed(const RealForm& g, const FormFamily& f1, const FormFamily& f2) {
    EmbeddingContext ctx = make_context(g);
    add_tensor(ctx, f1, f2);
    return finish(ctx);
}

Subalg realify_embed(const RealForm& g, const FormFamily& sub) {
    EmbeddingContext ctx = make_context(g);
    add_realify(ctx, sub);
    return finish(ctx);
}

Subalg octonion_derivations(const RealForm& g, bool split) {
    EmbeddingContext ctx = make_context(g);
    add_octonion_derivations(ctx, split);
    return finish(ctx);
}

Subalg spin_clifford(const RealForm& g, int p, int q) {
    EmbeddingContext ctx = make_context(g);
    add_spin(ctx, p, q);
    return finish(ctx);
}

Subalg diagonal_embed(const RealForm& g, const FormFamily& factor, std::size_t copies) {
    if (copies == 0) throw BadParams("diagonal_embed: copies must be positive");
    EmbeddingContext ctx = make_context(g);
    RealForm f = construct(factor);
    DiagGens dg = diag_gens(f);
    // lay out `copies` consecutive slot groups, then sum the images
    AmbClass ac = amb_class(g.family.tag);
    bool amb_mirrored = ac == AmbClass::mirrored_diag || ac == AmbClass::mirrored_plain;
    std::vector<std::vector<std::size_t>> maps;
    std::vector<int> signs = dg.signs;
    if (dg.mirrored && !amb_mirrored)
        signs.insert(signs.end(), dg.signs.begin(), dg.signs.end());
    if (ac == AmbClass::plain || ac == AmbClass::mirrored_plain)
        for (int& s : signs) s = 1;
    for (std::size_t c = 0; c < copies; ++c) maps.push_back(allocate_slots(ctx, signs));
    std::size_t N = g.alg->ambient_size();
    std::size_t half = amb_mirrored ? N / 2 : 0;
    std::size_t fhalf = dg.mirrored ? dg.signs.size() : 0;
    for (const Mat& gme : dg.gens) {
        Mat z(N, N);
        for (const auto& map : maps) {
            auto amb_index = [&](std::size_t a) {
                if (dg.mirrored && amb_mirrored)
                    return a < fhalf ? map[a] : half + map[a - fhalf];
                return map[a];
            };
            for (std::size_t i = 0; i < gme.rows(); ++i)
                for (std::size_t j = 0; j < gme.cols(); ++j)
                    if (!gme(i, j).is_zero()) z(amb_index(i), amb_index(j)) += gme(i, j);
        }
        ctx.gens.push_back(ctx.trans * z * ctx.trans_inv);
    }
    ctx.h_rank = dg.rank;
    ctx.desc = "diag " + factor.str() + " x" + std::to_string(copies);
    return finish(ctx);
}

namespace {

Subalg from_coord_rows(const RealForm& g, const Subspace& s, const std::string& what) {
    std::vector<Mat> gens;
    for (std::size_t i = 0; i < s.dim(); ++i) gens.push_back(g.alg->from_coords(s.row(i)));
    return make_subalg(g.alg, gens, what);
}

// coordinates of {X in g : phi(basis_mat(X)) = 0} for a matrix-valued phi
Subspace matrix_condition(const RealForm& g, const std::function<Mat(const Mat&)>& phi) {
    std::size_t dim = g.alg->dim();
    std::size_t N = g.alg->ambient_size();
    QMat cond(2 * N * N, dim);
    for (std::size_t b = 0; b < dim; ++b) {
        Mat c = phi(g.alg->basis_mat(b));
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                cond(2 * (i * N + j), b) = c(i, j).re;
                cond(2 * (i * N + j) + 1, b) = c(i, j).im;
            }
    }
    return kernel(cond);
}

} // namespace

Subalg unitary_centralizer(const RealForm& g, std::size_t p, std::size_t q,
                           bool with_center) {
    if (g.family.tag != FamilyTag::so_star)
        throw BadTarget("unitary_centralizer needs an so_star ambient");
    std::size_t n = g.half_size;
    if (p + q != n) throw BadParams("unitary_centralizer: p+q must match the ambient");
    Mat j(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        GaussRational d(i < p ? -1 : 1);
        j(i, n + i) = d;
        j(n + i, i) = -d;
    }
    Subspace c = matrix_condition(g, [&](const Mat& x) { return x * j - j * x; });
    std::string name = std::string(with_center ? "u(" : "su(") + std::to_string(p) + "," +
                       std::to_string(q) + ")";
    if (with_center) return from_coord_rows(g, c, name);

    // the center is spanned by J itself: keep the J-traceless part
    QMat cond(2, c.dim());
    for (std::size_t r = 0; r < c.dim(); ++r) {
        Mat jx = j * g.alg->from_coords(c.row(r));
        GaussRational t;
        for (std::size_t i = 0; i < 2 * n; ++i) t += jx(i, i);
        cond(0, r) = t.re;
        cond(1, r) = t.im;
    }
    Subspace combo = kernel(cond);
    std::vector<Mat> gens;
    for (std::size_t k = 0; k < combo.dim(); ++k) {
        QVec coords(g.alg->dim(), Rational(0));
        QVec w = combo.row(k);
        for (std::size_t r = 0; r < c.dim(); ++r) {
            if (sgn(w[r]) == 0) continue;
            QVec row = c.row(r);
            for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += w[r] * row[i];
        }
        gens.push_back(g.alg->from_coords(coords));
    }
    return make_subalg(g.alg, gens, name);
}

Subalg conj_fixed_points(const RealForm& g, const Mat& s, const std::string& what) {
    Mat sinv = inverse(s);
    Subspace f = matrix_condition(g, [&](const Mat& x) { return x - s * conj(x) * sinv; });
    return from_coord_rows(g, f, what);
}

Subalg complex_symplectic_in_sp(const RealForm& g) {
    if (g.family.tag != FamilyTag::sp_pq || g.split_pairs * 2 != g.half_size || g.definite != 0)
        throw BadTarget("complex_symplectic_in_sp needs an sp(p,p) ambient");
    std::size_t N = g.alg->ambient_size();
    Mat s(N, N);
    for (std::size_t i = 0; i < N; ++i) s(i, i) = GaussRational(i % 2 ? -1 : 1);
    std::size_t p = g.split_pairs;
    return conj_fixed_points(g, s, "sp(" + std::to_string(p) + ",C)");
}

Subalg gl_dual_embed(const RealForm& g, const FormFamily& factor) {
    bool complex_amb = g.family.tag == FamilyTag::complex_so;
    if (!complex_amb && g.family.tag != FamilyTag::so)
        throw BadTarget("gl_dual_embed needs an orthogonal ambient");
    RealForm f = construct(factor);
    if (complex_amb ? factor.tag != FamilyTag::complex_sl : factor.tag != FamilyTag::sl_R)
        throw BadTarget(factor.str() + " cannot dual-embed into " + g.family.str());
    std::size_t m = f.alg->ambient_size();
    std::size_t N = g.alg->ambient_size();
    if (2 * m > N) throw BadTarget(factor.str() + ": dual pair exceeds the ambient space");
    // hyperbolic target form: m isotropic pairs, identity on the rest
    Mat target(N, N);
    for (std::size_t i = 0; i < m; ++i) target(i, m + i) = target(m + i, i) = GaussRational(1);
    for (std::size_t i = 2 * m; i < N; ++i) target(i, i) = GaussRational(1);
    Mat p = form_align(target, g), pinv = inverse(p);
    std::vector<Mat> gens;
    for (std::size_t bi = 0; bi < f.alg->dim(); ++bi) {
        const Mat& x = f.alg->basis_mat(bi);
        Mat z(N, N);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                z(a, b) = x(a, b);
                z(m + b, m + a) = -x(a, b);
            }
        gens.push_back(p * z * pinv);
    }
    return make_subalg(g.alg, gens, factor.str() + " (gl dual)");
}

namespace {

// span the complex multiples of real orthogonal generators inside a
// complex_so ambient, aligned so the preserved form becomes the identity
Subalg complex_orthogonal_span(const RealForm& g, const std::vector<Mat>& gens,
                               std::size_t block, const std::string& what) {
    if (g.family.tag != FamilyTag::complex_so)
        throw BadTarget(what + " needs a complex orthogonal ambient");
    std::size_t N = g.alg->ambient_size();
    if (block > N) throw BadTarget(what + " does not fit the ambient space");
    Mat p = form_align(Mat::identity(N), g), pinv = inverse(p);
    std::vector<Mat> out;
    for (const Mat& x : gens) {
        Mat z(N, N);
        for (std::size_t i = 0; i < block; ++i)
            for (std::size_t j = 0; j < block; ++j) z(i, j) = x(i, j);
        out.push_back(p * z * pinv);
        out.push_back(p * (z * gauss_i()) * pinv);
    }
    return make_subalg(g.alg, out, what);
}

} // namespace

Subalg complexified_g2(const RealForm& g) {
    auto o = octonion_algebra(false);
    std::size_t N = g.alg->ambient_size();
    std::vector<Mat> gens;
    for (const QMat& der : derivation_matrices(o)) {
        if (N == 7) {
            gens.push_back(to_complex(der));
        } else {
            // pad to the full 8-dimensional space, fixing the unit
            QMat a(8, 8);
            for (std::size_t i = 0; i < 7; ++i)
                for (std::size_t j = 0; j < 7; ++j) a(i + 1, j + 1) = der(i, j);
            gens.push_back(to_complex(a));
        }
    }
    return complex_orthogonal_span(g, gens, N == 7 ? 7 : 8, "g2(C)");
}

Subalg complexified_spin(const RealForm& g, unsigned m) {
    std::vector<Mat> gens;
    std::size_t block;
    if (m == 7) {
        auto o = octonion_algebra(false);
        for (std::size_t i = 1; i <= 7; ++i)
            for (std::size_t j = i + 1; j <= 7; ++j)
                gens.push_back(to_complex(o.left_mult(i) * o.left_mult(j)));
        block = 8;
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
                gens.push_back(to_complex(gam[i] * gam[j]));
        block = 16;
    } else {
        throw UnsupportedSignature("spin(" + std::to_string(m) + ",C) is not available");
    }
    return complex_orthogonal_span(g, gens, block,
                                   "spin(" + std::to_string(m) + ",C)");
}

std::vector<Mat> weyl_cells(const RealForm& g) {
    std::size_t N = g.alg->ambient_size();
    std::vector<Mat> cells = {Mat::identity(N)};
    auto swap_cols = [&](std::initializer_list<std::pair<std::size_t, std::size_t>> swaps) {
        Mat w = Mat::identity(N);
        for (auto [a, b] : swaps) {
            w(a, a) = w(b, b) = GaussRational(0);
            w(a, b) = w(b, a) = GaussRational(1);
        }
        cells.push_back(w);
    };
    switch (g.family.tag) {
        case FamilyTag::su:
        case FamilyTag::so:
        case FamilyTag::complex_so: {
            std::size_t r = g.split_pairs;
            if (r >= 1) swap_cols({{0, r}});
            if (r >= 2) swap_cols({{0, 1}, {r, r + 1}});
            break;
        }
        case FamilyTag::sl_R:
        case FamilyTag::complex_sl:
            if (N >= 2) swap_cols({{0, 1}});
            if (N >= 3) swap_cols({{1, 2}});
            break;
        case FamilyTag::sl_H:
        case FamilyTag::so_star: {
            std::size_t n = g.half_size;
            if (n >= 2) swap_cols({{0, 1}, {n, n + 1}});
            break;
        }
        case FamilyTag::sp_pq: {
            std::size_t r = g.split_pairs, n = g.half_size;
            if (r >= 1) swap_cols({{0, r}, {n, n + r}});
            if (r >= 2) swap_cols({{0, 1}, {r, r + 1}, {n, n + 1}, {n + r, n + r + 1}});
            break;
        }
        case FamilyTag::sp_R:
        case FamilyTag::complex_sp: {
            std::size_t n = g.half_size;
            if (n >= 2) swap_cols({{0, 1}, {n, n + 1}});
            // omega-pair reflection e_0 -> e_n -> -e_0
            Mat w = Mat::identity(N);
            w(0, 0) = w(n, n) = GaussRational(0);
            w(0, n) = GaussRational(1);
            w(n, 0) = GaussRational(-1);
            cells.push_back(w);
            break;
        }
        default: break;
    }
    return cells;
}

} // namespace sph
