#include <sph/cartan.hpp>

#include <algorithm>
#include <set>

namespace sph {

QMat theta_matrix(const LieAlg& g) {
    const std::size_t d = g.dim();
    QMat t(d, d);
    QVec c;
    for (std::size_t j = 0; j < d; ++j) {
        Mat img = -ctranspose(g.basis_mat(j));
        if (!g.try_coords(img, c))
            throw ThetaNotInvolutive("theta(X) = -X^* leaves the span of " + g.label());
        for (std::size_t i = 0; i < d; ++i) t(i, j) = c[i];
    }
    if (t * t != QMat::identity(d))
        throw ThetaNotInvolutive("theta^2 != id on " + g.label());
    return t;
}

std::pair<Subspace, Subspace> cartan_decomposition(const LieAlg& g, const QMat& theta) {
    const std::size_t d = g.dim();
    QMat tm = theta, tp = theta;
    for (std::size_t i = 0; i < d; ++i) {
        tm(i, i) -= 1;  // kernel = +1 eigenspace
        tp(i, i) += 1;  // kernel = -1 eigenspace
    }
    Subspace k = kernel(tm), s = kernel(tp);
    if (k.dim() + s.dim() != d)
        throw ThetaNotInvolutive("eigenspaces of theta do not span " + g.label());
    auto check = [&](const Subspace& u, const Subspace& w, const Subspace& target,
                     const char* what) {
        for (std::size_t i = 0; i < u.dim(); ++i)
            for (std::size_t j = 0; j < w.dim(); ++j)
                if (!target.contains(g.bracket(u.row(i), w.row(j))))
                    throw ThetaNotInvolutive(std::string("sign rule violated: ") + what +
                                             " on " + g.label());
    };
    check(k, k, k, "[k,k] in k");
    check(k, s, s, "[k,s] in s");
    check(s, s, k, "[s,s] in k");
    return {k, s};
}

namespace {

struct JointSpace {
    QVec value;
    Subspace space;
};

// kernel of (op - c*id) restricted to an op-invariant subspace, mapped back
// to global coordinates
Subspace restricted_eigenspace(const LieAlg& g, const QMat& op, const Subspace& sp,
                               const Rational& c) {
    const std::size_t d = g.dim(), ds = sp.dim();
    QMat r(ds, ds);
    QVec img(d), coords;
    for (std::size_t j = 0; j < ds; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            Rational t(0);
            for (std::size_t l = 0; l < d; ++l)
                if (sgn(sp.basis()(j, l)) != 0) t += op(i, l) * sp.basis()(j, l);
            img[i] = t;
        }
        if (!sp.coords(img, coords))
            throw IrrationalSpectrum("ad(a) does not preserve a joint eigenspace");
        for (std::size_t i = 0; i < ds; ++i) r(i, j) = coords[i];
    }
    for (std::size_t i = 0; i < ds; ++i) r(i, i) -= c;
    if (rank(r) == ds) return Subspace(d);  // trivial kernel, cheap modular certificate
    Subspace kr = kernel(r);
    QMat rows(kr.dim(), d);
    for (std::size_t i = 0; i < kr.dim(); ++i)
        for (std::size_t l = 0; l < d; ++l) {
            Rational t(0);
            for (std::size_t j = 0; j < ds; ++j)
                if (sgn(kr.basis()(i, j)) != 0) t += kr.basis()(i, j) * sp.basis()(j, l);
            rows(i, l) = t;
        }
    return Subspace::span(d, rows);
}

Subspace subspace_sum_many(std::size_t ambient, const std::vector<const Subspace*>& parts) {
    std::size_t total = 0;
    for (auto* p : parts) total += p->dim();
    QMat rows(total, ambient);
    std::size_t r = 0;
    for (auto* p : parts)
        for (std::size_t i = 0; i < p->dim(); ++i, ++r)
            for (std::size_t j = 0; j < ambient; ++j) rows(r, j) = p->basis()(i, j);
    return Subspace::span(ambient, rows);
}

} // namespace

ParabolicData make_parabolic(const LieAlg& g, const QMat& theta,
                             const std::vector<QVec>& a_coords,
                             const std::vector<std::vector<Rational>>& a_spectra) {
    const std::size_t d = g.dim();
    if (a_coords.size() != a_spectra.size()) throw BadParams("make_parabolic: spectra mismatch");

    ParabolicData pd;
    pd.theta = theta;
    auto [k, s] = cartan_decomposition(g, theta);
    pd.k = k;
    pd.s = s;

    QMat arows(a_coords.size(), d);
    for (std::size_t i = 0; i < a_coords.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) arows(i, j) = a_coords[i][j];
    pd.a = Subspace::span(d, arows);
    if (pd.a.dim() != a_coords.size()) throw BadParams("make_parabolic: a-basis dependent");
    if (!s.contains(pd.a)) throw NotAbelian("a is not contained in s");
    for (std::size_t i = 0; i < a_coords.size(); ++i)
        for (std::size_t j = i + 1; j < a_coords.size(); ++j) {
            QVec b = g.bracket(a_coords[i], a_coords[j]);
            for (const auto& v : b)
                if (sgn(v) != 0) throw NotAbelian("[a,a] != 0");
        }

    // simultaneous eigenspace refinement
    std::vector<JointSpace> spaces{{QVec{}, Subspace::full(d)}};
    for (std::size_t idx = 0; idx < a_coords.size(); ++idx) {
        QMat op = g.ad(a_coords[idx]);
        std::set<Rational> cands;
        for (const auto& x : a_spectra[idx])
            for (const auto& y : a_spectra[idx]) cands.insert(x - y);
        std::vector<JointSpace> next;
        for (const auto& js : spaces) {
            std::size_t found = 0;
            for (const auto& c : cands) {
                Subspace e = restricted_eigenspace(g, op, js.space, c);
                if (e.dim() == 0) continue;
                found += e.dim();
                QVec val = js.value;
                val.push_back(c);
                next.push_back({std::move(val), std::move(e)});
            }
            if (found != js.space.dim())
                throw IrrationalSpectrum("ad eigenvalues not covered by declared spectrum of " +
                                         g.label());
        }
        spaces = std::move(next);
    }
    std::sort(spaces.begin(), spaces.end(),
              [](const JointSpace& a, const JointSpace& b) { return a.value < b.value; });

    std::size_t total = 0;
    for (const auto& js : spaces) total += js.space.dim();
    if (total != d) throw IrrationalSpectrum("joint eigenspaces do not fill " + g.label());

    std::vector<const Subspace*> npos, nneg;
    Subspace zero(d);
    for (const auto& js : spaces) {
        bool is_zero = true;
        for (const auto& v : js.value)
            if (sgn(v) != 0) { is_zero = false; break; }
        if (is_zero) {
            zero = js.space;
            continue;
        }
        Root r{js.value, js.space};
        if (r.positive()) npos.push_back(&js.space);
        else nneg.push_back(&js.space);
        pd.roots.push_back(std::move(r));
    }
    pd.n = subspace_sum_many(d, npos);
    pd.nbar = subspace_sum_many(d, nneg);

    // centralizer of a: zero weight space; split into m + a
    pd.m = subspace_intersect(zero, k);
    if (pd.m.dim() + pd.a.dim() != zero.dim())
        throw NotAbelian("centralizer of a is not m + a (a not maximal or not canonical)");
    Subspace za = subspace_intersect(zero, s);
    if (za != pd.a)
        throw NotAbelian("a is not maximal abelian in s");

    pd.p = subspace_sum(subspace_sum(pd.m, pd.a), pd.n);
    if (pd.p.dim() != pd.m.dim() + pd.a.dim() + pd.n.dim())
        throw BadParams("p = m + a + n is not direct");

    // Eq-level sanity: dim n = dim(g/k) - dim a, and n, nbar nilpotent
    if (pd.n.dim() != pd.s.dim() - pd.a.dim() || pd.n.dim() != pd.nbar.dim())
        throw BadParams("dim n != dim(g/k) - rank on " + g.label());
    auto check_nilpotent = [&](const Subspace& nsp) {
        for (std::size_t i = 0; i < nsp.dim(); ++i) {
            Mat x = g.from_coords(nsp.row(i));
            Mat p = x;
            for (std::size_t e = 1; e < g.ambient_size() && !p.is_zero(); ++e) p = p * x;
            if (!p.is_zero()) throw BadParams("non-nilpotent element in n of " + g.label());
        }
    };
    check_nilpotent(pd.n);
    check_nilpotent(pd.nbar);

    pd.quasi_split = true;
    for (std::size_t i = 0; i < pd.m.dim() && pd.quasi_split; ++i)
        for (std::size_t j = i + 1; j < pd.m.dim(); ++j) {
            QVec b = g.bracket(pd.m.row(i), pd.m.row(j));
            bool nz = false;
            for (const auto& v : b)
                if (sgn(v) != 0) { nz = true; break; }
            if (nz) { pd.quasi_split = false; break; }
        }
    return pd;
}

} // namespace sph
