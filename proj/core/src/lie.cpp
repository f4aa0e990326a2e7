#include <sph/lie.hpp>

namespace sph {

LieAlg::LieAlg(std::size_t ambient_size, std::vector<Mat> basis, std::string label)
    : m_n(ambient_size), m_basis(std::move(basis)), m_label(std::move(label)) {
    for (const auto& b : m_basis)
        if (b.rows() != m_n || b.cols() != m_n)
            throw BadParams("LieAlg " + m_label + ": basis matrix of wrong ambient size");
    build_echelon();
    build_structure();
}

QVec LieAlg::flatten(const Mat& x) const {
    QVec v(flat_len());
    for (std::size_t i = 0; i < m_n; ++i)
        for (std::size_t j = 0; j < m_n; ++j) {
            v[2 * (i * m_n + j)] = x(i, j).re;
            v[2 * (i * m_n + j) + 1] = x(i, j).im;
        }
    return v;
}

void LieAlg::build_echelon() {
    const std::size_t d = dim(), fl = flat_len();
    QMat m(d, fl + d);
    for (std::size_t i = 0; i < d; ++i) {
        QVec f = flatten(m_basis[i]);
        for (std::size_t j = 0; j < fl; ++j) m(i, j) = f[j];
        m(i, fl + i) = 1;
    }
    auto pivots = rref_in_place(m);
    if (pivots.size() != d || (d > 0 && pivots.back() >= fl))
        throw BadParams("LieAlg " + m_label + ": basis not R-linearly independent");
    m_ech_left.resize(d);
    m_ech_right.resize(d);
    m_ech_pivots = pivots;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < fl; ++j)
            if (sgn(m(i, j)) != 0) m_ech_left[i].emplace_back(j, m(i, j));
        for (std::size_t j = 0; j < d; ++j)
            if (sgn(m(i, fl + j)) != 0) m_ech_right[i].emplace_back(j, m(i, fl + j));
    }
}

bool LieAlg::try_coords(const Mat& x, QVec& out) const {
    if (x.rows() != m_n || x.cols() != m_n) throw AmbientMismatch("try_coords");
    QVec r = flatten(x);
    out.assign(dim(), Rational(0));
    for (std::size_t i = 0; i < dim(); ++i) {
        const Rational c = r[m_ech_pivots[i]];
        if (sgn(c) == 0) continue;
        for (const auto& [j, v] : m_ech_left[i]) r[j] -= c * v;
        for (const auto& [j, v] : m_ech_right[i]) out[j] += c * v;
    }
    for (const auto& v : r)
        if (sgn(v) != 0) return false;
    return true;
}

QVec LieAlg::coords_of(const Mat& x) const {
    QVec c;
    if (!try_coords(x, c))
        throw NotClosed("coords_of: matrix outside the span of " + m_label);
    return c;
}

Mat LieAlg::from_coords(const QVec& c) const {
    if (c.size() != dim()) throw AmbientMismatch("from_coords");
    Mat x(m_n, m_n);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (sgn(c[i]) == 0) continue;
        x += m_basis[i] * GaussRational(c[i]);
    }
    return x;
}

void LieAlg::build_structure() {
    const std::size_t d = dim();
    m_struct.assign(d, std::vector<SparseVec>(d));
    QVec c;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Mat br = m_basis[i] * m_basis[j] - m_basis[j] * m_basis[i];
            if (!try_coords(br, c))
                throw NotClosed("bracket [" + std::to_string(i) + "," + std::to_string(j) +
                                "] leaves the span of " + m_label);
            for (std::size_t k = 0; k < d; ++k)
                if (sgn(c[k]) != 0) {
                    m_struct[i][j].emplace_back(k, c[k]);
                    m_struct[j][i].emplace_back(k, -c[k]);
                }
        }
}

const SparseVec& LieAlg::structure(std::size_t i, std::size_t j) const { return m_struct[i][j]; }

QVec LieAlg::bracket(const QVec& x, const QVec& y) const {
    const std::size_t d = dim();
    if (x.size() != d || y.size() != d) throw AmbientMismatch("bracket");
    QVec z(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (sgn(y[j]) == 0) continue;
            Rational f = x[i] * y[j];
            for (const auto& [k, c] : m_struct[i][j]) z[k] += f * c;
        }
    }
    return z;
}

QMat LieAlg::ad(const QVec& x) const {
    const std::size_t d = dim();
    if (x.size() != d) throw AmbientMismatch("ad");
    QMat a(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, c] : m_struct[i][j]) a(k, j) += x[i] * c;
    }
    return a;
}

const QMat& LieAlg::killing_gram() const {
    if (m_killing) return *m_killing;
    const std::size_t d = dim();
    QMat b(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            // tr(ad_i ad_j) = sum over k of coefficient of b_k in [b_i,[b_j,b_k]]
            Rational t(0);
            for (std::size_t k = 0; k < d; ++k)
                for (const auto& [l, c1] : m_struct[j][k])
                    for (const auto& [k2, c2] : m_struct[i][l])
                        if (k2 == k) t += c1 * c2;
            b(i, j) = t;
            b(j, i) = t;
        }
    m_killing = std::move(b);
    return *m_killing;
}

BilinearFormData LieAlg::killing_form() const {
    const QMat& g = killing_gram();
    return BilinearFormData{to_complex(g), BilinearFormData::Kind::symmetric, signature(g)};
}

Subspace LieAlg::centralizer(const Subspace& target) const {
    const std::size_t d = dim(), t = target.dim();
    QMat stacked(d * t, d);
    for (std::size_t r = 0; r < t; ++r) {
        QMat a = ad(target.row(r));
        // [x, t_r] = -ad(t_r) x
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) stacked(r * d + i, j) = a(i, j);
    }
    return kernel(stacked);
}

Subspace LieAlg::centralizer_elem(const QVec& x) const { return kernel(ad(x)); }

bool LieAlg::is_subspace_closed(const Subspace& s) const {
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i + 1; j < s.dim(); ++j)
            if (!s.contains(bracket(s.row(i), s.row(j)))) return false;
    return true;
}

Subspace LieAlg::killing_orthogonal(const Subspace& s) const {
    const QMat& b = killing_gram();
    QMat rows(s.dim(), dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) {
            Rational t(0);
            for (std::size_t k = 0; k < dim(); ++k)
                if (sgn(s.basis()(i, k)) != 0) t += s.basis()(i, k) * b(k, j);
            rows(i, j) = t;
        }
    return kernel(rows);
}

Mat Subalg::basis_mat(std::size_t i) const { return parent->from_coords(coords.row(i)); }

Subalg make_subalg(LieAlgPtr parent, const std::vector<Mat>& gens,
                   const std::string& provenance, bool check_closed) {
    QMat rows(gens.size(), parent->dim());
    QVec c;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!parent->try_coords(gens[i], c))
            throw NotClosed("make_subalg(" + provenance + "): generator " + std::to_string(i) +
                            " outside " + parent->label());
        for (std::size_t j = 0; j < c.size(); ++j) rows(i, j) = c[j];
    }
    Subalg s{parent, Subspace::span(parent->dim(), rows), provenance};
    if (check_closed && !parent->is_subspace_closed(s.coords))
        throw NotClosed("make_subalg(" + provenance + "): not bracket-closed in " + parent->label());
    return s;
}

} // namespace sph
