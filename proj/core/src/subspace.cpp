#include <sph/subspace.hpp>

namespace sph {

Subspace Subspace::span(std::size_t ambient, const QMat& rows) {
    if (rows.rows() > 0 && rows.cols() != ambient)
        throw AmbientMismatch("span: row length != ambient dim");
    QMat m = rows;
    auto pivots = rref_in_place(m);
    Subspace s(ambient);
    s.m_basis = QMat(pivots.size(), ambient);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < ambient; ++j) s.m_basis(i, j) = m(i, j);
    s.m_pivots = std::move(pivots);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    s.m_basis = QMat::identity(ambient);
    s.m_pivots.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.m_pivots[i] = i;
    return s;
}

QVec Subspace::row(std::size_t i) const {
    QVec v(m_ambient);
    for (std::size_t j = 0; j < m_ambient; ++j) v[j] = m_basis(i, j);
    return v;
}

QVec Subspace::reduce(const QVec& v) const {
    if (v.size() != m_ambient) throw AmbientMismatch("reduce: vector length");
    QVec r = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        const Rational& c = r[m_pivots[i]];
        if (sgn(c) == 0) continue;
        Rational f = c;
        for (std::size_t j = m_pivots[i]; j < m_ambient; ++j) r[j] -= f * m_basis(i, j);
    }
    return r;
}

bool Subspace::contains(const QVec& v) const {
    QVec r = reduce(v);
    for (const auto& x : r)
        if (sgn(x) != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.m_ambient != m_ambient) throw AmbientMismatch("contains");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.row(i))) return false;
    return true;
}

bool Subspace::coords(const QVec& v, QVec& out) const {
    if (v.size() != m_ambient) throw AmbientMismatch("coords: vector length");
    out.assign(dim(), Rational(0));
    QVec r = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        const Rational c = r[m_pivots[i]];
        if (sgn(c) == 0) continue;
        out[i] = c;
        for (std::size_t j = m_pivots[i]; j < m_ambient; ++j) r[j] -= c * m_basis(i, j);
    }
    for (const auto& x : r)
        if (sgn(x) != 0) return false;
    return true;
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim()) throw AmbientMismatch("subspace_sum");
    QMat rows(u.dim() + w.dim(), u.ambient_dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < u.ambient_dim(); ++j) rows(i, j) = u.basis()(i, j);
    for (std::size_t i = 0; i < w.dim(); ++i)
        for (std::size_t j = 0; j < u.ambient_dim(); ++j) rows(u.dim() + i, j) = w.basis()(i, j);
    return Subspace::span(u.ambient_dim(), rows);
}

// Zassenhaus: echelonize [[U,U],[W,0]]; rows whose left half vanished carry
// the intersection in their right half.
Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim()) throw AmbientMismatch("subspace_intersect");
    const std::size_t n = u.ambient_dim();
    QMat m(u.dim() + w.dim(), 2 * n);
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = u.basis()(i, j);
            m(i, n + j) = u.basis()(i, j);
        }
    for (std::size_t i = 0; i < w.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(u.dim() + i, j) = w.basis()(i, j);
    auto pivots = rref_in_place(m);
    QMat inter(0, n);
    std::vector<QVec> rows;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] < n) continue;
        QVec v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = m(i, n + j);
        rows.push_back(std::move(v));
    }
    QMat rm(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) rm(i, j) = rows[i][j];
    return Subspace::span(n, rm);
}

Subspace kernel(const QMat& m) {
    const std::size_t cols = m.cols();
    QMat r = m;
    auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    QMat basis(free_cols.size(), cols);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis(k, f) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(k, pivots[i]) = -r(i, f);
    }
    return Subspace::span(cols, basis);
}

Subspace kernel(const Mat& m) { return kernel(realify(m)); }

} // namespace sph
