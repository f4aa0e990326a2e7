#ifndef SPH_MATRIX_HPP
#define SPH_MATRIX_HPP

#include <sph/scalar.hpp>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sph {

template <typename T>
class Matrix {
public:
    Matrix() : m_rows(0), m_cols(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }

    T& operator()(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return m_data[i * m_cols + j]; }

    bool operator==(const Matrix& o) const {
        return m_rows == o.m_rows && m_cols == o.m_cols && m_data == o.m_data;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : m_data)
            if (!entry_is_zero(x)) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(m_rows, m_cols);
        for (std::size_t i = 0; i < m_data.size(); ++i) r.m_data[i] = m_data[i] + o.m_data[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(m_rows, m_cols);
        for (std::size_t i = 0; i < m_data.size(); ++i) r.m_data[i] = m_data[i] - o.m_data[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(m_rows, m_cols);
        for (std::size_t i = 0; i < m_data.size(); ++i) r.m_data[i] = -m_data[i];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (m_cols != o.m_rows) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(m_rows, o.m_cols);
        for (std::size_t i = 0; i < m_rows; ++i)
            for (std::size_t k = 0; k < m_cols; ++k) {
                const T& a = (*this)(i, k);
                if (entry_is_zero(a)) continue;
                for (std::size_t j = 0; j < o.m_cols; ++j) {
                    const T& b = o(k, j);
                    if (entry_is_zero(b)) continue;
                    r(i, j) += a * b;
                }
            }
        return r;
    }
    Matrix operator*(const T& s) const {
        Matrix r(m_rows, m_cols);
        for (std::size_t i = 0; i < m_data.size(); ++i) r.m_data[i] = m_data[i] * s;
        return r;
    }
    Matrix& operator+=(const Matrix& o) { *this = *this + o; return *this; }
    Matrix& operator-=(const Matrix& o) { *this = *this - o; return *this; }

    Matrix transpose() const {
        Matrix r(m_cols, m_rows);
        for (std::size_t i = 0; i < m_rows; ++i)
            for (std::size_t j = 0; j < m_cols; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix kron(const Matrix& o) const {
        Matrix r(m_rows * o.m_rows, m_cols * o.m_cols);
        for (std::size_t i = 0; i < m_rows; ++i)
            for (std::size_t j = 0; j < m_cols; ++j) {
                const T& a = (*this)(i, j);
                if (entry_is_zero(a)) continue;
                for (std::size_t k = 0; k < o.m_rows; ++k)
                    for (std::size_t l = 0; l < o.m_cols; ++l)
                        r(i * o.m_rows + k, j * o.m_cols + l) = a * o(k, l);
            }
        return r;
    }

    T trace() const {
        if (m_rows != m_cols) throw std::invalid_argument("Matrix: trace of non-square");
        T t{};
        for (std::size_t i = 0; i < m_rows; ++i) t += (*this)(i, i);
        return t;
    }

private:
    static bool entry_is_zero(const Rational& x) { return sgn(x) == 0; }
    static bool entry_is_zero(const GaussRational& x) { return x.is_zero(); }
    void check_same_shape(const Matrix& o) const {
        if (m_rows != o.m_rows || m_cols != o.m_cols)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t m_rows, m_cols;
    std::vector<T> m_data;
};

using QMat = Matrix<Rational>;  // real coordinates, subspaces, ad maps
using Mat  = Matrix<GaussRational>;  // ambient matrix realizations

inline bool is_real(const Mat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_real()) return false;
    return true;
}

inline Mat conj(const Mat& m) {
    Mat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).conj();
    return r;
}

// conjugate transpose
inline Mat ctranspose(const Mat& m) { return conj(m.transpose()); }

inline Mat to_complex(const QMat& m) {
    Mat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = GaussRational(m(i, j));
    return r;
}

inline QMat real_part(const Mat& m) {
    QMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).re;
    return r;
}

// a+bi -> [[a,-b],[b,a]] per entry; doubles both dimensions
inline QMat realify(const Mat& m) {
    QMat r(2 * m.rows(), 2 * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const GaussRational& x = m(i, j);
            r(2 * i, 2 * j) = x.re;
            r(2 * i, 2 * j + 1) = -x.im;
            r(2 * i + 1, 2 * j) = x.im;
            r(2 * i + 1, 2 * j + 1) = x.re;
        }
    return r;
}

} // namespace sph

#endif
