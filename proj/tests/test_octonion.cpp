#include <doctest.h>
#include <sph/octonion.hpp>
#include <sph/lie.hpp>

using namespace sph;

namespace {

QVec apply(const OctonionAlgebra& o, const QVec& x, const QVec& y) {
    QVec out(8, Rational(0));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            if (sgn(x[i]) == 0 || sgn(y[j]) == 0) continue;
            QVec p = o.mult(i, j);
            for (std::size_t k = 0; k < 8; ++k) out[k] += x[i] * y[j] * p[k];
        }
    return out;
}

Rational norm_of(const OctonionAlgebra& o, const QVec& x) {
    QMat g = o.norm_gram();
    Rational n = 0;
    for (std::size_t i = 0; i < 8; ++i) n += g(i, i) * x[i] * x[i];
    return n;
}

QVec unit8(std::size_t i) {
    QVec v(8, Rational(0));
    v[i] = 1;
    return v;
}

} // namespace

TEST_CASE("octonion algebra structure") {
    for (bool split : {false, true}) {
        auto o = octonion_algebra(split);
        // e0 is the unit
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(o.mult(0, i) == unit8(i));
            CHECK(o.mult(i, 0) == unit8(i));
        }
        // alternativity on basis pairs
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                QVec ei = unit8(i), ej = unit8(j);
                CHECK(apply(o, apply(o, ei, ei), ej) == apply(o, ei, apply(o, ei, ej)));
                CHECK(apply(o, apply(o, ei, ej), ej) == apply(o, ei, apply(o, ej, ej)));
            }
        // norm multiplicativity on basis elements and on a mixed element
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                CHECK(norm_of(o, o.mult(i, j)) == norm_of(o, unit8(i)) * norm_of(o, unit8(j)));
        // left multiplication matrices match the table
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                QVec p = o.mult(i, j);
                for (std::size_t k = 0; k < 8; ++k) CHECK(o.left_mult(i)(k, j) == p[k]);
            }
    }
}

TEST_CASE("norm signatures") {
    CHECK(signature(octonion_algebra(false).norm_gram()) == Signature{8, 0, 0});
    CHECK(signature(octonion_algebra(true).norm_gram()) == Signature{4, 4, 0});
    CHECK(signature(octonion_algebra(true).imaginary_gram()) == Signature{3, 4, 0});
}

TEST_CASE("derivation algebras") {
    for (bool split : {false, true}) {
        auto o = octonion_algebra(split);
        auto ders = derivation_matrices(o);
        REQUIRE(ders.size() == 14);
        QMat g = o.imaginary_gram();
        std::vector<Mat> basis;
        for (const auto& d : ders) {
            // norm form preserved
            CHECK(d.transpose() * g + g * d == QMat(7, 7));
            basis.push_back(to_complex(d));
        }
        auto lie = LieAlg(7, basis, split ? "g2_split" : "g2");
        auto bf = lie.killing_form();
        REQUIRE(bf.sig.has_value());
        CHECK(*bf.sig == (split ? Signature{8, 6, 0} : Signature{0, 14, 0}));
        CHECK(lie.centralizer(Subspace::full(14)).dim() == 0);
    }
}
