#ifndef SPH_REAL_FORMS_HPP
#define SPH_REAL_FORMS_HPP

#include <sph/cartan.hpp>
#include <functional>

namespace sph {

enum class FamilyTag {
    su, sl_R, sl_H, so, so_star, sp_R, sp_pq,
    su_compact, so_compact, sp_compact,
    complex_sl, complex_so, complex_sp,
};

std::string family_name(FamilyTag tag);

struct FormFamily {
    FamilyTag tag;
    std::vector<int> params;

    std::string str() const;
};

struct RealForm {
    FormFamily family;
    LieAlgPtr alg;
    QMat theta;
    ParabolicData par;
    std::optional<BilinearFormData> form;   // defining form (J / Omega)
    std::optional<BilinearFormData> form2;  // second defining form for quaternionic families

    // split-form coordinate layout: r hyperbolic pairs at [0,r) / [r,2r),
    // definite block at [2r, 2r+d); quaternionic families double at offset
    // half_size (complex ambient = 2 * half_size)
    std::size_t split_pairs = 0, definite = 0, half_size = 0;
    bool complexified = false;

    std::size_t dim() const { return alg->dim(); }
    std::size_t real_rank() const { return par.a.dim(); }
};

// n x n split-friendly symmetric form: min(p,q) antidiagonal hyperbolic
// pairs followed by an identity block of size |p-q|
Mat form_split(std::size_t p, std::size_t q);

// invertible T with T^* J T diagonal (entries 2, -2, 1), for reading the
// signature of a split-form J in diagonal coordinates
Mat split_to_diag_basis(std::size_t p, std::size_t q);

RealForm construct(const FormFamily& f);

// g tensor C as a real algebra of doubled dimension (basis plus i*basis);
// carries no parabolic data (use the complex_* constructors for ambient
// complex algebras)
RealForm complexify_as_real(const RealForm& g);

// Solve the R-linear membership conditions on N x N complex matrices.
// Each condition maps X to a matrix that must vanish. real_only restricts
// the unknowns to real matrices.
std::vector<Mat> solve_conditions(std::size_t N,
                                  const std::vector<std::function<Mat(const Mat&)>>& conds,
                                  bool real_only);

} // namespace sph

#endif
