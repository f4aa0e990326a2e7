#ifndef SPH_EMBEDDINGS_HPP
#define SPH_EMBEDDINGS_HPP

#include <sph/real_forms.hpp>
#include <sph/octonion.hpp>

namespace sph {

// Exact base change P with P^* J P = M (or -M), J the ambient defining form
// in split layout. M must be a signed monomial matrix (at most one nonzero
// per row/column, unit entries) or have diagonal +-1 entries; that covers
// Kronecker products of split forms, realified forms, and diagonal norm
// forms. For sp-type ambients the alignment acts on the F part and is
// mirrored across the two halves. Throws FormIncompatible / SignatureMismatch.
Mat form_align(const Mat& m, const RealForm& g);

// Accumulates subalgebra generators for one ambient algebra. Generators are
// produced against the ambient's diagonal model D = diag(I_plus, -I_minus)
// (for sl types: plain index blocks) and conjugated back on finish().
struct EmbeddingContext {
    const RealForm* g = nullptr;
    Mat trans, trans_inv;                     // diag-model transition
    std::size_t plus_total = 0, minus_total = 0;  // slot budget (F-slots for doubled families)
    std::size_t plus_used = 0, minus_used = 0;
    std::vector<Mat> gens;                    // ambient-coordinate generators
    std::size_t h_rank = 0;                   // accumulated real rank of h
    bool rank_known = true;
    std::string desc;
};

EmbeddingContext make_context(const RealForm& g);

// factor placed as a block on the next free diagonal-model slots
void add_block(EmbeddingContext& ctx, const FormFamily& factor);
// complex factor rewritten over R (su -> so ambient, u-realified -> sp_R),
// or quaternionic factor rewritten over C (sp(p,q) -> su(2p,2q))
void add_realify(EmbeddingContext& ctx, const FormFamily& factor);
// X -> diag(X, conj X): su/u -> sp(p,q), sl_C -> sl_H, so_C -> so_star
void add_quaternionify(EmbeddingContext& ctx, const FamilyTag ambient_like, const FormFamily& factor);
// X -> diag(X, conj X) convenience resolving against the ambient family
void add_diag_double(EmbeddingContext& ctx, const FormFamily& factor);
// Kronecker sum f1 x 1 + 1 x f2, consuming the whole defining space
void add_tensor(EmbeddingContext& ctx, const FormFamily& f1, const FormFamily& f2);
// spin representations from Clifford generators: (7,0), (3,4), (9,0)
void add_spin(EmbeddingContext& ctx, int p, int q);
// Der(O) = g2 (compact) or the split real form
void add_octonion_derivations(EmbeddingContext& ctx, bool split);
// verbatim generators, already valid ambient matrices (diag-model side)
void add_verbatim(EmbeddingContext& ctx, const std::vector<Mat>& gens, std::size_t rank,
                  const std::string& what);

Subalg finish(EmbeddingContext& ctx);

enum class CenterKind { u1, gl1, full };
// adjoin a piece of the centralizer of h: u1 from the compact part, gl1 from
// the noncompact part, full = whole centralizer
Subalg center_piece(const RealForm& g, const Subalg& h, CenterKind kind);

// spec-level one-shot wrappers
Subalg block_embed(const RealForm& g, const std::vector<FormFamily>& factors);
// theta-stable variant: factors consume hyperbolic pairs and definite slots
// of the ambient split-form layout directly (index permutation only), so the
// result is stable under X -> -X^*; needed for symmetric-pair machinery
Subalg split_block_embed(const RealForm& g, const std::vector<FormFamily>& factors);
Subalg tensor_embed(const RealForm& g, const FormFamily& f1, const FormFamily& f2);
Subalg realify_embed(const RealForm& g, const FormFamily& sub);
Subalg octonion_derivations(const RealForm& g, bool split);
Subalg spin_clifford(const RealForm& g, int p, int q);
// one factor placed across `copies` consecutive block positions as x -> (x,..,x)
Subalg diagonal_embed(const RealForm& g, const FormFamily& factor, std::size_t copies);
// u(p,q) inside so*(2(p+q)) as the centralizer of an adapted complex
// structure J; with_center = false drops the center (J-trace zero), giving
// su(p,q)
Subalg unitary_centralizer(const RealForm& g, std::size_t p, std::size_t q,
                           bool with_center = true);
// fixed points of X -> s conj(X) s^-1; throws NotClosed via make_subalg if s
// does not induce an involution of g
Subalg conj_fixed_points(const RealForm& g, const Mat& s, const std::string& what);
// sp(p,C) inside sp(p,p)
Subalg complex_symplectic_in_sp(const RealForm& g);
// factor on an isotropic subspace, minus-transpose on the dual one: gl-type
// Levi of an ambient orthogonal algebra (complex_sl in complex_so, sl_R in so)
Subalg gl_dual_embed(const RealForm& g, const FormFamily& factor);
// complex span of Der(O) inside so(7,C) or so(8,C)
Subalg complexified_g2(const RealForm& g);
// complex span of compact spin generators inside complex_so: m = 7 needs
// ambient size >= 8, m = 9 needs >= 16
Subalg complexified_spin(const RealForm& g, unsigned m);

// exact Weyl-cell representatives (identity first), normalizing the ambient
// realization; used to sweep sampling cells for negative verdicts
std::vector<Mat> weyl_cells(const RealForm& g);

} // namespace sph

#endif
