#ifndef SPH_REPS_HPP
#define SPH_REPS_HPP

#include <sph/checks.hpp>

namespace sph {

// defining representation on the ambient space
RepData standard_rep(const FormFamily& f);
// adjoint action on the algebra itself
RepData adjoint_rep(const FormFamily& f);
// Sym^k of the standard representation, k = 2 or 3 (complex_sl factors)
RepData sym_power_rep(const FormFamily& f, unsigned k);
// Lambda^k of the standard representation, k = 2 or 3
RepData wedge_power_rep(const FormFamily& f, unsigned k);
// primitive part of Lambda^k C^{2n} under sp(n,C) (k = 2 or 3): kernel of the
// omega-contraction
RepData wedge_primitive_rep(unsigned n, unsigned k);
// complex spin representations: m = 7 on C^8, m = 9 on C^16
RepData spin_rep_c(unsigned m);
// the 7-dimensional representation of complexified g2
RepData g2_rep_c();

} // namespace sph

#endif
