#ifndef KGEO_OPERATORS_HPP
#define KGEO_OPERATORS_HPP

#include "kgeo/metric.hpp"

namespace kgeo {

/** Lambda_omega beta = g^{j kbar} beta_{j kbar}. */
Field trace11(const Form11& beta, const Kahler& om);

/** <beta1, beta2>_omega = g^{j kbar} g^{r sbar} (beta1)_{j sbar} (beta2)_{r kbar}. */
Field inner11(const Form11& b1, const Form11& b2, const Kahler& om);

/** Delta phi = Lambda i ddbar phi (half the Riemannian Laplacian). */
Field laplace(const Field& phi, const Kahler& om);

/** g^{p qbar} d_p f d_qbar phi = Lambda(i df ^ dbar phi); complex bilinear. */
Field grad_pair_half(const Field& f, const Field& phi, const Kahler& om);

/** <grad f, grad phi> = 2 g^{p qbar} d_p f d_qbar phi. Real inputs give the
 *  Riemannian pairing up to the antisymmetric imaginary part. */
Field grad_pair(const Field& f, const Field& phi, const Kahler& om);

/** Symmetrised real pairing g^{p qbar}(d_p f d_qbar phi + d_p phi d_qbar f). */
Field grad_pair_real(const Field& f, const Field& phi, const Kahler& om);

/** <grad psi, grad phi>_alpha = g^{p qbar} g^{r sbar} d_p psi d_sbar phi alpha_{r qbar}. */
Field alpha_grad_pair(const Field& psi, const Field& phi, const Form11& alpha, const Kahler& om);

/** D phi = dbar grad^{1,0} phi, components (D phi)^j_{qbar} = d_qbar(g^{j kbar} d_kbar phi). */
struct DTensor {
    LatticePtr lat;
    int n = 0;
    std::vector<Field> comp; // comp[j*n+q] = (D phi)^j_{qbar}
};
DTensor dtensor(const Field& phi, const Kahler& om);

/** Hermitian pairing <A, B> = g_{j lbar} g^{s qbar} A^j_{qbar} conj(B^l_{sbar}). */
Field dtensor_pair(const DTensor& a, const DTensor& b, const Kahler& om);

/** sup |D phi| as a holomorphy check. */
double dtensor_norm(const Field& phi, const Kahler& om);

/**
 * Lichnerowicz operator D*D phi = Delta^2 phi + <i ddbar phi, Ric>
 * + g^{j kbar} d_j S d_kbar phi. Self-adjoint for the omega^n pairing.
 */
Field lichnerowicz(const Field& phi, const Kahler& om);

} // namespace kgeo

#endif
