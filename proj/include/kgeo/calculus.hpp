#ifndef KGEO_CALCULUS_HPP
#define KGEO_CALCULUS_HPP

#include <functional>

#include "kgeo/field.hpp"

namespace kgeo {

/** Forward transform, normalised so coefficients are interpolation coefficients. */
std::vector<cd> spectrum(const Field& f);
Field from_spectrum(const LatticePtr& lat, const std::vector<cd>& coef);

/** Spectral derivative along real dimension d (Nyquist mode dropped). */
Field deriv_real(const Field& f, int d);

/** Holomorphic and antiholomorphic derivatives for complex factor j. */
Field dz(const Field& f, int j);
Field dzbar(const Field& f, int j);

/** All first derivatives (dz_0..dz_{n-1}, dzbar_0..dzbar_{n-1}) from one transform. */
void gradients(const Field& f, std::vector<Field>& dzf, std::vector<Field>& dzbarf);

/** Components of i ddbar f: out[j*n+k] = d_j d_kbar f, one forward transform. */
std::vector<Field> ddbar_components(const Field& f);

/** Band-limited transfer to the 3/2 grid and back. */
Field pad_to(const Field& f, const LatticePtr& fine);
Field truncate_to(const Field& f, const LatticePtr& coarse);

/**
 * Dealiased pointwise algebra: inputs are padded to the 3/2 grid, `op` runs on
 * the padded arrays, outputs are truncated back. Non-polynomial expressions
 * (inverses, logs) are evaluated on the padded grid as well; truncation then
 * projects onto the resolved band.
 */
void padded_eval(const std::vector<const Field*>& in, const std::vector<Field*>& out,
                 const std::function<void(std::size_t, const cd* const*, cd* const*)>& op);

/** Dealiased product of two fields. */
Field dealiased_product(const Field& a, const Field& b);

} // namespace kgeo

#endif
