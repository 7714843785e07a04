#ifndef KGEO_METRIC_HPP
#define KGEO_METRIC_HPP

#include "kgeo/forms.hpp"

namespace kgeo {

/**
 * Kahler structure omega = ref + i ddbar(potential) with cached metric data.
 *
 * Index conventions: g.at(j,k) = g_{j kbar}; ginv.at(j,k) is the plain matrix
 * inverse, so the raised-index tensor is g^{j kbar} = ginv.at(k,j) and
 * Lambda(beta) = sum ginv.at(k,j) beta_{j kbar}. detg is real positive.
 * Curvature follows S(omega) = Lambda Ric, Ric = -i ddbar log det g; this is
 * half the Riemannian scalar curvature.
 */
struct Kahler {
    LatticePtr lat;
    int n = 0;
    Form11 reference;
    Field potential;

    Form11 g;
    Form11 ginv;
    Field detg;
    Field logdetg;
    Form11 ricci;
    Field scal;
    double min_eig = 0.0;

    // dealiasing caches on the 3/2 grid
    LatticePtr pad;
    std::vector<Field> g_pad;    // n*n
    std::vector<Field> ginv_pad; // n*n (matrix inverse layout)
    Field detg_pad;
};

/** Positivity tolerance for the pointwise metric eigenvalue check. */
inline constexpr double kPositivityTol = 1e-12;

/** Builds omega = ref + i ddbar(phi); throws NonPositive before any curvature is formed. */
Kahler make_metric(const Form11& ref, const Field& phi);

/** Flat structure from a constant Hermitian matrix (identity by default). */
Kahler make_flat(const LatticePtr& lat, const std::vector<cd>& matrix = {});

/** Smallest pointwise eigenvalue of a Hermitian component matrix field. */
double min_eigenvalue(const Form11& h, std::size_t* argmin = nullptr);

/** integral of phi against omega^n/n! (det g times the flat torus measure). */
cd integrate(const Field& phi, const Kahler& om);
double volume(const Kahler& om);
/** omega-volume average of phi. */
cd omega_mean(const Field& phi, const Kahler& om);
/** sqrt of the omega-average of |phi|^2. */
double l2_norm(const Field& phi, const Kahler& om);

} // namespace kgeo

#endif
