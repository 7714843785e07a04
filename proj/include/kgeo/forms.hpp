#ifndef KGEO_FORMS_HPP
#define KGEO_FORMS_HPP

#include "kgeo/calculus.hpp"
#include "kgeo/field.hpp"

namespace kgeo {

/** Hermitian (1,1)-form beta = i sum beta_{j kbar} dz^j ^ dzbar^k, stored componentwise. */
struct Form11 {
    LatticePtr lat;
    int n = 0;
    std::vector<Field> comp; // row-major, comp[j*n+k] = beta_{j kbar}

    Form11() = default;
    explicit Form11(LatticePtr l) : lat(std::move(l)), n(lat->n) {
        comp.assign(static_cast<std::size_t>(n) * n, Field(lat));
    }

    Field& at(int j, int k) { return comp[static_cast<std::size_t>(j) * n + k]; }
    const Field& at(int j, int k) const { return comp[static_cast<std::size_t>(j) * n + k]; }

    Form11& operator+=(const Form11& o);
    Form11& operator-=(const Form11& o);
    Form11& operator*=(cd s);

    /** max |beta_{j kbar} - conj(beta_{k jbar})| over the grid. */
    double hermitian_defect() const;
    /** max over (l,j,k) of |d_l beta_{j kbar} - d_j beta_{l kbar}|; zero iff the (2,1) part of d beta vanishes. */
    double closedness_defect() const;
    double max_abs() const;
};

Form11 operator+(Form11 a, const Form11& b);
Form11 operator-(Form11 a, const Form11& b);
Form11 operator*(cd s, Form11 a);

/** Constant-coefficient form from a Hermitian matrix (row-major n x n). */
Form11 constant_form(const LatticePtr& lat, const std::vector<cd>& matrix);

/** i ddbar(phi): closed, Hermitian for real phi, mean-zero components. */
Form11 ddbar(const Field& phi);

} // namespace kgeo

#endif
