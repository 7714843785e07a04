#include "kgeo/forms.hpp"

namespace kgeo {

Form11& Form11::operator+=(const Form11& o) {
    check_same(*lat, *o.lat);
    for (std::size_t c = 0; c < comp.size(); ++c) comp[c] += o.comp[c];
    return *this;
}

Form11& Form11::operator-=(const Form11& o) {
    check_same(*lat, *o.lat);
    for (std::size_t c = 0; c < comp.size(); ++c) comp[c] -= o.comp[c];
    return *this;
}

Form11& Form11::operator*=(cd s) {
    for (auto& c : comp) c *= s;
    return *this;
}

Form11 operator+(Form11 a, const Form11& b) { a += b; return a; }
Form11 operator-(Form11 a, const Form11& b) { a -= b; return a; }
Form11 operator*(cd s, Form11 a) { a *= s; return a; }

double Form11::hermitian_defect() const {
    double d = 0.0;
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
            const Field& a = at(j, k);
            const Field& b = at(k, j);
            const double m = par::reduce_max(a.size(), [&](std::size_t i) {
                return std::abs(a.v[i] - std::conj(b.v[i]));
            });
            if (m > d) d = m;
        }
    return d;
}

double Form11::closedness_defect() const {
    // d beta = 0 for a Hermitian form iff the (2,1) part vanishes:
    // d_l beta_{j kbar} antisymmetrised in (l, j).
    double worst = 0.0;
    std::vector<std::vector<Field>> dl(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            auto& store = dl[static_cast<std::size_t>(j) * n + k];
            store.reserve(n);
            for (int l = 0; l < n; ++l) store.push_back(dz(at(j, k), l));
        }
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            for (int j = l + 1; j < n; ++j) {
                const Field& a = dl[static_cast<std::size_t>(j) * n + k][l];
                const Field& b = dl[static_cast<std::size_t>(l) * n + k][j];
                const double m = par::reduce_max(a.size(), [&](std::size_t i) {
                    return std::abs(a.v[i] - b.v[i]);
                });
                if (m > worst) worst = m;
            }
    return worst;
}

double Form11::max_abs() const {
    double m = 0.0;
    for (const auto& c : comp) m = std::max(m, c.max_abs());
    return m;
}

Form11 constant_form(const LatticePtr& lat, const std::vector<cd>& matrix) {
    Form11 f(lat);
    if (matrix.size() != static_cast<std::size_t>(lat->n) * lat->n)
        throw Error("constant_form: matrix size mismatch");
    for (std::size_t c = 0; c < matrix.size(); ++c) {
        const cd s = matrix[c];
        par::pointwise(lat->size, [&](std::size_t i) { f.comp[c].v[i] = s; });
    }
    return f;
}

Form11 ddbar(const Field& phi) {
    Form11 f(phi.lat);
    f.comp = ddbar_components(phi);
    return f;
}

} // namespace kgeo
