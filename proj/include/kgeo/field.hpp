#ifndef KGEO_FIELD_HPP
#define KGEO_FIELD_HPP

#include <vector>

#include "kgeo/lattice.hpp"
#include "kgeo/parallel.hpp"

namespace kgeo {

/** Complex samples of a smooth function on a periodic lattice. */
struct Field {
    LatticePtr lat;
    std::vector<cd> v;

    Field() = default;
    explicit Field(LatticePtr l, cd fill = cd(0.0, 0.0)) : lat(std::move(l)), v(lat->size, fill) {}
    Field(LatticePtr l, std::vector<cd> data) : lat(std::move(l)), v(std::move(data)) {
        if (v.size() != lat->size) throw Error("field: sample count does not match grid");
    }

    std::size_t size() const { return v.size(); }
    cd& operator[](std::size_t i) { return v[i]; }
    const cd& operator[](std::size_t i) const { return v[i]; }

    double max_abs() const {
        return par::reduce_max(size(), [&](std::size_t i) { return std::abs(v[i]); });
    }
    double max_imag() const {
        return par::reduce_max(size(), [&](std::size_t i) { return std::abs(v[i].imag()); });
    }
    /** Plain grid mean (flat measure). */
    cd mean() const {
        return par::reduce_sum<cd>(size(), [&](std::size_t i) { return v[i]; }) /
               static_cast<double>(size());
    }

    Field& operator+=(const Field& o) {
        check_same(*lat, *o.lat);
        par::pointwise(size(), [&](std::size_t i) { v[i] += o.v[i]; });
        return *this;
    }
    Field& operator-=(const Field& o) {
        check_same(*lat, *o.lat);
        par::pointwise(size(), [&](std::size_t i) { v[i] -= o.v[i]; });
        return *this;
    }
    Field& operator*=(cd s) {
        par::pointwise(size(), [&](std::size_t i) { v[i] *= s; });
        return *this;
    }
    Field& operator+=(cd s) {
        par::pointwise(size(), [&](std::size_t i) { v[i] += s; });
        return *this;
    }
};

inline Field operator+(Field a, const Field& b) { a += b; return a; }
inline Field operator-(Field a, const Field& b) { a -= b; return a; }
inline Field operator*(cd s, Field a) { a *= s; return a; }

inline Field axpy(cd a, const Field& x, const Field& y) { // a*x + y
    check_same(*x.lat, *y.lat);
    Field r(x.lat);
    par::pointwise(r.size(), [&](std::size_t i) { r.v[i] = a * x.v[i] + y.v[i]; });
    return r;
}

/** Pointwise product on the source grid (aliased; dealiased products live in calculus). */
inline Field hadamard(const Field& a, const Field& b) {
    check_same(*a.lat, *b.lat);
    Field r(a.lat);
    par::pointwise(r.size(), [&](std::size_t i) { r.v[i] = a.v[i] * b.v[i]; });
    return r;
}

inline Field conj(const Field& a) {
    Field r(a.lat);
    par::pointwise(r.size(), [&](std::size_t i) { r.v[i] = std::conj(a.v[i]); });
    return r;
}

inline Field real_part(const Field& a) {
    Field r(a.lat);
    par::pointwise(r.size(), [&](std::size_t i) { r.v[i] = cd(a.v[i].real(), 0.0); });
    return r;
}

/** Field of samples f(x) built from lattice coordinates. */
template <class F>
Field sample(const LatticePtr& lat, F&& f) {
    Field r(lat);
    const int D = 2 * lat->n;
    par::pointwise(r.size(), [&](std::size_t i) {
        int dig[16];
        lat->decode(i, dig);
        double x[16];
        for (int d = 0; d < D; ++d) x[d] = lat->coord(d, dig[d]);
        r.v[i] = f(x);
    });
    return r;
}

} // namespace kgeo

#endif
