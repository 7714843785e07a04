#include "kgeo/calculus.hpp"

namespace kgeo {

namespace {

// Per-dimension integer frequencies with the Nyquist mode zeroed (derivative
// convention that keeps real fields real).
std::vector<std::vector<double>> deriv_freqs(const Lattice& lat) {
    std::vector<std::vector<double>> nu(2 * lat.n);
    for (int d = 0; d < 2 * lat.n; ++d) {
        nu[d].resize(lat.shape[d]);
        for (int m = 0; m < lat.shape[d]; ++m)
            nu[d][m] = lat.nyquist(d, m) ? 0.0 : static_cast<double>(lat.freq(d, m));
    }
    return nu;
}

} // namespace

std::vector<cd> spectrum(const Field& f) {
    std::vector<cd> c(f.size());
    f.lat->fft(f.v.data(), c.data());
    const double s = 1.0 / static_cast<double>(f.size());
    par::pointwise(c.size(), [&](std::size_t i) { c[i] *= s; });
    return c;
}

Field from_spectrum(const LatticePtr& lat, const std::vector<cd>& coef) {
    Field r(lat);
    lat->ifft(coef.data(), r.v.data());
    const double s = static_cast<double>(lat->size);
    par::pointwise(r.size(), [&](std::size_t i) { r.v[i] *= s; });
    return r;
}

Field deriv_real(const Field& f, int d) {
    const auto nu = deriv_freqs(*f.lat);
    auto c = spectrum(f);
    const Lattice& lat = *f.lat;
    par::pointwise(c.size(), [&](std::size_t i) {
        const int m = static_cast<int>((i / lat.stride[d]) % static_cast<std::size_t>(lat.shape[d]));
        c[i] *= cd(0.0, nu[d][m]);
    });
    return from_spectrum(f.lat, c);
}

namespace {

// symbol of d/dz_j (holo=true) or d/dzbar_j on mode with digits dig
inline cd z_symbol(const Lattice& lat, const std::vector<std::vector<double>>& nu, int j,
                   bool holo, const int* dig) {
    const double nx = nu[2 * j][dig[2 * j]];
    const double ny = nu[2 * j + 1][dig[2 * j + 1]];
    const cd a = holo ? lat.za[j] : std::conj(lat.za[j]);
    const cd b = holo ? lat.zb[j] : std::conj(lat.zb[j]);
    return cd(0.0, 1.0) * (a * nx + b * ny);
}

template <class Mult>
Field apply_symbol(const Field& f, const std::vector<cd>& base, Mult&& m) {
    const Lattice& lat = *f.lat;
    std::vector<cd> c(base.size());
    par::pointwise(c.size(), [&](std::size_t i) {
        int dig[16];
        lat.decode(i, dig);
        c[i] = base[i] * m(dig);
    });
    return from_spectrum(f.lat, c);
}

} // namespace

Field dz(const Field& f, int j) {
    const auto nu = deriv_freqs(*f.lat);
    const auto base = spectrum(f);
    const Lattice& lat = *f.lat;
    return apply_symbol(f, base, [&](const int* dig) { return z_symbol(lat, nu, j, true, dig); });
}

Field dzbar(const Field& f, int j) {
    const auto nu = deriv_freqs(*f.lat);
    const auto base = spectrum(f);
    const Lattice& lat = *f.lat;
    return apply_symbol(f, base, [&](const int* dig) { return z_symbol(lat, nu, j, false, dig); });
}

void gradients(const Field& f, std::vector<Field>& dzf, std::vector<Field>& dzbarf) {
    const Lattice& lat = *f.lat;
    const auto nu = deriv_freqs(lat);
    const auto base = spectrum(f);
    dzf.clear();
    dzbarf.clear();
    for (int j = 0; j < lat.n; ++j)
        dzf.push_back(apply_symbol(f, base, [&](const int* dig) { return z_symbol(lat, nu, j, true, dig); }));
    for (int j = 0; j < lat.n; ++j)
        dzbarf.push_back(apply_symbol(f, base, [&](const int* dig) { return z_symbol(lat, nu, j, false, dig); }));
}

std::vector<Field> ddbar_components(const Field& f) {
    const Lattice& lat = *f.lat;
    const auto nu = deriv_freqs(lat);
    const auto base = spectrum(f);
    std::vector<Field> out;
    out.reserve(static_cast<std::size_t>(lat.n) * lat.n);
    for (int j = 0; j < lat.n; ++j)
        for (int k = 0; k < lat.n; ++k)
            out.push_back(apply_symbol(f, base, [&](const int* dig) {
                return z_symbol(lat, nu, j, true, dig) * z_symbol(lat, nu, k, false, dig);
            }));
    return out;
}

namespace {

// For each coarse dimension: mode -> fine-grid mode index, or -1 for Nyquist.
std::vector<std::vector<long>> mode_maps(const Lattice& coarse, const Lattice& fine) {
    std::vector<std::vector<long>> maps(2 * coarse.n);
    for (int d = 0; d < 2 * coarse.n; ++d) {
        maps[d].resize(coarse.shape[d]);
        for (int m = 0; m < coarse.shape[d]; ++m) {
            if (coarse.nyquist(d, m)) {
                maps[d][m] = -1;
                continue;
            }
            const int fr = coarse.freq(d, m);
            maps[d][m] = fr >= 0 ? fr : fr + fine.shape[d];
        }
    }
    return maps;
}

} // namespace

Field pad_to(const Field& f, const LatticePtr& fine) {
    const Lattice& c = *f.lat;
    const auto maps = mode_maps(c, *fine);
    const auto cs = spectrum(f);
    std::vector<cd> fs(fine->size, cd(0.0, 0.0));
    par::pointwise(cs.size(), [&](std::size_t i) {
        int dig[16];
        c.decode(i, dig);
        std::size_t t = 0;
        for (int d = 0; d < 2 * c.n; ++d) {
            const long md = maps[d][dig[d]];
            if (md < 0) return;
            t += static_cast<std::size_t>(md) * fine->stride[d];
        }
        fs[t] = cs[i];
    });
    return from_spectrum(fine, fs);
}

Field truncate_to(const Field& f, const LatticePtr& coarse) {
    const auto maps = mode_maps(*coarse, *f.lat);
    const auto fsp = spectrum(f);
    std::vector<cd> cs(coarse->size, cd(0.0, 0.0));
    par::pointwise(cs.size(), [&](std::size_t i) {
        int dig[16];
        coarse->decode(i, dig);
        std::size_t t = 0;
        for (int d = 0; d < 2 * coarse->n; ++d) {
            const long md = maps[d][dig[d]];
            if (md < 0) return;
            t += static_cast<std::size_t>(md) * f.lat->stride[d];
        }
        cs[i] = fsp[t];
    });
    return from_spectrum(coarse, cs);
}

void padded_eval(const std::vector<const Field*>& in, const std::vector<Field*>& out,
                 const std::function<void(std::size_t, const cd* const*, cd* const*)>& op) {
    if (in.empty() || out.empty()) throw Error("padded_eval: empty argument list");
    const LatticePtr coarse = in[0]->lat;
    const LatticePtr fine = coarse->padded();
    std::vector<Field> pin;
    pin.reserve(in.size());
    for (const Field* f : in) {
        check_same(*f->lat, *coarse);
        pin.push_back(pad_to(*f, fine));
    }
    std::vector<Field> pout(out.size(), Field(fine));
    std::vector<const cd*> ip(in.size());
    std::vector<cd*> opn(out.size());
    for (std::size_t k = 0; k < pin.size(); ++k) ip[k] = pin[k].v.data();
    for (std::size_t k = 0; k < pout.size(); ++k) opn[k] = pout[k].v.data();
    par::pointwise(fine->size, [&](std::size_t i) { op(i, ip.data(), opn.data()); });
    for (std::size_t k = 0; k < out.size(); ++k) *out[k] = truncate_to(pout[k], coarse);
}

Field dealiased_product(const Field& a, const Field& b) {
    check_same(*a.lat, *b.lat);
    Field r(a.lat);
    padded_eval({&a, &b}, {&r},
                [](std::size_t i, const cd* const* in, cd* const* out) { out[0][i] = in[0][i] * in[1][i]; });
    return r;
}

} // namespace kgeo
