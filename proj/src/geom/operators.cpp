#include "kgeo/operators.hpp"

namespace kgeo {

namespace {

// Pads the given coarse fields and contracts them against the cached padded
// metric data with `op`, truncating the single output back to the base grid.
Field contract_padded(const Kahler& om, const std::vector<const Field*>& in,
                      const std::function<cd(std::size_t, const std::vector<Field>&)>& op) {
    std::vector<Field> pin;
    pin.reserve(in.size());
    for (const Field* f : in) {
        check_same(*f->lat, *om.lat);
        pin.push_back(pad_to(*f, om.pad));
    }
    Field out_pad(om.pad);
    par::pointwise(om.pad->size, [&](std::size_t i) { out_pad.v[i] = op(i, pin); });
    return truncate_to(out_pad, om.lat);
}

} // namespace

Field trace11(const Form11& beta, const Kahler& om) {
    check_same(*beta.lat, *om.lat);
    const int n = om.n;
    std::vector<const Field*> in;
    for (const auto& c : beta.comp) in.push_back(&c);
    return contract_padded(om, in, [&](std::size_t i, const std::vector<Field>& b) {
        cd s(0.0, 0.0);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                s += om.ginv_pad[static_cast<std::size_t>(k) * n + j].v[i] *
                     b[static_cast<std::size_t>(j) * n + k].v[i];
        return s;
    });
}

Field inner11(const Form11& b1, const Form11& b2, const Kahler& om) {
    check_same(*b1.lat, *om.lat);
    check_same(*b2.lat, *om.lat);
    const int n = om.n;
    std::vector<const Field*> in;
    for (const auto& c : b1.comp) in.push_back(&c);
    for (const auto& c : b2.comp) in.push_back(&c);
    const std::size_t off = b1.comp.size();
    return contract_padded(om, in, [&, off](std::size_t i, const std::vector<Field>& f) {
        cd s(0.0, 0.0);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const cd gkj = om.ginv_pad[static_cast<std::size_t>(k) * n + j].v[i];
                for (int r = 0; r < n; ++r)
                    for (int q = 0; q < n; ++q)
                        s += gkj * om.ginv_pad[static_cast<std::size_t>(q) * n + r].v[i] *
                             f[static_cast<std::size_t>(j) * n + q].v[i] *
                             f[off + static_cast<std::size_t>(r) * n + k].v[i];
            }
        return s;
    });
}

Field laplace(const Field& phi, const Kahler& om) { return trace11(ddbar(phi), om); }

Field grad_pair_half(const Field& f, const Field& phi, const Kahler& om) {
    check_same(*f.lat, *om.lat);
    check_same(*phi.lat, *om.lat);
    const int n = om.n;
    std::vector<Field> df, dfb, dphi, dphib;
    gradients(f, df, dfb);
    gradients(phi, dphi, dphib);
    std::vector<const Field*> in;
    for (const auto& c : df) in.push_back(&c);
    for (const auto& c : dphib) in.push_back(&c);
    return contract_padded(om, in, [&](std::size_t i, const std::vector<Field>& v) {
        cd s(0.0, 0.0);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                s += om.ginv_pad[static_cast<std::size_t>(q) * n + p].v[i] * v[p].v[i] *
                     v[static_cast<std::size_t>(n) + q].v[i];
        return s;
    });
}

Field grad_pair(const Field& f, const Field& phi, const Kahler& om) {
    return cd(2.0, 0.0) * grad_pair_half(f, phi, om);
}

Field grad_pair_real(const Field& f, const Field& phi, const Kahler& om) {
    Field a = grad_pair_half(f, phi, om);
    Field b = grad_pair_half(phi, f, om);
    return a + b;
}

Field alpha_grad_pair(const Field& psi, const Field& phi, const Form11& alpha, const Kahler& om) {
    check_same(*alpha.lat, *om.lat);
    const int n = om.n;
    std::vector<Field> dpsi, dpsib, dphi, dphib;
    gradients(psi, dpsi, dpsib);
    gradients(phi, dphi, dphib);
    std::vector<const Field*> in;
    for (const auto& c : dpsi) in.push_back(&c);
    for (const auto& c : dphib) in.push_back(&c);
    for (const auto& c : alpha.comp) in.push_back(&c);
    return contract_padded(om, in, [&](std::size_t i, const std::vector<Field>& v) {
        cd s(0.0, 0.0);
        const std::size_t na = 2 * static_cast<std::size_t>(n);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                const cd gqp = om.ginv_pad[static_cast<std::size_t>(q) * n + p].v[i];
                for (int r = 0; r < n; ++r)
                    for (int sdx = 0; sdx < n; ++sdx)
                        s += gqp * om.ginv_pad[static_cast<std::size_t>(sdx) * n + r].v[i] *
                             v[p].v[i] * v[static_cast<std::size_t>(n) + sdx].v[i] *
                             v[na + static_cast<std::size_t>(r) * n + q].v[i];
            }
        return s;
    });
}

DTensor dtensor(const Field& phi, const Kahler& om) {
    const int n = om.n;
    std::vector<Field> dphi, dphib;
    gradients(phi, dphi, dphib);
    // u^j = g^{j kbar} d_kbar phi
    std::vector<Field> u;
    u.reserve(n);
    for (int j = 0; j < n; ++j) {
        std::vector<const Field*> in;
        for (const auto& c : dphib) in.push_back(&c);
        u.push_back(contract_padded(om, in, [&, j](std::size_t i, const std::vector<Field>& v) {
            cd s(0.0, 0.0);
            for (int k = 0; k < n; ++k)
                s += om.ginv_pad[static_cast<std::size_t>(k) * n + j].v[i] * v[k].v[i];
            return s;
        }));
    }
    DTensor A;
    A.lat = om.lat;
    A.n = n;
    A.comp.reserve(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int q = 0; q < n; ++q) A.comp.push_back(dzbar(u[j], q));
    return A;
}

Field dtensor_pair(const DTensor& a, const DTensor& b, const Kahler& om) {
    const int n = om.n;
    std::vector<const Field*> in;
    for (const auto& c : a.comp) in.push_back(&c);
    for (const auto& c : b.comp) in.push_back(&c);
    for (const auto& c : om.g.comp) in.push_back(&c);
    const std::size_t nb = a.comp.size();
    const std::size_t ng = 2 * nb;
    return contract_padded(om, in, [&, nb, ng](std::size_t i, const std::vector<Field>& v) {
        cd s(0.0, 0.0);
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                const cd gjl = v[ng + static_cast<std::size_t>(j) * n + l].v[i];
                for (int q = 0; q < n; ++q)
                    for (int t = 0; t < n; ++t)
                        s += gjl * om.ginv_pad[static_cast<std::size_t>(q) * n + t].v[i] *
                             v[static_cast<std::size_t>(j) * n + q].v[i] *
                             std::conj(v[nb + static_cast<std::size_t>(l) * n + t].v[i]);
            }
        return s;
    });
}

double dtensor_norm(const Field& phi, const Kahler& om) {
    const DTensor A = dtensor(phi, om);
    const Field p = dtensor_pair(A, A, om);
    double m = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) m = std::max(m, std::sqrt(std::max(0.0, p.v[i].real())));
    return m;
}

Field lichnerowicz(const Field& phi, const Kahler& om) {
    const Form11 hess = ddbar(phi);
    Field lap = trace11(hess, om);
    Field bilap = laplace(lap, om);
    Field ric_term = inner11(hess, om.ricci, om);
    Field grad_term = grad_pair_half(om.scal, phi, om);
    return bilap + ric_term + grad_term;
}

} // namespace kgeo
