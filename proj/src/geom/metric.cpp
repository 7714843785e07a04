#include "kgeo/metric.hpp"

#include <Eigen/Eigenvalues>

#include <atomic>

#include "kgeo/smallherm.hpp"

namespace kgeo {

double min_eigenvalue(const Form11& h, std::size_t* argmin) {
    const int n = h.n;
    const std::size_t sz = h.lat->size;
    const std::size_t nblk = (sz + par::kReduceBlock - 1) / par::kReduceBlock;
    std::vector<double> bmin(nblk, 0.0);
    std::vector<std::size_t> barg(nblk, 0);
    par::pointwise(nblk, [&](std::size_t b) {
        const std::size_t lo = b * par::kReduceBlock;
        const std::size_t hi = std::min(lo + par::kReduceBlock, sz);
        double m = 1e300;
        std::size_t arg = lo;
        cd a[16];
        for (std::size_t i = lo; i < hi; ++i) {
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) a[r * n + c] = h.at(r, c).v[i];
            double e;
            if (n <= 2) {
                e = small_min_eig2(a, n);
            } else {
                Eigen::MatrixXcd M(n, n);
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c) M(r, c) = a[r * n + c];
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M, Eigen::EigenvaluesOnly);
                e = es.eigenvalues()(0);
            }
            if (e < m) {
                m = e;
                arg = i;
            }
        }
        bmin[b] = m;
        barg[b] = arg;
    });
    double m = 1e300;
    std::size_t arg = 0;
    for (std::size_t b = 0; b < nblk; ++b)
        if (bmin[b] < m) {
            m = bmin[b];
            arg = barg[b];
        }
    if (argmin) *argmin = arg;
    return m;
}

Kahler make_metric(const Form11& ref, const Field& phi) {
    check_same(*ref.lat, *phi.lat);
    Kahler K;
    K.lat = ref.lat;
    K.n = ref.n;
    K.reference = ref;
    K.potential = phi;
    K.g = ref + ddbar(phi);

    std::size_t where = 0;
    K.min_eig = min_eigenvalue(K.g, &where);
    if (K.min_eig <= kPositivityTol) throw NonPositive(where, K.min_eig);

    const int n = K.n;
    K.pad = K.lat->padded();
    K.g_pad.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& c : K.g.comp) K.g_pad.push_back(pad_to(c, K.pad));

    // pointwise inverse, determinant, log determinant on the padded grid
    K.ginv_pad.assign(static_cast<std::size_t>(n) * n, Field(K.pad));
    K.detg_pad = Field(K.pad);
    Field logdet_pad(K.pad);
    std::atomic<bool> bad{false};
    std::atomic<std::size_t> bad_at{0};
    par::pointwise(K.pad->size, [&](std::size_t i) {
        cd a[16], inv[16];
        for (int c = 0; c < n * n; ++c) a[c] = K.g_pad[c].v[i];
        const cd det = small_det(a, n);
        if (!(det.real() > 0.0)) {
            bool expected = false;
            if (bad.compare_exchange_strong(expected, true)) bad_at.store(i);
            return;
        }
        small_inv(a, inv, n);
        for (int c = 0; c < n * n; ++c) K.ginv_pad[c].v[i] = inv[c];
        K.detg_pad.v[i] = det;
        logdet_pad.v[i] = std::log(det.real());
    });
    if (bad.load()) throw NonPositive(bad_at.load(), 0.0); // marginal metric lost positivity on the dealiasing grid

    K.ginv = Form11(K.lat);
    for (int c = 0; c < n * n; ++c) K.ginv.comp[c] = truncate_to(K.ginv_pad[c], K.lat);
    K.detg = truncate_to(K.detg_pad, K.lat);
    K.logdetg = truncate_to(logdet_pad, K.lat);

    K.ricci = cd(-1.0, 0.0) * ddbar(K.logdetg);

    // S = Lambda Ric on the padded grid (quartic in derivatives of the potential)
    std::vector<Field> ric_pad;
    ric_pad.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& c : K.ricci.comp) ric_pad.push_back(pad_to(c, K.pad));
    Field s_pad(K.pad);
    par::pointwise(K.pad->size, [&](std::size_t i) {
        cd s(0.0, 0.0);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                s += K.ginv_pad[static_cast<std::size_t>(k) * n + j].v[i] *
                     ric_pad[static_cast<std::size_t>(j) * n + k].v[i];
        s_pad.v[i] = s;
    });
    K.scal = truncate_to(s_pad, K.lat);
    return K;
}

Kahler make_flat(const LatticePtr& lat, const std::vector<cd>& matrix) {
    std::vector<cd> m = matrix;
    if (m.empty()) {
        m.assign(static_cast<std::size_t>(lat->n) * lat->n, cd(0.0, 0.0));
        for (int j = 0; j < lat->n; ++j) m[static_cast<std::size_t>(j) * lat->n + j] = cd(1.0, 0.0);
    }
    return make_metric(constant_form(lat, m), Field(lat));
}

cd integrate(const Field& phi, const Kahler& om) {
    check_same(*phi.lat, *om.lat);
    const double w = om.lat->cell * om.lat->flat_factor;
    const cd s = par::reduce_sum<cd>(phi.size(), [&](std::size_t i) {
        return phi.v[i] * om.detg.v[i].real();
    });
    return w * s;
}

double volume(const Kahler& om) {
    const double w = om.lat->cell * om.lat->flat_factor;
    return w * par::reduce_sum<double>(om.lat->size, [&](std::size_t i) {
        return om.detg.v[i].real();
    });
}

cd omega_mean(const Field& phi, const Kahler& om) { return integrate(phi, om) / volume(om); }

double l2_norm(const Field& phi, const Kahler& om) {
    const double w = om.lat->cell * om.lat->flat_factor;
    const double s = par::reduce_sum<double>(phi.size(), [&](std::size_t i) {
        return std::norm(phi.v[i]) * om.detg.v[i].real();
    });
    return std::sqrt(std::max(0.0, s * w / volume(om)));
}

} // namespace kgeo
