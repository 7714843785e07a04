#include "kgeo/linsolve.hpp"

#include "kgeo/random_fields.hpp"

namespace kgeo {

namespace {

cd bilinear(const Field& a, const Field& b, const Kahler& w) {
    return par::reduce_sum<cd>(a.size(), [&](std::size_t i) {
        return a.v[i] * b.v[i] * w.detg.v[i].real();
    });
}

Field apply_multiplier(const Field& f, const std::vector<double>& mult) {
    auto c = spectrum(f);
    par::pointwise(c.size(), [&](std::size_t i) { c[i] *= mult[i]; });
    return from_spectrum(f.lat, c);
}

} // namespace

std::vector<double> flat_laplace_symbol(const Lattice& lat, const std::vector<cd>& ginv_const) {
    const int n = lat.n;
    std::vector<double> q(lat.size, 0.0);
    par::pointwise(lat.size, [&](std::size_t i) {
        int dig[16];
        lat.decode(i, dig);
        cd s(0.0, 0.0);
        cd sym[8], symb[8];
        for (int j = 0; j < n; ++j) {
            const double nx = lat.nyquist(2 * j, dig[2 * j]) ? 0.0 : lat.freq(2 * j, dig[2 * j]);
            const double ny =
                lat.nyquist(2 * j + 1, dig[2 * j + 1]) ? 0.0 : lat.freq(2 * j + 1, dig[2 * j + 1]);
            sym[j] = cd(0.0, 1.0) * (lat.za[j] * nx + lat.zb[j] * ny);
            symb[j] = cd(0.0, 1.0) * (std::conj(lat.za[j]) * nx + std::conj(lat.zb[j]) * ny);
        }
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                s += ginv_const[static_cast<std::size_t>(k) * n + j] * sym[j] * symb[k];
        q[i] = -s.real(); // Delta symbol is -q, q >= 0
    });
    return q;
}

std::vector<double> flat_biharmonic_precond(const Kahler& K) {
    const int n = K.n;
    std::vector<cd> ginv0(static_cast<std::size_t>(n) * n);
    // constant comparison metric: grid mean of the inverse metric
    for (int c = 0; c < n * n; ++c) ginv0[c] = K.ginv.comp[c].mean();
    auto q = flat_laplace_symbol(*K.lat, ginv0);
    std::vector<double> m(q.size());
    par::pointwise(q.size(), [&](std::size_t i) {
        const double s = q[i] * q[i];
        m[i] = s > 1e-14 ? 1.0 / s : 0.0;
    });
    return m;
}

Field cocg_solve(const FieldOp& apply, const Field& rhs, const std::vector<double>& precond,
                 const std::function<void(Field&)>& project, const Kahler& weight,
                 const SolveOpts& opts, SolveStats* stats) {
    Field x(rhs.lat);
    Field r = rhs;
    project(r);
    const double rhs_norm = std::max(r.max_abs(), 1e-300);

    Field z = apply_multiplier(r, precond);
    project(z);
    Field p = z;
    cd rz = bilinear(r, z, weight);

    std::vector<double> history;
    double res = 1.0;
    int it = 0;
    for (; it < opts.max_iter; ++it) {
        res = r.max_abs() / rhs_norm;
        history.push_back(res);
        if (res < opts.tol) break;
        Field Ap = apply(p);
        project(Ap);
        const cd pAp = bilinear(p, Ap, weight);
        if (std::abs(pAp) < 1e-300) break;
        const cd alpha = rz / pAp;
        par::pointwise(x.size(), [&](std::size_t i) {
            x.v[i] += alpha * p.v[i];
            r.v[i] -= alpha * Ap.v[i];
        });
        project(x);
        project(r);
        z = apply_multiplier(r, precond);
        project(z);
        const cd rz_new = bilinear(r, z, weight);
        const cd beta = rz_new / rz;
        rz = rz_new;
        par::pointwise(p.size(), [&](std::size_t i) { p.v[i] = z.v[i] + beta * p.v[i]; });
    }
    if (stats) {
        stats->iterations = it;
        stats->residual = res;
        stats->history = history;
    }
    if (res >= opts.tol && opts.throw_on_fail)
        throw IterativeSolveFailure("residual " + std::to_string(res) + " after " +
                                        std::to_string(it) + " iterations",
                                    history);
    return x;
}

EigenReport smallest_eigenvalue(const FieldOp& apply, const Kahler& weight,
                                const std::vector<double>& precond,
                                const std::function<void(Field&)>& project, const EigenOpts& opts) {
    EigenReport rep;
    Field x = random_real_field(weight.lat, opts.seed, 3, 1.0);
    project(x);
    double lambda_prev = 0.0;
    for (int it = 0; it < opts.max_iter; ++it) {
        // normalise in the omega pairing
        const double nx = std::sqrt(std::abs(bilinear(x, x, weight)));
        x *= cd(1.0 / std::max(nx, 1e-300), 0.0);
        Field y = cocg_solve(apply, x, precond, project, weight, opts.inner);
        const cd xy = bilinear(x, y, weight);
        const double lambda = 1.0 / std::max(std::abs(xy), 1e-300);
        rep.residual_history.push_back(std::abs(lambda - lambda_prev) /
                                       std::max(std::abs(lambda), 1e-300));
        rep.iterations = it + 1;
        if (it > 1 && rep.residual_history.back() < opts.tol) {
            rep.lambda_min = lambda;
            rep.converged = true;
            return rep;
        }
        lambda_prev = lambda;
        x = y;
        project(x);
    }
    rep.lambda_min = lambda_prev;
    return rep;
}

} // namespace kgeo
