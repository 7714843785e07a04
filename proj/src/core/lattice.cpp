#include "kgeo/lattice.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

namespace kgeo {

namespace {
std::mutex g_planner_mutex; // FFTW planner is not thread-safe; execution is
}

struct Lattice::Plans {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    ~Plans() {
        std::lock_guard<std::mutex> lock(g_planner_mutex);
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
    }
};

std::shared_ptr<const Lattice> Lattice::make(int n, std::vector<cd> tau, std::vector<int> shape) {
    if (n < 1 || static_cast<int>(tau.size()) != n || static_cast<int>(shape.size()) != 2 * n)
        throw Error("lattice: need n moduli and 2n grid sizes");
    for (const cd& t : tau)
        if (t.imag() <= 0.0) throw Error("lattice: Im tau must be positive");
    for (int N : shape)
        if (N < 2 || N % 2 != 0) throw Error("lattice: grid sizes must be even and >= 2");

    auto lat = std::shared_ptr<Lattice>(new Lattice());
    lat->n = n;
    lat->tau = std::move(tau);
    lat->shape = std::move(shape);
    lat->stride.assign(2 * n, 1);
    for (int d = 2 * n - 2; d >= 0; --d)
        lat->stride[d] = lat->stride[d + 1] * static_cast<std::size_t>(lat->shape[d + 1]);
    lat->size = lat->stride[0] * static_cast<std::size_t>(lat->shape[0]);

    lat->za.resize(n);
    lat->zb.resize(n);
    for (int j = 0; j < n; ++j) {
        const cd t = lat->tau[j];
        const cd den = t - std::conj(t); // 2i Im tau
        lat->za[j] = -std::conj(t) / den;
        lat->zb[j] = 1.0 / den;
    }

    lat->cell = 1.0;
    for (int d = 0; d < 2 * n; ++d) lat->cell *= 2.0 * std::numbers::pi / lat->shape[d];
    lat->flat_factor = 1.0;
    for (int j = 0; j < n; ++j) lat->flat_factor *= 2.0 * lat->tau[j].imag();

    lat->self_ = lat;
    return lat;
}

double Lattice::coord(int d, int m) const {
    return 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(shape[d]);
}

void Lattice::ensure_plans() const {
    if (plans_) return;
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    if (plans_) return;
    auto p = std::make_unique<Plans>();
    std::vector<int> dims(shape.begin(), shape.end());
    std::vector<cd> a(size), b(size);
    auto* ap = reinterpret_cast<fftw_complex*>(a.data());
    auto* bp = reinterpret_cast<fftw_complex*>(b.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    p->fwd = fftw_plan_dft(2 * n, dims.data(), ap, bp, FFTW_FORWARD, flags);
    p->bwd = fftw_plan_dft(2 * n, dims.data(), ap, bp, FFTW_BACKWARD, flags);
    if (!p->fwd || !p->bwd) throw Error("lattice: FFTW plan creation failed");
    plans_ = std::move(p);
}

void Lattice::fft(const cd* in, cd* out) const {
    ensure_plans();
    fftw_execute_dft(plans_->fwd,
                     reinterpret_cast<fftw_complex*>(const_cast<cd*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

void Lattice::ifft(const cd* in, cd* out) const {
    ensure_plans();
    fftw_execute_dft(plans_->bwd,
                     reinterpret_cast<fftw_complex*>(const_cast<cd*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
    const double s = 1.0 / static_cast<double>(size);
    for (std::size_t i = 0; i < size; ++i) out[i] *= s;
}

std::shared_ptr<const Lattice> Lattice::padded() const {
    {
        std::lock_guard<std::mutex> lock(g_planner_mutex);
        if (padded_) return padded_;
    }
    std::vector<int> pshape(shape.size());
    for (std::size_t d = 0; d < shape.size(); ++d) {
        int M = (3 * shape[d]) / 2;
        if (M % 2 != 0) ++M;
        pshape[d] = M;
    }
    auto p = Lattice::make(n, tau, pshape);
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    if (!padded_) padded_ = p;
    return padded_;
}

Lattice::~Lattice() = default;

} // namespace kgeo
