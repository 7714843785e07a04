#ifndef KGEO_SMALLHERM_HPP
#define KGEO_SMALLHERM_HPP

#include <complex>

namespace kgeo {

// Pointwise helpers for small (k <= 4) complex matrices stored row-major.
// Used inside grid loops; no allocation.

inline std::complex<double> small_det(const std::complex<double>* a, int k) {
    using cd = std::complex<double>;
    switch (k) {
        case 1:
            return a[0];
        case 2:
            return a[0] * a[3] - a[1] * a[2];
        case 3:
            return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
                   a[2] * (a[3] * a[7] - a[4] * a[6]);
        default: {
            cd m[16];
            for (int i = 0; i < k * k; ++i) m[i] = a[i];
            cd det(1.0, 0.0);
            for (int c = 0; c < k; ++c) {
                int piv = c;
                for (int r = c + 1; r < k; ++r)
                    if (std::abs(m[r * k + c]) > std::abs(m[piv * k + c])) piv = r;
                if (piv != c) {
                    for (int j = 0; j < k; ++j) std::swap(m[c * k + j], m[piv * k + j]);
                    det = -det;
                }
                det *= m[c * k + c];
                if (m[c * k + c] == cd(0.0, 0.0)) return cd(0.0, 0.0);
                for (int r = c + 1; r < k; ++r) {
                    const cd f = m[r * k + c] / m[c * k + c];
                    for (int j = c; j < k; ++j) m[r * k + j] -= f * m[c * k + j];
                }
            }
            return det;
        }
    }
}

/** Inverse by Gauss-Jordan with partial pivoting; inv may not alias a. */
inline void small_inv(const std::complex<double>* a, std::complex<double>* inv, int k) {
    using cd = std::complex<double>;
    cd m[16];
    for (int i = 0; i < k * k; ++i) m[i] = a[i];
    for (int i = 0; i < k * k; ++i) inv[i] = cd(0.0, 0.0);
    for (int i = 0; i < k; ++i) inv[i * k + i] = cd(1.0, 0.0);
    for (int c = 0; c < k; ++c) {
        int piv = c;
        for (int r = c + 1; r < k; ++r)
            if (std::abs(m[r * k + c]) > std::abs(m[piv * k + c])) piv = r;
        if (piv != c)
            for (int j = 0; j < k; ++j) {
                std::swap(m[c * k + j], m[piv * k + j]);
                std::swap(inv[c * k + j], inv[piv * k + j]);
            }
        const cd d = m[c * k + c];
        for (int j = 0; j < k; ++j) {
            m[c * k + j] /= d;
            inv[c * k + j] /= d;
        }
        for (int r = 0; r < k; ++r) {
            if (r == c) continue;
            const cd f = m[r * k + c];
            if (f == cd(0.0, 0.0)) continue;
            for (int j = 0; j < k; ++j) {
                m[r * k + j] -= f * m[c * k + j];
                inv[r * k + j] -= f * inv[c * k + j];
            }
        }
    }
}

/** Smallest eigenvalue of a Hermitian matrix, k <= 2 closed form (k >= 3 lives in metric.cpp). */
inline double small_min_eig2(const std::complex<double>* a, int k) {
    if (k == 1) return a[0].real();
    const double tr = a[0].real() + a[3].real();
    const double det = (a[0] * a[3] - a[1] * a[2]).real();
    const double disc = tr * tr - 4.0 * det;
    const double s = disc > 0.0 ? std::sqrt(disc) : 0.0;
    return 0.5 * (tr - s);
}

} // namespace kgeo

#endif
