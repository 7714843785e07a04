#ifndef KGEO_LATTICE_HPP
#define KGEO_LATTICE_HPP

#include <complex>
#include <memory>
#include <vector>

#include "kgeo/errors.hpp"

namespace kgeo {

using cd = std::complex<double>;

/**
 * Uniform periodic grid on a product of flat complex tori.
 *
 * Factor j is C/(2pi Z + 2pi tau_j Z) with Im tau_j > 0, sampled on lattice
 * coordinates (x_j, y_j) in [0, 2pi)^2; z_j = x_j + tau_j y_j. Real dimension
 * 2j holds x_j, dimension 2j+1 holds y_j. Storage is row-major, the last
 * dimension fastest.
 */
class Lattice {
  public:
    int n;                     // complex dimension
    std::vector<cd> tau;       // n moduli, Im > 0
    std::vector<int> shape;    // 2n per-dimension sample counts, even, >= 8 for production grids
    std::size_t size = 1;      // total points
    std::vector<std::size_t> stride; // row-major strides

    // d/dz_j = za[j] d/dx_j + zb[j] d/dy_j ; d/dzbar_j uses conjugate coefficients
    std::vector<cd> za, zb;

    double cell = 1.0;         // prod 2pi/N_d
    double flat_factor = 1.0;  // prod_j 2 Im tau_j (i dz^j ^ dzbar^j = 2 Im tau_j dx dy)

    static std::shared_ptr<const Lattice> make(int n, std::vector<cd> tau, std::vector<int> shape);

    /** Same complex structure and grid. */
    bool same_as(const Lattice& o) const {
        return n == o.n && tau == o.tau && shape == o.shape;
    }

    int dim_size(int d) const { return shape[d]; }
    int freq(int d, int m) const { // integer frequency of mode m; Nyquist maps to -N/2
        const int N = shape[d];
        return m < N / 2 ? m : m - N;
    }
    bool nyquist(int d, int m) const { return 2 * m == shape[d]; }

    /** Lattice coordinate of mode m along real dimension d. */
    double coord(int d, int m) const;

    void decode(std::size_t i, int* digits) const {
        for (int d = 0; d < 2 * n; ++d) {
            digits[d] = static_cast<int>((i / stride[d]) % static_cast<std::size_t>(shape[d]));
        }
    }

    /** Unnormalised forward / inverse-with-1/size DFT over the whole grid. */
    void fft(const cd* in, cd* out) const;
    void ifft(const cd* in, cd* out) const;

    /** 3/2-padded companion grid for dealiased pointwise algebra. */
    std::shared_ptr<const Lattice> padded() const;

    ~Lattice();
    Lattice(const Lattice&) = delete;
    Lattice& operator=(const Lattice&) = delete;

  private:
    Lattice() = default;
    struct Plans;
    mutable std::unique_ptr<Plans> plans_;
    mutable std::shared_ptr<const Lattice> padded_;
    mutable std::weak_ptr<const Lattice> self_;
    void ensure_plans() const;
};

using LatticePtr = std::shared_ptr<const Lattice>;

inline void check_same(const Lattice& a, const Lattice& b) {
    if (!a.same_as(b)) throw GridMismatch();
}

} // namespace kgeo

#endif
