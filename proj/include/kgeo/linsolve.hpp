#ifndef KGEO_LINSOLVE_HPP
#define KGEO_LINSOLVE_HPP

#include <functional>

#include "kgeo/operators.hpp"

namespace kgeo {

using FieldOp = std::function<Field(const Field&)>;

struct SolveOpts {
    double tol = 1e-11;     // relative residual target
    int max_iter = 400;
    bool throw_on_fail = true;
};

struct SolveStats {
    int iterations = 0;
    double residual = 0.0;
    std::vector<double> history;
};

/**
 * Preconditioned conjugate-direction iteration for operators that are
 * symmetric for the unconjugated omega^n bilinear pairing (conjugate-orthogonal
 * CG). `precond` is a spectral multiplier applied in transform space; entries
 * are 1/symbol of the flat comparison operator. `project` restores the
 * constraint subspace (e.g. mean-zero) after every update.
 */
Field cocg_solve(const FieldOp& apply, const Field& rhs, const std::vector<double>& precond,
                 const std::function<void(Field&)>& project, const Kahler& weight,
                 const SolveOpts& opts, SolveStats* stats = nullptr);

/** Spectral multiplier 1/(q(k)^2) of the flat biharmonic of `flat`, zero mode -> 0. */
std::vector<double> flat_biharmonic_precond(const Kahler& flat_like);

/** Multiplier q(k) = flat -Delta symbol (nonnegative). */
std::vector<double> flat_laplace_symbol(const Lattice& lat, const std::vector<cd>& ginv_const);

struct EigenOpts {
    double tol = 1e-8;
    int max_iter = 60;
    SolveOpts inner;
    unsigned long seed = 0x9e3779b97f4a7c15ull;
};

struct EigenReport {
    double lambda_min = 0.0;
    int iterations = 0;
    std::vector<double> residual_history;
    bool converged = false;
};

/**
 * Smallest eigenvalue of a PSD operator on the mean-zero subspace by inverse
 * power iteration; `apply` must be symmetric for the omega pairing.
 */
EigenReport smallest_eigenvalue(const FieldOp& apply, const Kahler& weight,
                                const std::vector<double>& precond,
                                const std::function<void(Field&)>& project, const EigenOpts& opts);

} // namespace kgeo

#endif
