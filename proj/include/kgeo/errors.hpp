#ifndef KGEO_ERRORS_HPP
#define KGEO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kgeo {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/** Pointwise positivity failure of a Hermitian metric. */
struct NonPositive : Error {
    std::size_t point;
    double eigenvalue;
    NonPositive(std::size_t point_, double eig)
        : Error("metric not positive at grid point " + std::to_string(point_) +
                ", smallest eigenvalue " + std::to_string(eig)),
          point(point_), eigenvalue(eig) {}
};

struct GridMismatch : Error {
    GridMismatch() : Error("operands live on different lattices") {}
    explicit GridMismatch(const std::string& what) : Error("grid mismatch: " + what) {}
};

struct IterativeSolveFailure : Error {
    std::vector<double> residual_history;
    IterativeSolveFailure(const std::string& what, std::vector<double> hist)
        : Error("iterative solve failed: " + what), residual_history(std::move(hist)) {}
};

struct MaxIterations : Error {
    std::vector<double> residual_history;
    MaxIterations(const std::string& what, std::vector<double> hist)
        : Error("iteration cap reached: " + what), residual_history(std::move(hist)) {}
};

struct ExtrapolationDivergence : Error {
    explicit ExtrapolationDivergence(const std::string& what)
        : Error("extrapolation divergence: " + what) {}
};

struct ConfigError : Error {
    int line;
    std::string key;
    ConfigError(int line_, std::string key_, const std::string& what)
        : Error("config error (line " + std::to_string(line_) + ", key '" + key_ + "'): " + what),
          line(line_), key(std::move(key_)) {}
};

} // namespace kgeo

#endif
