// nelder_mead.hpp: derivative-free simplex minimizer for small problems

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace nessfi {

struct NelderMeadOptions {
    double initial_step{0.05};
    double f_tol{1e-9};   // spread of function values over the simplex
    double x_tol{1e-7};   // max vertex distance from the best vertex (inf-norm)
    int max_iterations{5000};
};

struct NelderMeadResult {
    std::vector<double> x;
    double value{0.0};
    int iterations{0};
    bool converged{false};
};

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start,
                             const NelderMeadOptions& options = {});

} // namespace nessfi
