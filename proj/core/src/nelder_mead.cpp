#include "nessfi/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nessfi {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, const NelderMeadOptions& options) {
    const std::size_t n = start.size();
    std::vector<std::vector<double>> simplex(n + 1, start);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.initial_step;
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);

    std::vector<std::size_t> order(n + 1);
    auto blend = [n](const std::vector<double>& a, const std::vector<double>& b, double t) {
        std::vector<double> out(n);
        for (std::size_t k = 0; k < n; ++k) out[k] = a[k] + t * (b[k] - a[k]);
        return out;
    };

    NelderMeadResult result;
    int it = 0;
    for (; it < options.max_iterations; ++it) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[n - 1];

        double x_spread = 0.0;
        double f_spread = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            f_spread = std::max(f_spread, std::abs(values[i] - values[best]));
            for (std::size_t k = 0; k < n; ++k) {
                x_spread = std::max(x_spread, std::abs(simplex[i][k] - simplex[best][k]));
            }
        }
        if (f_spread <= options.f_tol && x_spread <= options.x_tol) {
            result.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / double(n);
        }

        const auto reflected = blend(centroid, simplex[worst], -1.0);
        const double f_r = f(reflected);
        if (f_r < values[best]) {
            const auto expanded = blend(centroid, simplex[worst], -2.0);
            const double f_e = f(expanded);
            if (f_e < f_r) {
                simplex[worst] = expanded;
                values[worst] = f_e;
            } else {
                simplex[worst] = reflected;
                values[worst] = f_r;
            }
            continue;
        }
        if (f_r < values[second]) {
            simplex[worst] = reflected;
            values[worst] = f_r;
            continue;
        }
        const bool outside = f_r < values[worst];
        const auto contracted =
            outside ? blend(centroid, reflected, 0.5) : blend(centroid, simplex[worst], 0.5);
        const double f_c = f(contracted);
        if (f_c < (outside ? f_r : values[worst])) {
            simplex[worst] = contracted;
            values[worst] = f_c;
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            simplex[i] = blend(simplex[best], simplex[i], 0.5);
            values[i] = f(simplex[i]);
        }
    }

    const auto best_it = std::min_element(values.begin(), values.end());
    const auto best_index = static_cast<std::size_t>(best_it - values.begin());
    result.x = simplex[best_index];
    result.value = *best_it;
    result.iterations = it;
    return result;
}

} // namespace nessfi
