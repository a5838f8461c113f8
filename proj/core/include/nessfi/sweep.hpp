// sweep.hpp: evaluation of observables over parameter grids

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nessfi/config.hpp"
#include "nessfi/liouvillian.hpp"
#include "nessfi/metrology.hpp"
#include "nessfi/model.hpp"
#include "nessfi/observables.hpp"
#include "nessfi/thermo.hpp"

namespace nessfi {

// Point flags (emitted as a ';'-joined list):
//   epr_unvalidated     outside the regime where the semi-classical EPR is known
//                       to be non-negative
//   epr_negative        EPR below -1e-10
//   qfi_step_sensitive  QFI at h and h/2 differ by more than 1e-3 relative
//   large_g             gamma / delta > 0.2
//   discord_exceeds_qmi C > I beyond 1e-9 (should not happen)
struct ObservableRow {
    std::size_t index{0};
    std::vector<double> axis_values;
    SystemParams params;
    BathParams baths;

    bool ok{false};
    std::string error;
    std::vector<std::string> flags;

    double residual{0.0};
    DensityMatrix rho{DensityMatrix::Zero()};

    std::optional<QfiReport> qfi;
    std::optional<CorrelationReport> correlations;  // discord fields NaN unless selected
    std::optional<ThermoReport> thermo;
};

struct SweepTable {
    std::vector<std::string> axis_names;
    std::vector<ObservableRow> rows;
};

// Evaluates one parameter point. Errors are caught and stored in the row.
ObservableRow evaluate_point(const SystemParams& params, const BathParams& baths,
                             const SweepSpec& options);

// Runs the grid (row-major, last axis fastest) on spec.threads workers. The
// result does not depend on the thread count. Throws ValidationError for an
// invalid spec before evaluating anything.
SweepTable run_sweep(const SweepSpec& spec);

} // namespace nessfi
