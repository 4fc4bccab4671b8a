#pragma once

#include <ostream>
#include <string>

#include "cwscaler/exact_distribution.hpp"
#include "cwscaler/lumped_kernel.hpp"
#include "cwscaler/path.hpp"

namespace cw {

/// Shortest round-trippable decimal rendering (printf %.17g). All CSV output
/// goes through this so reruns are byte-identical.
std::string format_double(double x);

/// Columns: k, m, eta, prob.
void write_distribution_csv(std::ostream& os, const ExactMagnetizationDistribution& dist,
                            double m0);

/// Columns: k, eta, pUp, pDown, pStay, drift, secondMoment.
void write_kernel_csv(std::ostream& os, const LumpedKernel& kernel);

/// Columns: t, value.
void write_path_csv(std::ostream& os, const PathSample& path);

}  // namespace cw
