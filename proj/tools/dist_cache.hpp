#pragma once

#include "cwscaler/exact_distribution.hpp"

namespace cw::cli {

/// exact_distribution with an optional on-disk memo. When the environment
/// variable CW_SCALER_CACHE names a directory, distributions are stored there
/// keyed by the exact bit patterns of (beta, h) and by n, and later runs load
/// the stored bytes instead of recomputing, keeping outputs byte-identical
/// across cached and fresh runs.
ExactMagnetizationDistribution cached_exact_distribution(const ModelParams& params);

}  // namespace cw::cli
