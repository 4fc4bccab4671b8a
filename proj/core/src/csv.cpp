#include "cwscaler/csv.hpp"

#include <cstdio>

namespace cw {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_distribution_csv(std::ostream& os, const ExactMagnetizationDistribution& dist,
                            double m0) {
  os << "k,m,eta,prob\n";
  for (std::int64_t k = 0; k <= dist.params.n; ++k) {
    os << k << ',' << format_double(dist.m_of(k)) << ',' << format_double(dist.eta_of(k, m0))
       << ',' << format_double(dist.probs[static_cast<std::size_t>(k)]) << '\n';
  }
}

void write_kernel_csv(std::ostream& os, const LumpedKernel& kernel) {
  os << "k,eta,pUp,pDown,pStay,drift,secondMoment\n";
  for (std::int64_t k = 0; k <= kernel.n(); ++k) {
    const LocalMoments lm = local_moments(kernel, k);
    os << k << ',' << format_double(lm.eta) << ','
       << format_double(kernel.pUp[static_cast<std::size_t>(k)]) << ','
       << format_double(kernel.pDown[static_cast<std::size_t>(k)]) << ','
       << format_double(kernel.pStay[static_cast<std::size_t>(k)]) << ','
       << format_double(lm.drift) << ',' << format_double(lm.secondMoment) << '\n';
  }
}

void write_path_csv(std::ostream& os, const PathSample& path) {
  os << "t,value\n";
  for (std::size_t i = 0; i < path.times.size(); ++i) {
    os << format_double(path.times[i]) << ',' << format_double(path.values[i]) << '\n';
  }
}

}  // namespace cw
