#include "dist_cache.hpp"

#include <bit>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <vector>

namespace cw::cli {

namespace {

constexpr char kMagic[8] = {'C', 'W', 'D', 'I', 'S', 'T', '0', '1'};

std::filesystem::path cache_path(const char* dir, const ModelParams& params) {
  char name[96];
  std::snprintf(name, sizeof(name), "cwdist_%016llx_%016llx_%lld.bin",
                static_cast<unsigned long long>(std::bit_cast<std::uint64_t>(params.beta)),
                static_cast<unsigned long long>(std::bit_cast<std::uint64_t>(params.h)),
                static_cast<long long>(params.n));
  return std::filesystem::path(dir) / name;
}

bool load(const std::filesystem::path& file, const ModelParams& params,
          ExactMagnetizationDistribution& out) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return false;
  char magic[8];
  double beta = 0.0, h = 0.0;
  std::int64_t n = 0;
  in.read(magic, sizeof(magic));
  in.read(reinterpret_cast<char*>(&beta), sizeof(beta));
  in.read(reinterpret_cast<char*>(&h), sizeof(h));
  in.read(reinterpret_cast<char*>(&n), sizeof(n));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0 ||
      std::bit_cast<std::uint64_t>(beta) != std::bit_cast<std::uint64_t>(params.beta) ||
      std::bit_cast<std::uint64_t>(h) != std::bit_cast<std::uint64_t>(params.h) ||
      n != params.n) {
    return false;
  }
  out.params = params;
  out.logWeights.resize(static_cast<std::size_t>(n + 1));
  out.probs.resize(static_cast<std::size_t>(n + 1));
  in.read(reinterpret_cast<char*>(&out.logZ), sizeof(out.logZ));
  in.read(reinterpret_cast<char*>(out.logWeights.data()),
          static_cast<std::streamsize>(out.logWeights.size() * sizeof(double)));
  in.read(reinterpret_cast<char*>(out.probs.data()),
          static_cast<std::streamsize>(out.probs.size() * sizeof(double)));
  return static_cast<bool>(in);
}

void store(const std::filesystem::path& file, const ExactMagnetizationDistribution& dist) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;  // cache is best effort
    out.write(kMagic, sizeof(kMagic));
    out.write(reinterpret_cast<const char*>(&dist.params.beta), sizeof(double));
    out.write(reinterpret_cast<const char*>(&dist.params.h), sizeof(double));
    out.write(reinterpret_cast<const char*>(&dist.params.n), sizeof(std::int64_t));
    out.write(reinterpret_cast<const char*>(&dist.logZ), sizeof(double));
    out.write(reinterpret_cast<const char*>(dist.logWeights.data()),
              static_cast<std::streamsize>(dist.logWeights.size() * sizeof(double)));
    out.write(reinterpret_cast<const char*>(dist.probs.data()),
              static_cast<std::streamsize>(dist.probs.size() * sizeof(double)));
    if (!out) return;
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

ExactMagnetizationDistribution cached_exact_distribution(const ModelParams& params) {
  const char* dir = std::getenv("CW_SCALER_CACHE");
  if (dir == nullptr || *dir == '\0') return exact_distribution(params);
  const auto file = cache_path(dir, params);
  ExactMagnetizationDistribution dist;
  if (load(file, params, dist)) return dist;
  dist = exact_distribution(params);
  store(file, dist);
  return dist;
}

}  // namespace cw::cli
