#pragma once

#include <cstdint>
#include <random>

namespace hhd {

/// Standard-normal sampler on top of mt19937_64 via Box-Muller. Both pieces
/// are fully specified, so streams are identical across platforms.
class NormalGenerator {
 public:
  explicit NormalGenerator(std::uint64_t seed) : engine_(seed) {}

  double operator()();

 private:
  double uniform_open();

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace hhd
