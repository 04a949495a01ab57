/* Copyright 2026 The pqclab Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace pqclab {

/// Deterministic, splittable random stream. The generator state is a pure
/// function of (seed, path), so identical (seed, path) pairs reproduce
/// identical draws and child streams are independent of how much the parent
/// has been consumed.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  /// Derives an independent child stream; the child's path is this stream's
  /// path with `index` appended.
  RngStream child(std::uint64_t index) const;

  std::uint64_t next_u64();
  double uniform();                           // [0, 1)
  double uniform(double lo, double hi);       // [lo, hi)
  double normal();                            // N(0, 1)
  std::complex<double> complex_normal();      // CN(0, 1): re, im ~ N(0, 1/2)

  std::uint64_t seed() const { return seed_; }
  const std::vector<std::uint64_t>& path() const { return path_; }

 private:
  RngStream(std::uint64_t seed, std::vector<std::uint64_t> path);

  std::uint64_t seed_;
  std::vector<std::uint64_t> path_;
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Stable 64-bit mix used for deriving per-task seeds from coordinates.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace pqclab
