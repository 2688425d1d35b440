#pragma once

#include <cstdint>
#include <random>

#include "field.hpp"

namespace comptri {

// Deterministic random source.  mt19937_64 output is pinned by the
// standard; std::uniform_int_distribution is not, so reduction is done
// here by plain rejection-free modulo (bias is irrelevant at desk
// scale, bit-reproducibility is not).
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  uint64_t below(uint64_t n) { return n ? gen_() % n : 0; }

  // Uniform-ish field element; over Q a small integer in [-4, 4].
  Scalar scalar(const Field& f) {
    if (f.is_fp()) return Scalar::of_fp(f.p(), below(f.p()));
    return Scalar::of_int(f, static_cast<long>(below(9)) - 4);
  }

  Scalar nonzero_scalar(const Field& f) {
    for (;;) {
      Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace comptri
