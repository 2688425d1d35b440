#pragma once

#include <array>
#include <cstdint>

#include "compalg.hpp"
#include "rng.hpp"
#include "simgroup.hpp"
#include "triality.hpp"

namespace comptri {

// One session = one quadratic form.  Fixes n = <<a,b,c>>, the Hurwitz
// model H0 = cayley_dickson(a,b,c), its para-Hurwitz S0 (the anchor of
// every MarkedAuto), a reference improper reflection with precomputed
// swapped triality data, and the master seed.  Immutable once built;
// everything downstream is pure.
class Session {
 public:
  static Session create(const Field& field, std::array<Scalar, 3> pfister,
                        uint64_t seed);

  const Field& field() const { return field_; }
  const std::array<Scalar, 3>& pfister() const { return pfister_; }
  const QuadraticForm& form() const { return hurwitz_.form(); }
  const CompositionAlgebra& hurwitz() const { return hurwitz_; }
  const CompositionAlgebra& para() const { return para_; }
  const Matrix8& involution() const { return involution_; }
  const Unitalization& para_unitalization() const { return para_unital_; }
  const Similarity& sigma0() const { return sigma0_; }
  const TrialityPair& sigma0_swap() const { return sigma0_swap_; }
  uint64_t seed() const { return seed_; }

  // Independent deterministic stream per purpose.
  Rng rng(uint64_t stream) const {
    return Rng(seed_ ^ (stream * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL));
  }

 private:
  Session(Field field, std::array<Scalar, 3> pfister, uint64_t seed,
          CompositionAlgebra h0, CompositionAlgebra s0, Matrix8 inv,
          Unitalization pu, Similarity sigma0, TrialityPair swap0)
      : field_(field),
        pfister_(std::move(pfister)),
        seed_(seed),
        hurwitz_(std::move(h0)),
        para_(std::move(s0)),
        involution_(std::move(inv)),
        para_unital_(std::move(pu)),
        sigma0_(std::move(sigma0)),
        sigma0_swap_(std::move(swap0)) {}

  Field field_;
  std::array<Scalar, 3> pfister_;
  uint64_t seed_;
  CompositionAlgebra hurwitz_;
  CompositionAlgebra para_;
  Matrix8 involution_;
  Unitalization para_unital_;
  Similarity sigma0_;
  TrialityPair sigma0_swap_;
};

}  // namespace comptri
