#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "irs/ideal.hpp"

namespace irs::test {

inline const std::vector<std::int64_t> kTestDiscriminants = {-4, -3, -7, -8, 5, 8, 13};

/// Random ideal built from prime ideals of norm <= prime_bound with
/// exponents in [0, max_exp], rejecting norms above norm_cap.
class IdealGenerator {
 public:
  IdealGenerator(const FieldSpec& spec, std::uint64_t prime_bound, std::uint64_t seed)
      : spec_(spec), primes_(prime_ideals_up_to(spec, prime_bound)), rng_(seed) {}

  Ideal operator()(unsigned max_factors = 4, unsigned max_exp = 3, std::uint64_t norm_cap = 1'000'000'000'000ULL) {
    while (true) {
      std::vector<Ideal::Factor> f;
      std::uniform_int_distribution<std::size_t> pick(0, primes_.size() - 1);
      std::uniform_int_distribution<unsigned> nfac(0, max_factors);
      std::uniform_int_distribution<unsigned> ex(1, max_exp);
      const unsigned k = nfac(rng_);
      for (unsigned i = 0; i < k; ++i) f.emplace_back(primes_[pick(rng_)], ex(rng_));
      try {
        Ideal a(spec_.discriminant(), f);
        if (a.norm() <= norm_cap) return a;
      } catch (const OverflowError&) {
      }
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  FieldSpec spec_;
  std::vector<PrimeIdeal> primes_;
  std::mt19937_64 rng_;
};

}  // namespace irs::test
