#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace irs {

/// Deterministic primality test for 64-bit inputs (trial division below 2^20,
/// Miller-Rabin with a fixed witness set above).
bool is_prime(std::uint64_t n);

/// Floor of the square root.
std::uint64_t isqrt(std::uint64_t n);

/// True iff no square of a prime divides |n|. 0 is not squarefree.
bool is_squarefree(std::int64_t n);

/// Prime factorization as (p, e) pairs with p increasing.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Smallest-prime-factor table for 0..n (entries 0 and 1 are 0).
class SpfTable {
 public:
  explicit SpfTable(std::uint32_t n);

  std::uint32_t bound() const { return static_cast<std::uint32_t>(spf_.size() - 1); }
  std::uint32_t spf(std::uint32_t n) const { return spf_[n]; }

  /// Writes the factorization of n into out (cleared first).
  void factor(std::uint32_t n, std::vector<std::pair<std::uint32_t, unsigned>>& out) const;

 private:
  std::vector<std::uint32_t> spf_;
};

/// Primes p <= n, increasing.
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

/// Classical Moebius function mu(1..n); index 0 unused.
std::vector<std::int8_t> mobius_table(std::uint32_t n);

/// Euler phi of a single integer.
std::uint64_t euler_phi(std::uint64_t n);

}  // namespace irs
