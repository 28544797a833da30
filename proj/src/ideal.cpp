#include "irs/ideal.hpp"

#include <algorithm>

#include "irs/arith.hpp"
#include "irs/errors.hpp"
#include "irs/int128.hpp"

namespace irs {

namespace {

std::uint64_t norm_of(std::span<const Ideal::Factor> factors) {
  std::uint64_t n = 1;
  for (const auto& [p, e] : factors) {
    for (unsigned i = 0; i < e; ++i) n = checked_mul(n, p.norm, "ideal norm");
  }
  return n;
}

}  // namespace

PrimeIdeal PrimeIdeal::make(std::uint64_t p, SplitKind kind, std::uint8_t conjugate_index) {
  if (conjugate_index > 1 || (kind != SplitKind::Split && conjugate_index != 0)) {
    throw DomainError("conjugate_index must be 0 unless the prime splits");
  }
  const std::uint64_t norm = kind == SplitKind::Inert ? checked_mul(p, p, "prime ideal norm") : p;
  return PrimeIdeal{p, kind, conjugate_index, norm};
}

Ideal::Ideal(const FieldSpec& spec) : disc_(spec.discriminant()), norm_(1) {}

Ideal::Ideal(std::int64_t discriminant, std::vector<Factor> factors) : disc_(discriminant), norm_(1) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& f : factors) {
    if (f.second == 0) continue;
    if (!factors_.empty() && factors_.back().first == f.first) {
      factors_.back().second += f.second;
    } else {
      factors_.push_back(f);
    }
  }
  norm_ = norm_of(factors_);
}

Ideal Ideal::prime_power(const FieldSpec& spec, const PrimeIdeal& p, unsigned e) {
  return Ideal(spec.discriminant(), {{p, e}});
}

unsigned Ideal::exponent(const PrimeIdeal& p) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                             [](const Factor& f, const PrimeIdeal& q) { return f.first < q; });
  return (it != factors_.end() && it->first == p) ? it->second : 0;
}

Ideal Ideal::operator*(const Ideal& other) const {
  require_same_field(*this, other);
  std::vector<Factor> merged;
  merged.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return Ideal(disc_, std::move(merged), checked_mul(norm_, other.norm_, "ideal norm"));
}

Ideal Ideal::quotient(const Ideal& d) const {
  require_same_field(*this, d);
  std::vector<Factor> out;
  std::size_t j = 0;
  for (const auto& [p, e] : factors_) {
    unsigned de = 0;
    if (j < d.factors_.size() && d.factors_[j].first == p) de = d.factors_[j++].second;
    if (de > e) throw DomainError("quotient: divisor does not divide");
    if (e > de) out.emplace_back(p, e - de);
  }
  if (j != d.factors_.size()) throw DomainError("quotient: divisor does not divide");
  return Ideal(disc_, std::move(out), norm_ / d.norm_);
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (a.disc_ != b.disc_ || a.factors_.size() != b.factors_.size()) return false;
  for (std::size_t i = 0; i < a.factors_.size(); ++i) {
    if (!(a.factors_[i].first == b.factors_[i].first) || a.factors_[i].second != b.factors_[i].second) return false;
  }
  return true;
}

bool operator<(const Ideal& a, const Ideal& b) {
  if (a.norm_ != b.norm_) return a.norm_ < b.norm_;
  const std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& fa = a.factors_[i];
    const auto& fb = b.factors_[i];
    if (fa.first < fb.first) return true;
    if (fb.first < fa.first) return false;
    if (fa.second != fb.second) return fa.second < fb.second;
  }
  return a.factors_.size() < b.factors_.size();
}

std::string Ideal::to_string() const {
  if (factors_.empty()) return "(1)";
  std::string s;
  for (const auto& [p, e] : factors_) {
    if (!s.empty()) s += '*';
    s += 'P';
    s += std::to_string(p.p);
    if (p.kind == SplitKind::Inert) s += 'i';
    if (p.conjugate_index == 1) s += '\'';
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

void require_same_field(const Ideal& a, const Ideal& b) {
  if (a.discriminant() != b.discriminant()) {
    throw FieldMismatch("ideals from fields with discriminants " + std::to_string(a.discriminant()) + " and " +
                        std::to_string(b.discriminant()));
  }
}

std::vector<PrimeIdeal> prime_ideals_up_to(const FieldSpec& spec, std::uint64_t bound) {
  if (bound > UINT32_MAX) throw GuardError("prime_ideals_up_to: bound too large");
  std::vector<PrimeIdeal> out;
  for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(bound))) {
    const SplitKind kind = splitting_type(spec, p);
    if (kind == SplitKind::Split) {
      out.push_back(PrimeIdeal::make(p, kind, 0));
      out.push_back(PrimeIdeal::make(p, kind, 1));
    } else if (kind == SplitKind::Ramified || static_cast<std::uint64_t>(p) * p <= bound) {
      out.push_back(PrimeIdeal::make(p, kind));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const PrimeIdeal& a, const PrimeIdeal& b) { return a.norm < b.norm; });
  return out;
}

namespace {

void enumerate_from(std::int64_t disc, std::span<const PrimeIdeal> primes, std::size_t start, std::uint64_t norm,
                    std::uint64_t bound, std::vector<Ideal::Factor>& stack,
                    const std::function<void(const Ideal&)>& visit) {
  for (std::size_t i = start; i < primes.size(); ++i) {
    const std::uint64_t q = primes[i].norm;
    if (q > bound / norm) break;  // sorted by norm
    std::uint64_t n = norm;
    stack.emplace_back(primes[i], 0);
    while (q <= bound / n) {
      n *= q;
      ++stack.back().second;
      visit(Ideal(disc, stack));
      enumerate_from(disc, primes, i + 1, n, bound, stack, visit);
    }
    stack.pop_back();
  }
}

}  // namespace

void for_each_ideal(const FieldSpec& spec, std::uint64_t bound, const std::function<void(const Ideal&)>& visit) {
  if (bound < 1) throw DomainError("enumerate_ideals: bound must be >= 1");
  const auto primes = prime_ideals_up_to(spec, bound);
  visit(Ideal(spec));
  std::vector<Ideal::Factor> stack;
  enumerate_from(spec.discriminant(), primes, 0, 1, bound, stack, visit);
}

std::vector<Ideal> enumerate_ideals(const FieldSpec& spec, std::uint64_t bound) {
  std::vector<Ideal> out;
  for_each_ideal(spec, bound, [&out](const Ideal& a) { out.push_back(a); });
  return out;
}

std::vector<Ideal> ideals_of_norm(const FieldSpec& spec, std::uint64_t n) {
  if (n < 1) throw DomainError("ideals_of_norm: n must be >= 1");
  std::vector<Ideal> out{Ideal(spec)};
  for (const auto& [p, e] : factorize(n)) {
    std::vector<Ideal> local;
    switch (splitting_type(spec, p)) {
      case SplitKind::Split: {
        const auto p0 = PrimeIdeal::make(p, SplitKind::Split, 0);
        const auto p1 = PrimeIdeal::make(p, SplitKind::Split, 1);
        for (unsigned a = 0; a <= e; ++a) local.emplace_back(spec.discriminant(), std::vector<Ideal::Factor>{{p0, a}, {p1, e - a}});
        break;
      }
      case SplitKind::Inert:
        if (e % 2 != 0) return {};
        local.push_back(Ideal::prime_power(spec, PrimeIdeal::make(p, SplitKind::Inert), e / 2));
        break;
      case SplitKind::Ramified:
        local.push_back(Ideal::prime_power(spec, PrimeIdeal::make(p, SplitKind::Ramified), e));
        break;
    }
    std::vector<Ideal> next;
    next.reserve(out.size() * local.size());
    for (const auto& a : out) {
      for (const auto& b : local) next.push_back(a * b);
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(const Ideal& a) {
  for (const auto& f : a.factors()) {
    if (f.second >= 2) return 0;
  }
  return a.factors().size() % 2 == 0 ? 1 : -1;
}

bool divides(const Ideal& d, const Ideal& a) {
  require_same_field(d, a);
  for (const auto& [p, e] : d.factors()) {
    if (a.exponent(p) < e) return false;
  }
  return true;
}

std::vector<Ideal> divisors(const Ideal& a) {
  std::vector<std::vector<Ideal::Factor>> lists{{}};
  for (const auto& [p, e] : a.factors()) {
    std::vector<std::vector<Ideal::Factor>> next;
    next.reserve(lists.size() * (e + 1));
    for (const auto& l : lists) {
      for (unsigned i = 0; i <= e; ++i) {
        next.push_back(l);
        if (i > 0) next.back().emplace_back(p, i);
      }
    }
    lists = std::move(next);
  }
  std::vector<Ideal> out;
  out.reserve(lists.size());
  for (auto& l : lists) out.emplace_back(a.discriminant(), std::move(l));
  return out;
}

Ideal gcd(const Ideal& a, const Ideal& b) {
  require_same_field(a, b);
  std::vector<Ideal::Factor> common;
  for (const auto& [p, e] : a.factors()) {
    const unsigned f = b.exponent(p);
    if (f > 0) common.emplace_back(p, std::min(e, f));
  }
  return Ideal(a.discriminant(), std::move(common));
}

Rational sigma_theta(const Ideal& a, int theta) {
  Rational sum = 0;
  for (const auto& d : divisors(a)) sum += rational_pow(d.norm(), theta);
  return sum;
}

}  // namespace irs
