#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wsg {

// A numerical semigroup given by generators with gcd 1, stored through its
// Apery set with respect to the smallest generator.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_generators(std::span<const std::int64_t> generators);

  const std::vector<std::int64_t>& generators() const noexcept { return generators_; }
  std::int64_t multiplicity() const noexcept { return multiplicity_; }
  // apery()[r] is the smallest element congruent to r modulo multiplicity().
  const std::vector<std::int64_t>& apery() const noexcept { return apery_; }
  std::int64_t frobenius() const noexcept { return frobenius_; }
  const std::vector<std::int64_t>& gaps() const noexcept { return gaps_; }
  std::int64_t genus() const noexcept { return static_cast<std::int64_t>(gaps_.size()); }

  bool contains(std::int64_t x) const noexcept;

 private:
  std::vector<std::int64_t> generators_;
  std::int64_t multiplicity_ = 1;
  std::vector<std::int64_t> apery_;
  std::int64_t frobenius_ = -1;
  std::vector<std::int64_t> gaps_;
};

}  // namespace wsg
