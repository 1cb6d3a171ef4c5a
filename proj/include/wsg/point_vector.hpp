#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace wsg {

// An element of Z^{m+1}. Coordinate 0 belongs to the point at infinity,
// coordinates 1..m to the affine points P_1..P_m.
class PointVector {
 public:
  PointVector() = default;
  explicit PointVector(std::size_t size, std::int64_t fill = 0) : coords_(size, fill) {}
  PointVector(std::initializer_list<std::int64_t> init) : coords_(init) {}
  explicit PointVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  std::int64_t& operator[](std::size_t k) { return coords_[k]; }
  std::int64_t operator[](std::size_t k) const { return coords_[k]; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  auto begin() noexcept { return coords_.begin(); }
  auto end() noexcept { return coords_.end(); }

  std::span<const std::int64_t> coords() const noexcept { return coords_; }

  // Sum of coordinates, i.e. the degree of the associated divisor.
  std::int64_t degree() const;
  bool nonnegative() const noexcept;
  bool is_zero() const noexcept;

  // Componentwise partial order.
  bool dominated_by(const PointVector& other) const;

  friend auto operator<=>(const PointVector&, const PointVector&) = default;
  friend bool operator==(const PointVector&, const PointVector&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const PointVector& v);

// Sorts lexicographically and drops duplicates.
void canonicalize(std::vector<PointVector>& vectors);

}  // namespace wsg
