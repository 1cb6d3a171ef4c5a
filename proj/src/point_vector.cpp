#include "wsg/point_vector.hpp"

#include <algorithm>

#include "wsg/checked.hpp"
#include "wsg/error.hpp"

namespace wsg {

std::int64_t PointVector::degree() const {
  std::int64_t total = 0;
  for (auto c : coords_) total = checked::add(total, c);
  return total;
}

bool PointVector::nonnegative() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c >= 0; });
}

bool PointVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

bool PointVector::dominated_by(const PointVector& other) const {
  if (other.size() != size()) throw Error(ErrorCode::LengthMismatch, "comparing vectors of different length");
  for (std::size_t k = 0; k < size(); ++k)
    if (coords_[k] > other.coords_[k]) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const PointVector& v) {
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) os << ',';
    os << v[k];
  }
  return os << ')';
}

void canonicalize(std::vector<PointVector>& vectors) {
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
}

}  // namespace wsg
