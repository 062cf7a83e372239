#include "nbasis/box_search.hpp"

#include <algorithm>

namespace nbasis {

std::uint64_t small_first_key(std::int64_t v) {
  if (v == 0) return 0;
  return v > 0 ? 2 * static_cast<std::uint64_t>(v) - 1 : 2 * static_cast<std::uint64_t>(-v);
}

std::int64_t small_first_value(std::uint64_t key) {
  if (key == 0) return 0;
  return (key & 1) ? static_cast<std::int64_t>((key + 1) / 2) : -static_cast<std::int64_t>(key / 2);
}

std::int64_t sup_norm(std::span<const std::int64_t> v) {
  std::int64_t m = 0;
  for (std::int64_t x : v) m = std::max(m, x < 0 ? -x : x);
  return m;
}

bool colex_key_less(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = n; i-- > 0;) {
    std::uint64_t ka = i < a.size() ? small_first_key(a[i]) : 0;
    std::uint64_t kb = i < b.size() ? small_first_key(b[i]) : 0;
    if (ka != kb) return ka < kb;
  }
  return false;
}

bool small_first_less(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t na = sup_norm(a), nb = sup_norm(b);
  if (na != nb) return na < nb;
  return colex_key_less(a, b);
}

SmallFirstBox::SmallFirstBox(std::size_t dimension, std::int64_t max_radius, bool include_origin)
    : n_(dimension), max_radius_(max_radius), keys_(dimension, 0), point_(dimension, 0),
      include_origin_(include_origin) {}

// Odometer over keys in [0, 2r], first coordinate fastest, which is colex
// order; points whose largest key is below 2r-1 belong to an inner shell.
bool SmallFirstBox::advance_in_shell() {
  const std::uint64_t top = 2 * static_cast<std::uint64_t>(radius_);
  while (true) {
    std::size_t i = 0;
    while (i < n_ && keys_[i] == top) keys_[i++] = 0;
    if (i == n_) return false;
    ++keys_[i];
    std::uint64_t mx = *std::max_element(keys_.begin(), keys_.end());
    if (mx + 1 >= top) return true;
  }
}

bool SmallFirstBox::next() {
  if (n_ == 0) return false;
  if (!started_) {
    started_ = true;
    if (include_origin_) {
      radius_ = 0;
      std::fill(point_.begin(), point_.end(), 0);
      ++visited_;
      return true;
    }
    radius_ = 0;
  } else if (radius_ > 0 && advance_in_shell()) {
    for (std::size_t i = 0; i < n_; ++i) point_[i] = small_first_value(keys_[i]);
    ++visited_;
    return true;
  }
  // Open the next shell.
  if (radius_ + 1 > max_radius_) return false;
  ++radius_;
  std::fill(keys_.begin(), keys_.end(), 0);
  if (!advance_in_shell()) return false;
  for (std::size_t i = 0; i < n_; ++i) point_[i] = small_first_value(keys_[i]);
  ++visited_;
  return true;
}

std::int64_t avoidance_radius(unsigned total_degree) { return (static_cast<std::int64_t>(total_degree) + 2) / 2; }

BoxWitness box_search_nonvanishing(const IntegerPointMap& p, std::size_t variables, unsigned total_degree) {
  SmallFirstBox box(variables, avoidance_radius(total_degree));
  while (box.next()) {
    if (p(box.point()) != 0) return {box.point(), box.visited()};
  }
  throw IdenticallyZeroSuspect("avoidance box of radius " + std::to_string(avoidance_radius(total_degree)) +
                               " exhausted without a non-root; the map looks identically zero");
}

}  // namespace nbasis
