#ifndef NBASIS_BOX_SEARCH_HPP
#define NBASIS_BOX_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nbasis/errors.hpp"
#include "nbasis/rational.hpp"

namespace nbasis {

using IntVector = std::vector<std::int64_t>;

// Small-first order on Z^n.
//
// Points are visited by nondecreasing sup-norm. Inside a shell the order is
// colexicographic (last coordinate most significant) on the per-coordinate
// key 0 < 1 < -1 < 2 < -2 < ..., so low-degree / small-magnitude
// coordinates come first. The same order is used for every enumeration in
// the library (avoidance box, primitive element search, tie-breaks between
// lattice vectors), which makes all outputs deterministic.

/// Position of v in the sequence 0, 1, -1, 2, -2, ...
std::uint64_t small_first_key(std::int64_t v);
std::int64_t small_first_value(std::uint64_t key);
/// Colexicographic comparison of keys, ignoring the sup-norm.
bool colex_key_less(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
/// Full small-first comparison: sup-norm, then colex keys.
bool small_first_less(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
std::int64_t sup_norm(std::span<const std::int64_t> v);

class SmallFirstBox {
 public:
  /// Enumerates Z^n with sup-norm <= max_radius; starts at the origin when
  /// include_origin is set, otherwise at the first point of the unit shell.
  SmallFirstBox(std::size_t dimension, std::int64_t max_radius, bool include_origin = true);

  /// Advances to the next point; false when the box is exhausted.
  bool next();
  const IntVector& point() const noexcept { return point_; }
  std::int64_t radius() const noexcept { return radius_; }
  std::uint64_t visited() const noexcept { return visited_; }

 private:
  bool advance_in_shell();

  std::size_t n_;
  std::int64_t max_radius_;
  std::int64_t radius_ = -1;
  std::vector<std::uint64_t> keys_;
  IntVector point_;
  std::uint64_t visited_ = 0;
  bool started_ = false;
  bool include_origin_;
};

/// An exact polynomial map on integer points.
using IntegerPointMap = std::function<Rational(std::span<const std::int64_t>)>;

/// Raised when the (m+2)/2 box holds no non-root: the map must have been
/// identically zero (or not of total degree <= m).
class IdenticallyZeroSuspect : public Error {
 public:
  using Error::Error;
};

struct BoxWitness {
  IntVector point;
  std::uint64_t points_tried = 0;
};

/// First point of the box |xi| <= (m+2)/2 (small-first order) at which the
/// map does not vanish.
BoxWitness box_search_nonvanishing(const IntegerPointMap& p, std::size_t variables, unsigned total_degree);

/// floor((m + 2) / 2)
std::int64_t avoidance_radius(unsigned total_degree);

}  // namespace nbasis

#endif
