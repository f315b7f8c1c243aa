#ifndef CUCALC_POSET_HPP
#define CUCALC_POSET_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cucalc {

/// A finite partial order on labelled points. The relation is stored as a
/// full boolean matrix and validated (reflexive, antisymmetric, transitive)
/// at construction. Open sets are the upward-closed subsets.
class FinitePoset {
public:
  FinitePoset() = default;

  /// `relations` lists pairs (i, j) meaning point i <= point j; the
  /// reflexive-transitive closure is taken, then antisymmetry is checked.
  FinitePoset(std::vector<std::string> points,
              const std::vector<std::pair<std::size_t, std::size_t>>& relations);

  static FinitePoset antichain(std::size_t n);
  static FinitePoset chain(std::size_t n);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  bool leq(std::size_t p, std::size_t q) const { return leq_[p * size() + q]; }
  std::size_t index_of(const std::string& name) const;

  /// True if the bitmask (bit p set = p in the subset) is upward closed.
  bool is_up_closed(std::uint32_t mask) const;
  /// All upward-closed subsets, as bitmasks, in increasing mask order.
  std::vector<std::uint32_t> up_sets() const;

  /// The induced sub-poset on the points NOT in `mask`, preserving label
  /// names and relative order of points.
  FinitePoset restrict_complement(std::uint32_t mask) const;

  bool is_antichain() const;

private:
  std::vector<std::string> points_;
  std::vector<char> leq_;
};

}  // namespace cucalc

#endif
