#include "cucalc/poset.hpp"

#include <stdexcept>

namespace cucalc {

FinitePoset::FinitePoset(std::vector<std::string> points,
                         const std::vector<std::pair<std::size_t, std::size_t>>& relations)
    : points_(std::move(points)) {
  std::size_t n = points_.size();
  if (n == 0) throw std::invalid_argument("poset: needs at least one point");
  if (n > 30) throw std::invalid_argument("poset: too many points");
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points_[i] == points_[j])
        throw std::invalid_argument("poset: duplicate point '" + points_[i] + "'");
  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
  for (auto [a, b] : relations) {
    if (a >= n || b >= n) throw std::invalid_argument("poset: relation index out of range");
    leq_[a * n + b] = 1;
  }
  // transitive closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq_[i * n + j] && leq_[j * n + i])
        throw std::invalid_argument("poset: relation not antisymmetric ('" + points_[i] +
                                    "' and '" + points_[j] + "')");
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(std::string(1, char('a' + i)));
  return FinitePoset(pts, {});
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::string> pts;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(std::string(1, char('a' + i)));
  for (std::size_t i = 0; i + 1 < n; ++i) rel.push_back({i, i + 1});
  return FinitePoset(pts, rel);
}

std::size_t FinitePoset::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == name) return i;
  throw std::invalid_argument("poset: no point named '" + name + "'");
}

bool FinitePoset::is_up_closed(std::uint32_t mask) const {
  std::size_t n = size();
  for (std::size_t p = 0; p < n; ++p) {
    if (!(mask >> p & 1)) continue;
    for (std::size_t q = 0; q < n; ++q)
      if (leq(p, q) && !(mask >> q & 1)) return false;
  }
  return true;
}

std::vector<std::uint32_t> FinitePoset::up_sets() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << size()); ++m)
    if (is_up_closed(m)) out.push_back(m);
  return out;
}

FinitePoset FinitePoset::restrict_complement(std::uint32_t mask) const {
  std::vector<std::string> pts;
  std::vector<std::size_t> keep;
  for (std::size_t p = 0; p < size(); ++p)
    if (!(mask >> p & 1)) {
      keep.push_back(p);
      pts.push_back(points_[p]);
    }
  if (pts.empty()) throw std::invalid_argument("poset: empty restriction");
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (i != j && leq(keep[i], keep[j])) rel.push_back({i, j});
  return FinitePoset(pts, rel);
}

bool FinitePoset::is_antichain() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (i != j && leq(i, j)) return false;
  return true;
}

}  // namespace cucalc
