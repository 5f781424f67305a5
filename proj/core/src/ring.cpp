#include "ngit/ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ngit {

PolynomialRing::PolynomialRing(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("PolynomialRing: empty variable name");
    if (!seen.insert(n).second)
      throw std::invalid_argument("PolynomialRing: duplicate variable '" + n + "'");
  }
}

std::optional<std::size_t> PolynomialRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<PolynomialRing>(std::move(names));
}

RingPtr make_ring(const std::string& stem, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(stem + std::to_string(i));
  return make_ring(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->names() == b->names();
}

RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra) {
  std::vector<std::string> names = base->names();
  names.insert(names.end(), extra.begin(), extra.end());
  return make_ring(std::move(names));
}

}  // namespace ngit
