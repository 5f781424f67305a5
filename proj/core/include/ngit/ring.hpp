#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ngit {

// Names the variables of a polynomial ring over the rationals. Rings are
// value-compared by their name vectors, so two independently constructed
// rings with the same names are interchangeable.
class PolynomialRing {
 public:
  explicit PolynomialRing(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolynomialRing>;

RingPtr make_ring(std::vector<std::string> names);

// Variables stem0, stem1, ..., stem{count-1}.
RingPtr make_ring(const std::string& stem, std::size_t count);

bool same_ring(const RingPtr& a, const RingPtr& b);

// Appends fresh variables on the right. Throws if a name collides.
RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra);

}  // namespace ngit
