#pragma once

#include "grl/core/ground.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

namespace grl {

/// Ordering sigma of V whose first anchor_size positions are exactly the anchor set.
struct Permutation {
  std::vector<Element> order;
  std::size_t anchor_size = 0;

  std::span<const Element> anchor() const { return {order.data(), anchor_size}; }
};

/// Anchor first (in the given order), then every other element in ascending flat index.
inline Permutation anchored_permutation(const GroundSet& ground, std::span<const Element> anchor) {
  std::vector<char> in_anchor(static_cast<std::size_t>(ground.size()), 0);
  Permutation sigma;
  sigma.order.reserve(static_cast<std::size_t>(ground.size()));
  for (Element v : anchor) {
    if (!ground.contains(v)) throw std::invalid_argument("anchored_permutation: element outside V");
    if (in_anchor[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("anchored_permutation: duplicate anchor element");
    }
    in_anchor[static_cast<std::size_t>(v)] = 1;
    sigma.order.push_back(v);
  }
  sigma.anchor_size = anchor.size();
  for (Element v = 0; v < ground.size(); ++v) {
    if (!in_anchor[static_cast<std::size_t>(v)]) sigma.order.push_back(v);
  }
  return sigma;
}

inline bool is_bijection(const GroundSet& ground, const Permutation& sigma) {
  if (sigma.order.size() != static_cast<std::size_t>(ground.size())) return false;
  std::vector<char> seen(sigma.order.size(), 0);
  for (Element v : sigma.order) {
    if (!ground.contains(v) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return sigma.anchor_size <= sigma.order.size();
}

/// sigma is a bijection and {sigma(1..|X|)} = X.
inline bool is_anchored_at(const GroundSet& ground, const Permutation& sigma,
                           std::span<const Element> anchor) {
  if (!is_bijection(ground, sigma) || sigma.anchor_size != anchor.size()) return false;
  std::vector<Element> a(anchor.begin(), anchor.end()), p(sigma.order.begin(),
                                                          sigma.order.begin() + static_cast<std::ptrdiff_t>(sigma.anchor_size));
  std::sort(a.begin(), a.end());
  std::sort(p.begin(), p.end());
  return a == p;
}

}  // namespace grl
