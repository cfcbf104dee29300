#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace grl {

/// Flat index of a (state, time) pair: time * num_states + state.
using Element = std::int32_t;

struct GroundElement {
  int state = 0;
  int time = 0;

  friend auto operator<=>(const GroundElement&, const GroundElement&) = default;
};

/// The time-extended ground set V = S x T.
class GroundSet {
 public:
  GroundSet(int num_states, int horizon) : num_states_(num_states), horizon_(horizon) {
    if (num_states < 1 || horizon < 1) {
      throw std::invalid_argument("GroundSet: num_states and horizon must be >= 1");
    }
  }

  int num_states() const { return num_states_; }
  int horizon() const { return horizon_; }
  int size() const { return num_states_ * horizon_; }

  Element flatten(GroundElement e) const {
    if (e.state < 0 || e.state >= num_states_ || e.time < 0 || e.time >= horizon_) {
      throw std::out_of_range("GroundSet::flatten: element (" + std::to_string(e.state) + ", " +
                              std::to_string(e.time) + ") outside ground set");
    }
    return e.time * num_states_ + e.state;
  }

  GroundElement unflatten(Element v) const {
    if (!contains(v)) throw std::out_of_range("GroundSet::unflatten: index out of range");
    return {state_of(v), time_of(v)};
  }

  bool contains(Element v) const { return v >= 0 && v < size(); }
  int state_of(Element v) const { return v % num_states_; }
  int time_of(Element v) const { return v / num_states_; }

  std::vector<Element> elements() const {
    std::vector<Element> all(static_cast<std::size_t>(size()));
    for (Element v = 0; v < size(); ++v) all[static_cast<std::size_t>(v)] = v;
    return all;
  }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  int num_states_;
  int horizon_;
};

}  // namespace grl
