// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "credal/errors.hpp"
#include "credal/grid.hpp"

namespace credal {

/// A hypothesis is a subset of grid point indices, stored as a bitmask over
/// a fixed universe size. The empty set and the full set are valid.
class hypothesis {
public:
  hypothesis() = default;

  explicit hypothesis(std::size_t universe)
      : universe_(universe), bits_((universe + 63) / 64, 0) {}

  static hypothesis empty_set(std::size_t universe) { return hypothesis(universe); }

  static hypothesis full_set(std::size_t universe) {
    hypothesis h(universe);
    for (std::size_t i = 0; i < universe; ++i) h.add(i);
    return h;
  }

  static hypothesis of(std::size_t universe, std::initializer_list<std::size_t> members) {
    hypothesis h(universe);
    for (std::size_t i : members) h.add(i);
    return h;
  }

  static hypothesis of(std::size_t universe, const std::vector<std::size_t>& members) {
    hypothesis h(universe);
    for (std::size_t i : members) h.add(i);
    return h;
  }

  /// Build from a packed bitmask; only valid for universes of at most 64.
  static hypothesis from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64)
      throw evaluation_error("bitmask construction requires universe <= 64");
    hypothesis h(universe);
    if (universe > 0) h.bits_[0] = mask & h.high_mask();
    return h;
  }

  std::size_t universe() const { return universe_; }

  bool contains(std::size_t i) const {
    check_index(i);
    return (bits_[i / 64] >> (i % 64)) & 1u;
  }

  void add(std::size_t i) {
    check_index(i);
    bits_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  void remove(std::size_t i) {
    check_index(i);
    bits_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (std::uint64_t w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool is_empty() const {
    for (std::uint64_t w : bits_)
      if (w != 0) return false;
    return true;
  }

  bool is_full() const { return count() == universe_; }

  bool subset_of(const hypothesis& other) const {
    check_universe(other);
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k] & ~other.bits_[k]) return false;
    return true;
  }

  bool disjoint_from(const hypothesis& other) const {
    check_universe(other);
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k] & other.bits_[k]) return false;
    return true;
  }

  hypothesis complement() const {
    hypothesis out(universe_);
    for (std::size_t k = 0; k < bits_.size(); ++k) out.bits_[k] = ~bits_[k];
    out.trim();
    return out;
  }

  friend hypothesis operator|(const hypothesis& a, const hypothesis& b) {
    a.check_universe(b);
    hypothesis out(a.universe_);
    for (std::size_t k = 0; k < out.bits_.size(); ++k)
      out.bits_[k] = a.bits_[k] | b.bits_[k];
    return out;
  }

  friend hypothesis operator&(const hypothesis& a, const hypothesis& b) {
    a.check_universe(b);
    hypothesis out(a.universe_);
    for (std::size_t k = 0; k < out.bits_.size(); ++k)
      out.bits_[k] = a.bits_[k] & b.bits_[k];
    return out;
  }

  bool operator==(const hypothesis&) const = default;

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t i = 0; i < universe_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  /// Packed mask for universes of at most 64 points.
  std::uint64_t mask() const {
    if (universe_ > 64)
      throw evaluation_error("bitmask extraction requires universe <= 64");
    return bits_.empty() ? 0 : bits_[0];
  }

  std::string to_string(const parameter_grid& grid) const {
    std::string s = "{";
    bool first = true;
    for (std::size_t i : members()) {
      if (!first) s += ",";
      s += grid.point(i).id;
      first = false;
    }
    s += "}";
    return s;
  }

private:
  std::uint64_t high_mask() const {
    const std::size_t r = universe_ % 64;
    return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
  }

  void trim() {
    if (!bits_.empty()) bits_.back() &= high_mask();
  }

  void check_index(std::size_t i) const {
    if (i >= universe_)
      throw evaluation_error("grid point index " + std::to_string(i) +
                             " out of range for universe of size " +
                             std::to_string(universe_));
  }

  void check_universe(const hypothesis& other) const {
    if (universe_ != other.universe_)
      throw evaluation_error("hypotheses live on different grids");
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> bits_;
};

} // namespace credal
