#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace bdsk {

/// An element of the finite Boolean algebra 2^atoms: a subset of atom
/// indices over a fixed universe size. Value type; all binary operations
/// throw UniverseMismatch when the universes differ.
class BooleanSet {
 public:
  BooleanSet() = default;
  explicit BooleanSet(std::size_t universe);
  BooleanSet(std::size_t universe, std::initializer_list<std::size_t> members);
  BooleanSet(std::size_t universe, std::span<const std::size_t> members);

  static BooleanSet full(std::size_t universe);
  /// Bit i of `mask` selects atom i. Requires universe <= 64.
  static BooleanSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(std::size_t atom) const;
  void insert(std::size_t atom);
  void erase(std::size_t atom);

  bool empty() const noexcept;
  std::size_t count() const noexcept;
  /// Members in increasing index order.
  std::vector<std::size_t> members() const;
  /// Smallest member; the set must be nonempty.
  std::size_t first() const;
  /// Low 64 atoms as a bitmask.
  std::uint64_t mask() const noexcept;

  bool subset_of(const BooleanSet& other) const;
  bool intersects(const BooleanSet& other) const;
  BooleanSet complement() const;

  BooleanSet& operator|=(const BooleanSet& other);
  BooleanSet& operator&=(const BooleanSet& other);
  BooleanSet& operator-=(const BooleanSet& other);

  friend BooleanSet operator|(BooleanSet a, const BooleanSet& b) { return a |= b; }
  friend BooleanSet operator&(BooleanSet a, const BooleanSet& b) { return a &= b; }
  friend BooleanSet operator-(BooleanSet a, const BooleanSet& b) { return a -= b; }

  friend bool operator==(const BooleanSet&, const BooleanSet&) = default;
  /// Canonical order: universe, then cardinality, then members
  /// lexicographically.
  friend std::strong_ordering operator<=>(const BooleanSet& a, const BooleanSet& b);

  std::size_t hash() const noexcept;

 private:
  void check_same_universe(const BooleanSet& other) const;
  void trim() noexcept;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BooleanSetHash {
  std::size_t operator()(const BooleanSet& s) const noexcept { return s.hash(); }
};

}  // namespace bdsk
