#include "bdsk/boolean_set.hpp"

#include <bit>
#include <string>

#include "bdsk/errors.hpp"

namespace bdsk {

namespace {
constexpr std::size_t kBits = 64;

std::size_t word_count(std::size_t universe) { return (universe + kBits - 1) / kBits; }
}  // namespace

BooleanSet::BooleanSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

BooleanSet::BooleanSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : BooleanSet(universe) {
  for (auto m : members) insert(m);
}

BooleanSet::BooleanSet(std::size_t universe, std::span<const std::size_t> members)
    : BooleanSet(universe) {
  for (auto m : members) insert(m);
}

BooleanSet BooleanSet::full(std::size_t universe) {
  BooleanSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

BooleanSet BooleanSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > kBits) throw PreconditionError("from_mask requires at most 64 atoms");
  BooleanSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  s.trim();
  return s;
}

bool BooleanSet::contains(std::size_t atom) const {
  if (atom >= universe_) return false;
  return (words_[atom / kBits] >> (atom % kBits)) & 1U;
}

void BooleanSet::insert(std::size_t atom) {
  if (atom >= universe_)
    throw UniverseMismatch("atom index " + std::to_string(atom) + " outside universe of size " +
                           std::to_string(universe_));
  words_[atom / kBits] |= std::uint64_t{1} << (atom % kBits);
}

void BooleanSet::erase(std::size_t atom) {
  if (atom >= universe_) return;
  words_[atom / kBits] &= ~(std::uint64_t{1} << (atom % kBits));
}

bool BooleanSet::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

std::size_t BooleanSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> BooleanSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      out.push_back(i * kBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t BooleanSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return i * kBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
  throw PreconditionError("first() of an empty set");
}

std::uint64_t BooleanSet::mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

bool BooleanSet::subset_of(const BooleanSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool BooleanSet::intersects(const BooleanSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

BooleanSet BooleanSet::complement() const { return full(universe_) - *this; }

BooleanSet& BooleanSet::operator|=(const BooleanSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BooleanSet& BooleanSet::operator&=(const BooleanSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BooleanSet& BooleanSet::operator-=(const BooleanSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const BooleanSet& a, const BooleanSet& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  if (auto c = a.count() <=> b.count(); c != 0) return c;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::size_t BooleanSet::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ universe_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

void BooleanSet::check_same_universe(const BooleanSet& other) const {
  if (universe_ != other.universe_)
    throw UniverseMismatch("sets over universes of size " + std::to_string(universe_) + " and " +
                           std::to_string(other.universe_));
}

void BooleanSet::trim() noexcept {
  if (words_.empty()) return;
  const auto rem = universe_ % kBits;
  if (rem != 0) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

}  // namespace bdsk
