#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bdsk/boolean_set.hpp"

namespace bdsk {

struct Atom {
  std::string id;
  std::size_t index = 0;
};

/// A finite sequence of label indices. Letters are stored in reading order
/// alpha_1 ... alpha_n; the action of the word applies alpha_1 first.
struct Word {
  std::vector<std::size_t> letters;

  Word() = default;
  Word(std::initializer_list<std::size_t> ls) : letters(ls) {}
  explicit Word(std::vector<std::size_t> ls) : letters(std::move(ls)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  std::size_t operator[](std::size_t i) const { return letters[i]; }

  /// alpha_{[1,k]}.
  Word prefix(std::size_t k) const;
  Word power(std::size_t k) const;
  Word reversed() const;
  /// The shortest rho with this == rho^m.
  Word primitive_root() const;
  /// True when this == root^k for some k >= 1.
  bool is_power_of(const Word& root) const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// A finite Boolean dynamical system given by its Stone dual: atoms, labels
/// and one partial map on atoms per label.
///
/// Composition convention: for a word alpha = alpha_1 ... alpha_n the dual
/// map is dual(alpha) = dual(alpha_1) o ... o dual(alpha_n), applied
/// rightmost letter first, so theta_alpha is its preimage map and
/// theta_alpha = theta_{alpha_n} o ... o theta_{alpha_1}. In SWAP2
/// (a: x->y, y->x) theta_a({x}) = {u : dual(a)(u) in {x}} = {y}.
class BdsSpec {
 public:
  using PartialMap = std::vector<std::optional<std::size_t>>;

  /// Throws ValidationError on empty/duplicate ids, wrong map sizes or
  /// out-of-range images.
  BdsSpec(std::vector<std::string> atom_ids, std::vector<std::string> label_ids,
          std::vector<PartialMap> dual_maps);

  std::size_t atom_count() const noexcept { return atoms_.size(); }
  std::size_t label_count() const noexcept { return labels_.size(); }
  const std::string& atom_id(std::size_t i) const { return atoms_.at(i); }
  const std::string& label_id(std::size_t l) const { return labels_.at(l); }
  const std::vector<std::string>& atom_ids() const noexcept { return atoms_; }
  const std::vector<std::string>& label_ids() const noexcept { return labels_; }
  Atom atom(std::size_t i) const { return {atoms_.at(i), i}; }

  std::optional<std::size_t> atom_index(std::string_view id) const;
  std::optional<std::size_t> label_index(std::string_view id) const;

  /// dual(label)(atom), if defined.
  std::optional<std::size_t> image(std::size_t label, std::size_t atom) const {
    return maps_.at(label).at(atom);
  }
  const PartialMap& dual_map(std::size_t label) const { return maps_.at(label); }

  BooleanSet empty_set() const { return BooleanSet(atom_count()); }
  BooleanSet unit() const { return BooleanSet::full(atom_count()); }
  /// Set from atom ids; throws ValidationError on an unknown id.
  BooleanSet set_of(std::initializer_list<std::string_view> ids) const;
  /// Word from label ids; throws ValidationError on an unknown label.
  Word word_of(std::initializer_list<std::string_view> ids) const;
  /// Throws ValidationError if a letter is not a declared label.
  void check_word(const Word& w) const;
  void check_set(const BooleanSet& s) const;

  friend bool operator==(const BdsSpec& a, const BdsSpec& b) {
    return a.atoms_ == b.atoms_ && a.labels_ == b.labels_ && a.maps_ == b.maps_;
  }

 private:
  std::vector<std::string> atoms_;
  std::vector<std::string> labels_;
  std::vector<PartialMap> maps_;
  std::unordered_map<std::string, std::size_t> atom_lookup_;
  std::unordered_map<std::string, std::size_t> label_lookup_;
};

/// Label ids concatenated; separated by '.' when some label id is longer
/// than one character.
std::string format_word(const BdsSpec& spec, const Word& w);
/// "{x,y}" using atom ids.
std::string format_set(const BdsSpec& spec, const BooleanSet& s);

}  // namespace bdsk
