#include "bdsk/system.hpp"

#include <algorithm>

#include "bdsk/errors.hpp"

namespace bdsk {

Word Word::prefix(std::size_t k) const {
  if (k > letters.size()) throw PreconditionError("prefix longer than word");
  return Word(std::vector<std::size_t>(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k)));
}

Word Word::power(std::size_t k) const {
  Word out;
  out.letters.reserve(letters.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.letters.insert(out.letters.end(), letters.begin(), letters.end());
  return out;
}

Word Word::reversed() const { return Word(std::vector<std::size_t>(letters.rbegin(), letters.rend())); }

Word Word::primitive_root() const {
  const auto n = letters.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = letters[i] == letters[i - p];
    if (periodic) return prefix(p);
  }
  return *this;
}

bool Word::is_power_of(const Word& root) const {
  if (root.empty() || letters.empty() || letters.size() % root.size() != 0) return false;
  for (std::size_t i = 0; i < letters.size(); ++i)
    if (letters[i] != root.letters[i % root.size()]) return false;
  return true;
}

Word operator+(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BdsSpec::BdsSpec(std::vector<std::string> atom_ids, std::vector<std::string> label_ids,
                 std::vector<PartialMap> dual_maps)
    : atoms_(std::move(atom_ids)), labels_(std::move(label_ids)), maps_(std::move(dual_maps)) {
  if (atoms_.empty()) throw ValidationError("a system needs at least one atom");
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].empty()) throw ValidationError("empty atom id");
    if (!atom_lookup_.emplace(atoms_[i], i).second)
      throw ValidationError("duplicate atom id '" + atoms_[i] + "'");
  }
  for (std::size_t l = 0; l < labels_.size(); ++l) {
    if (labels_[l].empty()) throw ValidationError("empty label id");
    if (!label_lookup_.emplace(labels_[l], l).second)
      throw ValidationError("duplicate label id '" + labels_[l] + "'");
  }
  if (maps_.size() != labels_.size()) throw ValidationError("one dual map per label required");
  for (std::size_t l = 0; l < maps_.size(); ++l) {
    if (maps_[l].size() != atoms_.size())
      throw ValidationError("dual map of label '" + labels_[l] + "' has wrong size");
    for (const auto& img : maps_[l])
      if (img && *img >= atoms_.size())
        throw ValidationError("dual map of label '" + labels_[l] + "' leaves the atom set");
  }
}

std::optional<std::size_t> BdsSpec::atom_index(std::string_view id) const {
  auto it = atom_lookup_.find(std::string(id));
  if (it == atom_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> BdsSpec::label_index(std::string_view id) const {
  auto it = label_lookup_.find(std::string(id));
  if (it == label_lookup_.end()) return std::nullopt;
  return it->second;
}

BooleanSet BdsSpec::set_of(std::initializer_list<std::string_view> ids) const {
  BooleanSet s = empty_set();
  for (auto id : ids) {
    auto i = atom_index(id);
    if (!i) throw ValidationError("unknown atom '" + std::string(id) + "'");
    s.insert(*i);
  }
  return s;
}

Word BdsSpec::word_of(std::initializer_list<std::string_view> ids) const {
  Word w;
  for (auto id : ids) {
    auto l = label_index(id);
    if (!l) throw ValidationError("unknown label '" + std::string(id) + "'");
    w.letters.push_back(*l);
  }
  return w;
}

void BdsSpec::check_word(const Word& w) const {
  for (auto l : w.letters)
    if (l >= labels_.size()) throw ValidationError("word uses undeclared label index " + std::to_string(l));
}

void BdsSpec::check_set(const BooleanSet& s) const {
  if (s.universe() != atoms_.size())
    throw UniverseMismatch("set over " + std::to_string(s.universe()) + " atoms used with a system of " +
                           std::to_string(atoms_.size()) + " atoms");
}

std::string format_word(const BdsSpec& spec, const Word& w) {
  if (w.empty()) return "()";
  const bool short_ids = std::all_of(spec.label_ids().begin(), spec.label_ids().end(),
                                     [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !short_ids) out += '.';
    out += spec.label_id(w[i]);
  }
  return out;
}

std::string format_set(const BdsSpec& spec, const BooleanSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto m : s.members()) {
    if (!first) out += ',';
    out += spec.atom_id(m);
    first = false;
  }
  return out + "}";
}

}  // namespace bdsk
