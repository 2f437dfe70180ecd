#include "infratop/setcore.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace infratop {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

GroundSet::GroundSet(std::vector<std::string> elements) : elements_(std::move(elements)) {
  if (elements_.empty() || elements_.size() > kMaxGroundSize) {
    throw std::invalid_argument("ground set must have between 1 and 32 elements, got " +
                                std::to_string(elements_.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& e : elements_) {
    if (e.empty()) throw std::invalid_argument("ground set element names must be non-empty");
    if (!seen.insert(e).second) throw std::invalid_argument("duplicate ground set element '" + e + "'");
  }
}

GroundSet::GroundSet(std::initializer_list<std::string_view> elements)
    : GroundSet(std::vector<std::string>(elements.begin(), elements.end())) {}

GroundSet GroundSet::letters(unsigned n) {
  if (n == 0 || n > 26) throw std::invalid_argument("letters() supports 1..26 elements");
  std::vector<std::string> names;
  names.reserve(n);
  for (unsigned i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return GroundSet(std::move(names));
}

std::optional<unsigned> GroundSet::index_of(std::string_view name) const {
  const auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<unsigned>(it - elements_.begin());
}

SubsetMask GroundSet::subset(std::span<const std::string> names) const {
  SubsetMask out;
  for (const auto& n : names) {
    const auto idx = index_of(n);
    if (!idx) throw std::invalid_argument("unknown element '" + n + "'");
    out = out.with(*idx);
  }
  return out;
}

SubsetMask GroundSet::subset(std::initializer_list<std::string_view> names) const {
  std::vector<std::string> v(names.begin(), names.end());
  return subset(v);
}

SubsetMask GroundSet::parse(std::string_view text) const {
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw std::invalid_argument("unbalanced braces in set '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
  }
  SubsetMask out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto piece = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (piece.empty()) throw std::invalid_argument("empty element name in set '" + std::string(text) + "'");
    const auto idx = index_of(piece);
    if (!idx) throw std::invalid_argument("unknown element '" + std::string(piece) + "'");
    out = out.with(*idx);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<std::string> GroundSet::names_of(SubsetMask a) const {
  std::vector<std::string> out;
  for (unsigned i = 0; i < size(); ++i) {
    if (a.contains(i)) out.push_back(elements_[i]);
  }
  return out;
}

std::string GroundSet::format(SubsetMask a) const {
  std::string out = "{";
  bool first = true;
  for (unsigned i = 0; i < size(); ++i) {
    if (!a.contains(i)) continue;
    if (!first) out += ',';
    out += elements_[i];
    first = false;
  }
  out += '}';
  return out;
}

SetFamily::SetFamily(std::vector<SubsetMask> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SetFamily::SetFamily(std::initializer_list<SubsetMask> members)
    : SetFamily(std::vector<SubsetMask>(members)) {}

SetFamily SetFamily::of_bits(std::initializer_list<std::uint32_t> bits) {
  std::vector<SubsetMask> v;
  v.reserve(bits.size());
  for (auto b : bits) v.emplace_back(b);
  return SetFamily(std::move(v));
}

bool SetFamily::contains(SubsetMask a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

std::strong_ordering compare_encoding(const SetFamily& a, const SetFamily& b) {
  // Walk both sorted lists from the top; the first mismatch decides.
  auto ia = a.members().rbegin();
  auto ib = b.members().rbegin();
  for (; ia != a.members().rend() && ib != b.members().rend(); ++ia, ++ib) {
    if (*ia != *ib) return *ia <=> *ib;
  }
  if (ia != a.members().rend()) return std::strong_ordering::greater;
  if (ib != b.members().rend()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

SubsetMask permute(SubsetMask a, std::span<const unsigned> perm) {
  std::uint32_t out = 0;
  std::uint32_t bits = a.bits();
  while (bits != 0) {
    const auto i = static_cast<unsigned>(std::countr_zero(bits));
    bits &= bits - 1;
    out |= std::uint32_t{1} << perm[i];
  }
  return SubsetMask(out);
}

SetFamily permute(const SetFamily& f, std::span<const unsigned> perm) {
  std::vector<SubsetMask> image;
  image.reserve(f.size());
  for (auto m : f) image.push_back(permute(m, perm));
  return SetFamily(std::move(image));
}

SetFamily canonical_form(const GroundSet& g, const SetFamily& f) {
  if (g.size() > kMaxCanonicalSize) {
    throw std::invalid_argument("canonical_form supports at most " + std::to_string(kMaxCanonicalSize) +
                                " ground elements");
  }
  std::vector<unsigned> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0u);
  SetFamily best = f;
  do {
    SetFamily image = permute(f, perm);
    if (image < best) best = std::move(image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string format_family(const GroundSet& g, const SetFamily& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i != 0) out += ", ";
    out += g.format(f[i]);
  }
  out += '}';
  return out;
}

}  // namespace infratop
