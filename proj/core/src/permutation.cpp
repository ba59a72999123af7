#include "distspec/permutation.hpp"

#include <cctype>
#include <charconv>

#include "distspec/error.hpp"

namespace distspec {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || hit[static_cast<std::size_t>(v)]) {
      throw DomainError("image list is not a permutation");
    }
    hit[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw DomainError("permutation degree must be nonnegative");
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int v = 0; v < degree; ++v) images[static_cast<std::size_t>(v)] = v;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, std::string_view text) {
  auto images = identity(degree).images_;
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  std::size_t pos = 0;
  const auto fail = [&](const std::string& why) {
    throw DomainError("bad cycle notation '" + std::string(text) + "' at offset " + std::to_string(pos) + ": " + why);
  };
  const auto skip_space = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      int point = 0;
      const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), point);
      if (ec != std::errc() || end == text.data() + pos) fail("expected a point");
      if (point < 1 || point > degree) fail("point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      if (used[static_cast<std::size_t>(point - 1)]) fail("point " + std::to_string(point) + " repeated");
      used[static_cast<std::size_t>(point - 1)] = 1;
      cycle.push_back(point - 1);
      pos = static_cast<std::size_t>(end - text.data());
    }
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      images[static_cast<std::size_t>(cycle[t])] = cycle[(t + 1) % cycle.size()];
    }
    skip_space();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t v = 0; v < images_.size(); ++v) {
    if (images_[v] != static_cast<int>(v)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t v = 0; v < images_.size(); ++v) inv[static_cast<std::size_t>(images_[v])] = static_cast<int>(v);
  return Permutation(std::move(inv));
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    out += "(";
    auto v = start;
    do {
      if (v != start) out += " ";
      out += std::to_string(v + 1);
      seen[v] = 1;
      v = static_cast<std::size_t>(images_[v]);
    } while (v != start);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("cannot compose permutations of different degrees");
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int v = 0; v < a.degree(); ++v) images[static_cast<std::size_t>(v)] = a(b(v));
  return Permutation(std::move(images));
}

GeneratorSet::GeneratorSet(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree < 1) throw DomainError("generator set degree must be positive");
  if (generators_.empty()) throw DomainError("generator set must not be empty");
  for (const auto& g : generators_) {
    if (g.degree() != degree) throw DomainError("generator degree differs from the set's degree");
  }
}

}  // namespace distspec
