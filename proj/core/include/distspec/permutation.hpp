#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace distspec {

/// A bijection on {0, ..., degree-1}. Points act on the right in the
/// mathematical sense (v^g), which for a single permutation is just apply(v).
class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError if images is not a permutation of 0..size-1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Parses cycle notation with 1-based points, e.g. "(1 2)(3 4 5)" or "()".
  /// Commas are accepted as separators too.
  static Permutation from_cycles(int degree, std::string_view text);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// 1-based cycle notation, fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Function composition: (a * b)(v) = a(b(v)).
Permutation compose(const Permutation& a, const Permutation& b);

/// Nonempty list of generators sharing one degree.
class GeneratorSet {
 public:
  GeneratorSet(int degree, std::vector<Permutation> generators);

  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }

 private:
  int degree_;
  std::vector<Permutation> generators_;
};

}  // namespace distspec
