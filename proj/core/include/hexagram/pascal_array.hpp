#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hexagram {

/// The six points A..F on the conic.
enum class Label : std::uint8_t { A, B, C, D, E, F };

char to_char(Label label) noexcept;
Label label_from_char(char c);

using Row = std::array<Label, 3>;

/// A 2x3 array of the six labels, read as an arrangement [top; bottom].
struct Arrangement {
  Row top;
  Row bottom;

  /// "ABC|FED"
  std::string code() const;
  /// Label at column `col` of the top (row 0) or bottom (row 1) row.
  Label at(int row, int col) const { return row == 0 ? top[col] : bottom[col]; }

  friend auto operator<=>(const Arrangement&, const Arrangement&) = default;
};

/// A Pascal array modulo row swaps and simultaneous column permutations,
/// stored as the lexicographically least of its 12 arrangements (comparing
/// the six-letter word top||bottom).
class PascalArray {
 public:
  /// Throws InvalidLabels unless top and bottom together use each label once.
  static PascalArray canonical(const Row& top, const Row& bottom);
  static PascalArray canonical(const Arrangement& arrangement) {
    return canonical(arrangement.top, arrangement.bottom);
  }
  /// Parses "ADB|ECF" (any arrangement) and canonicalizes it.
  static PascalArray parse(std::string_view code);

  /// All 60 canonical arrays, in increasing order.
  static const std::vector<PascalArray>& all();

  const Arrangement& arrangement() const noexcept { return arrangement_; }
  const Row& top() const noexcept { return arrangement_.top; }
  const Row& bottom() const noexcept { return arrangement_.bottom; }
  std::string code() const { return arrangement_.code(); }

  /// The 12 arrangements that denote this array (row swap x column permutation).
  std::vector<Arrangement> orbit() const;

  friend auto operator<=>(const PascalArray&, const PascalArray&) = default;

 private:
  explicit PascalArray(Arrangement arrangement) : arrangement_(arrangement) {}

  Arrangement arrangement_;
};

/// All 12 shuffles of an arrangement.
std::vector<Arrangement> shuffles(const Arrangement& arrangement);

}  // namespace hexagram
