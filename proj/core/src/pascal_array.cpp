#include "hexagram/pascal_array.hpp"

#include <algorithm>
#include <numeric>

#include "hexagram/error.hpp"

namespace hexagram {

char to_char(Label label) noexcept { return static_cast<char>('A' + static_cast<int>(label)); }

Label label_from_char(char c) {
  if (c < 'A' || c > 'F') {
    throw Error(ErrorCode::InvalidLabels, std::string("not a point label: '") + c + "'");
  }
  return static_cast<Label>(c - 'A');
}

std::string Arrangement::code() const {
  std::string out;
  for (Label l : top) out.push_back(to_char(l));
  out.push_back('|');
  for (Label l : bottom) out.push_back(to_char(l));
  return out;
}

std::vector<Arrangement> shuffles(const Arrangement& arrangement) {
  std::vector<Arrangement> result;
  result.reserve(12);
  std::array<int, 3> cols{0, 1, 2};
  do {
    Arrangement permuted;
    for (int i = 0; i < 3; ++i) {
      permuted.top[i] = arrangement.top[cols[i]];
      permuted.bottom[i] = arrangement.bottom[cols[i]];
    }
    result.push_back(permuted);
    result.push_back(Arrangement{permuted.bottom, permuted.top});
  } while (std::next_permutation(cols.begin(), cols.end()));
  return result;
}

PascalArray PascalArray::canonical(const Row& top, const Row& bottom) {
  std::array<int, 6> seen{};
  for (Label l : top) ++seen[static_cast<int>(l)];
  for (Label l : bottom) ++seen[static_cast<int>(l)];
  if (std::any_of(seen.begin(), seen.end(), [](int n) { return n != 1; })) {
    throw Error(ErrorCode::InvalidLabels, "array must use each of A..F exactly once: " +
                                              Arrangement{top, bottom}.code());
  }
  const auto orbit = shuffles(Arrangement{top, bottom});
  return PascalArray(*std::min_element(orbit.begin(), orbit.end()));
}

PascalArray PascalArray::parse(std::string_view code) {
  if (code.size() != 7 || code[3] != '|') {
    throw Error(ErrorCode::InvalidLabels,
                "array code must look like ADB|ECF, got '" + std::string(code) + "'");
  }
  Row top{};
  Row bottom{};
  for (int i = 0; i < 3; ++i) {
    top[i] = label_from_char(code[i]);
    bottom[i] = label_from_char(code[4 + i]);
  }
  return canonical(top, bottom);
}

const std::vector<PascalArray>& PascalArray::all() {
  static const std::vector<PascalArray> arrays = [] {
    std::vector<PascalArray> found;
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    do {
      Row top{static_cast<Label>(perm[0]), static_cast<Label>(perm[1]), static_cast<Label>(perm[2])};
      Row bottom{static_cast<Label>(perm[3]), static_cast<Label>(perm[4]), static_cast<Label>(perm[5])};
      found.push_back(canonical(top, bottom));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
  }();
  return arrays;
}

std::vector<Arrangement> PascalArray::orbit() const { return shuffles(arrangement_); }

}  // namespace hexagram
