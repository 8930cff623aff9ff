#ifndef HGE_PERMUTATION_HPP
#define HGE_PERMUTATION_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hge {

/// Largest degree a Permutation can carry. The enumerator itself stops at 11;
/// the extra room is used by the p = 5 witness check on 25 points.
inline constexpr int kMaxDegree = 25;

/// A bijection on the points 1..degree.
///
/// Points are 1-based in every public function and in the text format; the
/// image array is stored 0-based. Composition applies the right factor
/// first: compose(p, q)(i) == p(q(i)). Conjugation follows n^t = t^-1 n t.
class Permutation
{
public:
  using Point = std::uint8_t;

  /// Identity on `degree` points.
  explicit Permutation(int degree = 1);

  /// From 1-based images: images[i - 1] is the image of point i.
  static Permutation from_images(std::span<const int> images);

  /// From 0-based images (internal fast path, validated).
  static Permutation from_zero_based(std::span<const Point> images);

  /// Product of the given cycles (1-based points).
  static Permutation from_cycles(int degree,
                                 std::vector<std::vector<int>> const &cycles);

  int degree() const { return degree_; }

  /// Image of the 1-based point.
  int operator()(int point) const;

  /// 0-based image access without range checks.
  Point image0(int point0) const { return images_[point0]; }

  bool is_identity() const;

  Permutation inverse() const;

  /// Cycle notation with 1-based points, "()" for the identity.
  std::string to_cycles() const;

  std::vector<int> images() const;

  std::span<const Point> zero_based() const
  {
    return {images_.data(), static_cast<std::size_t>(degree_)};
  }

  friend Permutation compose(Permutation const &p, Permutation const &q);
  friend bool operator==(Permutation const &a, Permutation const &b);
  friend bool operator<(Permutation const &a, Permutation const &b);

  std::size_t hash() const;

private:
  int degree_;
  std::array<Point, kMaxDegree> images_{};
};

bool operator==(Permutation const &a, Permutation const &b);
inline bool operator!=(Permutation const &a, Permutation const &b)
{
  return !(a == b);
}
/// Lexicographic order on image arrays; equal degrees required.
bool operator<(Permutation const &a, Permutation const &b);

std::ostream &operator<<(std::ostream &os, Permutation const &p);

/// Parses "(1,2,3)(4,5)"; whitespace is ignored and "" / "()" is the identity.
/// Throws std::invalid_argument on malformed text, out-of-range or repeated
/// points.
Permutation parse_cycles(std::string_view text, int degree);

/// Apply q first, then p.
Permutation compose(Permutation const &p, Permutation const &q);

inline Permutation inverse(Permutation const &p) { return p.inverse(); }

/// t^-1 p t, i.e. compose(inverse(t), compose(p, t)).
Permutation conjugate(Permutation const &p, Permutation const &t);

/// Least k >= 1 with p^k = id (the lcm of the cycle lengths).
int element_order(Permutation const &p);

/// p^e for e >= 0.
Permutation power(Permutation const &p, int e);

/// Identity permutation on n points.
inline Permutation identity(int degree) { return Permutation(degree); }

/// The n-cycle (1,2,...,n).
Permutation long_cycle(int degree);

} // namespace hge

template<>
struct std::hash<hge::Permutation>
{
  std::size_t operator()(hge::Permutation const &p) const { return p.hash(); }
};

#endif // HGE_PERMUTATION_HPP
