#include "hge/permutation.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace hge {

namespace {

void check_degree(int degree)
{
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("permutation degree " + std::to_string(degree) +
                                " outside 1.." + std::to_string(kMaxDegree));
}

void check_same_degree(Permutation const &a, Permutation const &b)
{
  if (a.degree() != b.degree())
    throw std::invalid_argument("permutation degree mismatch: " +
                                std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()));
}

} // namespace

Permutation::Permutation(int degree) : degree_(degree)
{
  check_degree(degree);
  for (int i = 0; i < degree_; ++i)
    images_[i] = static_cast<Point>(i);
}

Permutation Permutation::from_images(std::span<const int> images)
{
  std::vector<Point> zero(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 1 || images[i] > static_cast<int>(images.size()))
      throw std::invalid_argument("image out of range");
    zero[i] = static_cast<Point>(images[i] - 1);
  }
  return from_zero_based(zero);
}

Permutation Permutation::from_zero_based(std::span<const Point> images)
{
  int const degree = static_cast<int>(images.size());
  Permutation p(degree);
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < degree; ++i) {
    Point x = images[i];
    if (x >= degree || seen[x])
      throw std::invalid_argument("image array is not a bijection");
    seen[x] = true;
    p.images_[i] = x;
  }
  return p;
}

Permutation Permutation::from_cycles(int degree,
                                     std::vector<std::vector<int>> const &cycles)
{
  Permutation p(degree);
  std::array<bool, kMaxDegree> used{};
  for (auto const &cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      int a = cycle[j];
      int b = cycle[(j + 1) % cycle.size()];
      if (a < 1 || a > degree)
        throw std::invalid_argument("point " + std::to_string(a) +
                                    " out of range 1.." +
                                    std::to_string(degree));
      if (used[a - 1])
        throw std::invalid_argument("point " + std::to_string(a) +
                                    " repeated in cycle product");
      used[a - 1] = true;
      p.images_[a - 1] = static_cast<Point>(b - 1);
    }
  }
  return p;
}

int Permutation::operator()(int point) const
{
  if (point < 1 || point > degree_)
    throw std::out_of_range("point out of range");
  return images_[point - 1] + 1;
}

bool Permutation::is_identity() const
{
  for (int i = 0; i < degree_; ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation r(degree_);
  for (int i = 0; i < degree_; ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::string Permutation::to_cycles() const
{
  std::string out;
  std::array<bool, kMaxDegree> done{};
  for (int i = 0; i < degree_; ++i) {
    if (done[i] || images_[i] == i)
      continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first)
        out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<int> Permutation::images() const
{
  std::vector<int> r(degree_);
  for (int i = 0; i < degree_; ++i)
    r[i] = images_[i] + 1;
  return r;
}

bool operator==(Permutation const &a, Permutation const &b)
{
  if (a.degree_ != b.degree_)
    return false;
  for (int i = 0; i < a.degree_; ++i)
    if (a.images_[i] != b.images_[i])
      return false;
  return true;
}

bool operator<(Permutation const &a, Permutation const &b)
{
  if (a.degree_ != b.degree_)
    return a.degree_ < b.degree_;
  for (int i = 0; i < a.degree_; ++i)
    if (a.images_[i] != b.images_[i])
      return a.images_[i] < b.images_[i];
  return false;
}

std::size_t Permutation::hash() const
{
  // FNV-1a over the image bytes
  std::size_t h = 1469598103934665603ull;
  for (int i = 0; i < degree_; ++i) {
    h ^= images_[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::ostream &operator<<(std::ostream &os, Permutation const &p)
{
  return os << p.to_cycles();
}

Permutation parse_cycles(std::string_view text, int degree)
{
  check_degree(degree);
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto fail = [&](std::string const &what) {
    throw std::invalid_argument("malformed cycle text '" + std::string(text) +
                                "': " + what);
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      fail("expected '('");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip_ws();
      continue;
    }
    for (;;) {
      skip_ws();
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        fail("expected a point");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1000)
          fail("point too large");
        ++i;
      }
      cycle.push_back(value);
      skip_ws();
      if (i >= text.size())
        fail("unterminated cycle");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      fail("unexpected character");
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return Permutation::from_cycles(degree, cycles);
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  check_same_degree(p, q);
  Permutation out(p.degree());
  for (int i = 0; i < p.degree_; ++i)
    out.images_[i] = p.images_[q.images_[i]];
  return out;
}

Permutation conjugate(Permutation const &p, Permutation const &t)
{
  check_same_degree(p, t);
  return compose(t.inverse(), compose(p, t));
}

int element_order(Permutation const &p)
{
  std::array<bool, kMaxDegree> done{};
  int order = 1;
  for (int i = 0; i < p.degree(); ++i) {
    if (done[i])
      continue;
    int len = 0;
    for (int j = i; !done[j]; j = p.image0(j)) {
      done[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Permutation power(Permutation const &p, int e)
{
  if (e < 0)
    throw std::invalid_argument("negative exponent");
  Permutation r(p.degree());
  for (int k = 0; k < e; ++k)
    r = compose(p, r);
  return r;
}

Permutation long_cycle(int degree)
{
  std::vector<int> cycle(degree);
  std::iota(cycle.begin(), cycle.end(), 1);
  return Permutation::from_cycles(degree, {cycle});
}

} // namespace hge
