#include "hge/small_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace hge {

struct SmallGroup::State
{
  int degree = 1;
  std::vector<Permutation> carrier;
  std::unordered_map<Permutation, Index> index;
  std::vector<Index> table; // order * order
  std::vector<Index> inverse;
  std::vector<int> element_order;

  void build()
  {
    std::size_t const n = carrier.size();
    if (n == 0 || !carrier.front().is_identity())
      throw std::invalid_argument("small group carrier must start with the identity");
    index.reserve(n);
    for (Index i = 0; i < n; ++i)
      if (!index.emplace(carrier[i], i).second)
        throw std::invalid_argument("small group carrier has duplicates");
    table.resize(n * n);
    inverse.resize(n);
    element_order.resize(n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        auto it = index.find(compose(carrier[a], carrier[b]));
        if (it == index.end())
          throw std::invalid_argument("small group carrier is not closed");
        table[a * n + b] = it->second;
      }
      auto inv = index.find(carrier[a].inverse());
      if (inv == index.end())
        throw std::invalid_argument("small group carrier is not closed under inverse");
      inverse[a] = inv->second;
      element_order[a] = hge::element_order(carrier[a]);
    }
  }
};

SmallGroup::SmallGroup(PermutationGroup const &group, std::uint64_t cap)
{
  auto state = std::make_shared<State>();
  state->degree = group.degree();
  state->carrier = group.elements(cap);
  state->build();
  state_ = std::move(state);
}

SmallGroup::SmallGroup(int degree, std::vector<Permutation> elements)
{
  for (auto const &x : elements)
    if (x.degree() != degree)
      throw std::invalid_argument("small group element degree mismatch");
  std::sort(elements.begin(), elements.end());
  auto state = std::make_shared<State>();
  state->degree = degree;
  state->carrier = std::move(elements);
  state->build();
  state_ = std::move(state);
}

int SmallGroup::degree() const { return state_->degree; }
std::size_t SmallGroup::order() const { return state_->carrier.size(); }
std::vector<Permutation> const &SmallGroup::carrier() const { return state_->carrier; }

std::optional<SmallGroup::Index> SmallGroup::index_of(Permutation const &p) const
{
  auto it = state_->index.find(p);
  if (it == state_->index.end())
    return std::nullopt;
  return it->second;
}

SmallGroup::Index SmallGroup::multiply(Index a, Index b) const
{
  return state_->table[a * order() + b];
}

SmallGroup::Index SmallGroup::inverse(Index a) const { return state_->inverse[a]; }

int SmallGroup::order_of(Index a) const { return state_->element_order[a]; }

std::vector<SmallGroup::Index> SmallGroup::span(std::vector<Index> const &gens) const
{
  std::vector<bool> in(order(), false);
  std::vector<Index> out{identity_index()};
  in[identity_index()] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (Index g : gens) {
      Index y = multiply(out[head], g);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SmallGroup::Index> SmallGroup::generating_sequence() const
{
  std::vector<Index> by_order(order());
  std::iota(by_order.begin(), by_order.end(), Index{0});
  std::stable_sort(by_order.begin(), by_order.end(), [this](Index a, Index b) {
    return order_of(a) > order_of(b);
  });
  std::vector<Index> gens;
  std::vector<bool> in(order(), false);
  in[identity_index()] = true;
  std::size_t covered = 1;
  for (Index x : by_order) {
    if (covered == order())
      break;
    if (in[x])
      continue;
    gens.push_back(x);
    auto s = span(gens);
    std::fill(in.begin(), in.end(), false);
    for (Index y : s)
      in[y] = true;
    covered = s.size();
  }
  return gens;
}

PermutationGroup SmallGroup::as_permutation_group() const
{
  std::vector<Permutation> gens;
  for (Index i : generating_sequence())
    gens.push_back(element(i));
  return PermutationGroup(degree(), gens);
}

std::vector<int> SmallGroup::order_profile() const
{
  std::vector<int> p = state_->element_order;
  std::sort(p.begin(), p.end());
  return p;
}

Permutation const &GroupIsomorphism::operator()(Permutation const &x) const
{
  auto i = source.index_of(x);
  if (!i)
    throw std::invalid_argument("element outside isomorphism source");
  return target.element(map[*i]);
}

// ---------------------------------------------------------------------------
// subgroup lattice

namespace {

using Index = SmallGroup::Index;
using Bits = std::vector<std::uint64_t>;

struct BitsHash
{
  std::size_t operator()(Bits const &b) const
  {
    std::size_t h = 0;
    for (auto w : b)
      h = h * 0x9E3779B97F4A7C15ull + (w ^ (w >> 29));
    return h;
  }
};

bool test_bit(Bits const &b, Index i) { return (b[i >> 6] >> (i & 63)) & 1u; }
void set_bit(Bits &b, Index i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

Bits to_bits(std::size_t n, std::vector<Index> const &indices)
{
  Bits b((n + 63) / 64, 0);
  for (Index i : indices)
    set_bit(b, i);
  return b;
}

std::vector<Index> from_bits(std::size_t n, Bits const &b)
{
  std::vector<Index> out;
  for (Index i = 0; i < n; ++i)
    if (test_bit(b, i))
      out.push_back(i);
  return out;
}

struct Node
{
  Bits bits;
  std::vector<Index> gens;
  std::size_t size;
};

} // namespace

std::vector<std::vector<Index>> subgroup_index_sets(SmallGroup const &group)
{
  std::size_t const n = group.order();
  std::vector<Node> nodes;
  std::unordered_set<Bits, BitsHash> seen;

  // cyclic subgroups, one generator each
  std::vector<Index> cyclic_gens;
  for (Index x = 0; x < n; ++x) {
    auto s = group.span({x});
    Bits b = to_bits(n, s);
    if (seen.insert(b).second) {
      nodes.push_back({b, x == 0 ? std::vector<Index>{} : std::vector<Index>{x}, s.size()});
      if (x != 0)
        cyclic_gens.push_back(x);
    }
  }

  // Join every subgroup found with every cyclic subgroup until nothing new.
  // <H, c> = <H, d> for every d in the double coset HcH, so one join per
  // double coset suffices.
  std::vector<Index> stack;
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    Bits done = nodes[head].bits;
    for (Index c : cyclic_gens) {
      if (test_bit(done, c))
        continue;
      std::vector<Index> gens = nodes[head].gens;
      gens.push_back(c);
      auto s = group.span(gens);
      Bits b = to_bits(n, s);

      auto const &h_gens = nodes[head].gens;
      set_bit(done, c);
      stack.assign(1, c);
      while (!stack.empty()) {
        Index x = stack.back();
        stack.pop_back();
        for (Index h : h_gens)
          for (Index y : {group.multiply(h, x), group.multiply(x, h)})
            if (!test_bit(done, y)) {
              set_bit(done, y);
              stack.push_back(y);
            }
      }

      if (seen.insert(b).second)
        nodes.push_back({std::move(b), std::move(gens), s.size()});
    }
  }

  std::vector<std::vector<Index>> out;
  out.reserve(nodes.size());
  for (auto const &node : nodes)
    out.push_back(from_bits(n, node.bits));
  std::sort(out.begin(), out.end(), [](auto const &a, auto const &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<SmallGroup> all_subgroups(SmallGroup const &group)
{
  std::vector<SmallGroup> out;
  for (auto const &indices : subgroup_index_sets(group)) {
    std::vector<Permutation> elems;
    elems.reserve(indices.size());
    for (Index i : indices)
      elems.push_back(group.element(i));
    out.emplace_back(group.degree(), std::move(elems));
  }
  return out;
}

// ---------------------------------------------------------------------------
// homomorphism extension and backtracking

namespace {

constexpr Index kUnset = static_cast<Index>(-1);

// Extends gens[i] -> images[i] along the right Cayley graph of the span of
// gens. Returns false on a conflict or a collision (non-injective map).
bool extend(SmallGroup const &src, SmallGroup const &dst,
            std::vector<Index> const &gens, std::vector<Index> const &images,
            std::vector<Index> &map, std::size_t &mapped)
{
  map.assign(src.order(), kUnset);
  std::vector<bool> used(dst.order(), false);
  map[SmallGroup::identity_index()] = SmallGroup::identity_index();
  used[SmallGroup::identity_index()] = true;
  std::vector<Index> queue{SmallGroup::identity_index()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Index x = queue[head];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Index y = src.multiply(x, gens[j]);
      Index z = dst.multiply(map[x], images[j]);
      if (map[y] == kUnset) {
        if (used[z])
          return false;
        used[z] = true;
        map[y] = z;
        queue.push_back(y);
      } else if (map[y] != z) {
        return false;
      }
    }
  }
  mapped = queue.size();
  return true;
}

// Calls visit(map) for every isomorphism src -> dst, in carrier order of
// the generator images; visit returns false to stop.
template<typename Visit>
void for_each_isomorphism(SmallGroup const &src, SmallGroup const &dst, Visit &&visit)
{
  if (src.order() != dst.order())
    return;
  auto const gens = src.generating_sequence();
  std::vector<std::vector<Index>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (Index y = 0; y < dst.order(); ++y)
      if (dst.order_of(y) == src.order_of(gens[j]))
        candidates[j].push_back(y);

  std::vector<Index> images;
  std::vector<Index> map;
  bool stop = false;
  auto recurse = [&](auto &&self, std::size_t depth) -> void {
    if (stop)
      return;
    if (depth == gens.size()) {
      std::size_t mapped = 0;
      std::vector<Index> prefix(gens.begin(), gens.end());
      if (extend(src, dst, prefix, images, map, mapped) && mapped == src.order())
        stop = !visit(map);
      return;
    }
    std::vector<Index> prefix(gens.begin(), gens.begin() + depth + 1);
    for (Index y : candidates[depth]) {
      images.push_back(y);
      std::size_t mapped = 0;
      if (extend(src, dst, prefix, images, map, mapped))
        self(self, depth + 1);
      images.pop_back();
      if (stop)
        return;
    }
  };
  recurse(recurse, 0);
}

} // namespace

std::vector<GroupIsomorphism> automorphisms(SmallGroup const &n)
{
  std::vector<GroupIsomorphism> out;
  for_each_isomorphism(n, n, [&](std::vector<Index> const &map) {
    out.push_back({n, n, map});
    return true;
  });
  return out;
}

std::optional<GroupIsomorphism> find_isomorphism(SmallGroup const &a,
                                                 SmallGroup const &b)
{
  if (a.order() != b.order() || a.order_profile() != b.order_profile())
    return std::nullopt;
  std::optional<GroupIsomorphism> found;
  for_each_isomorphism(a, b, [&](std::vector<Index> const &map) {
    found = GroupIsomorphism{a, b, map};
    return false;
  });
  return found;
}

// ---------------------------------------------------------------------------
// holomorph and opposite representation

namespace {

// point_index[j] = index of the unique element sending point 1 to point j+1
std::vector<Index> regular_point_index(SmallGroup const &n)
{
  int const g = n.degree();
  if (n.order() != static_cast<std::size_t>(g))
    throw std::invalid_argument("subgroup is not regular: order differs from degree");
  std::vector<Index> point_index(g, kUnset);
  for (Index i = 0; i < n.order(); ++i) {
    int p = n.element(i).image0(0);
    if (point_index[p] != kUnset)
      throw std::invalid_argument("subgroup is not regular: not transitive");
    point_index[p] = i;
  }
  return point_index;
}

Permutation induced(SmallGroup const &n, std::vector<Index> const &point_index,
                    std::vector<Index> const &map)
{
  std::vector<Permutation::Point> images(n.degree());
  for (int p = 0; p < n.degree(); ++p)
    images[p] = n.element(map[point_index[p]]).image0(0);
  return Permutation::from_zero_based(images);
}

} // namespace

std::vector<Permutation> automorphism_realizers(SmallGroup const &n)
{
  auto const point_index = regular_point_index(n);
  std::vector<Permutation> out;
  for (auto const &alpha : automorphisms(n))
    out.push_back(induced(n, point_index, alpha.map));
  std::sort(out.begin(), out.end());
  return out;
}

PermutationGroup holomorph(SmallGroup const &n)
{
  auto const realizers = automorphism_realizers(n);
  std::vector<Permutation> gens;
  for (Index i : n.generating_sequence())
    gens.push_back(n.element(i));
  PermutationGroup hol(n.degree(), gens);
  for (auto const &p : realizers) {
    if (hol.contains(p))
      continue;
    gens.push_back(p);
    hol = PermutationGroup(n.degree(), gens);
  }
  if (hol.order() != n.order() * realizers.size())
    throw std::logic_error("holomorph order check failed");
  for (auto const &x : hol.generators())
    for (Index i : n.generating_sequence())
      if (!n.index_of(conjugate(n.element(i), x)))
        throw std::logic_error("holomorph generator does not normalize N");
  return hol;
}

PermutationGroup opposite_regular(SmallGroup const &n)
{
  auto const point_index = regular_point_index(n);
  std::vector<Permutation> gens;
  for (Index m : n.generating_sequence()) {
    std::vector<Permutation::Point> images(n.degree());
    for (int p = 0; p < n.degree(); ++p)
      images[p] = n.element(n.multiply(point_index[p], m)).image0(0);
    gens.push_back(Permutation::from_zero_based(images));
  }
  PermutationGroup opp(n.degree(), gens);
  if (opp.order() != n.order())
    throw std::logic_error("opposite regular representation has wrong order");
  for (auto const &r : gens)
    for (Index i : n.generating_sequence())
      if (compose(r, n.element(i)) != compose(n.element(i), r))
        throw std::logic_error("opposite regular representation does not commute");
  return opp;
}

} // namespace hge
