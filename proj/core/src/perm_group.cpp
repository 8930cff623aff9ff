#include "hge/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>

namespace hge {

// Stabilizer chain with the full base 0, 1, ..., g-1. Level k holds the
// strong generators fixing points 0..k-1 and a transversal indexed by the
// image of point k: transversal[k][j], when present, maps k to j.
struct PermutationGroup::State
{
  int degree;
  std::vector<Permutation> generators;
  std::vector<std::vector<Permutation>> strong;
  std::vector<std::vector<std::optional<Permutation>>> transversal;
  std::uint64_t order = 1;

  std::once_flag elements_once;
  std::vector<Permutation> elements;

  explicit State(int d)
    : degree(d), strong(d),
      transversal(d, std::vector<std::optional<Permutation>>(d))
  {
    for (int k = 0; k < d; ++k)
      transversal[k][k] = Permutation(d);
  }

  // Sift g (which fixes 0..k-1) from level k; true when it reduces to the
  // identity.
  bool sifts(Permutation g, int k) const
  {
    for (int level = k; level < degree; ++level) {
      int j = g.image0(level);
      auto const &u = transversal[level][j];
      if (!u)
        return false;
      g = compose(u->inverse(), g);
    }
    return g.is_identity();
  }

  void update(Permutation const &g, int k)
  {
    int j = g.image0(k);
    auto const &u = transversal[k][j];
    if (u) {
      insert(compose(u->inverse(), g), k + 1);
      return;
    }
    transversal[k][j] = g;
    // strong[k] may grow while we iterate; index-based loop on purpose
    for (std::size_t s = 0; s < strong[k].size(); ++s)
      update(compose(strong[k][s], g), k);
  }

  void insert(Permutation const &g, int k)
  {
    if (k >= degree || sifts(g, k))
      return;
    strong[k].push_back(g);
    for (int j = 0; j < degree; ++j) {
      if (transversal[k][j]) {
        Permutation u = *transversal[k][j];
        update(compose(g, u), k);
      }
    }
  }

  void build()
  {
    for (auto const &g : generators)
      insert(g, 0);
    order = 1;
    for (int k = 0; k < degree; ++k) {
      std::uint64_t n = 0;
      for (auto const &u : transversal[k])
        n += u.has_value();
      order *= n;
    }
  }
};

PermutationGroup::PermutationGroup(int degree)
  : PermutationGroup(degree, {Permutation(degree)})
{}

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators)
{
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("group degree out of range");
  for (auto const &g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree " +
                                  std::to_string(g.degree()) +
                                  " does not match group degree " +
                                  std::to_string(degree));
  if (generators.empty())
    generators.emplace_back(degree);
  state_ = std::make_shared<State>(degree);
  state_->generators = std::move(generators);
  state_->build();
}

int PermutationGroup::degree() const { return state_->degree; }

std::vector<Permutation> const &PermutationGroup::generators() const &
{
  return state_->generators;
}

std::vector<Permutation> PermutationGroup::generators() &&
{
  return state_->generators;
}

std::uint64_t PermutationGroup::order() const { return state_->order; }

bool PermutationGroup::contains(Permutation const &p) const
{
  if (p.degree() != degree())
    throw std::invalid_argument("membership test with mismatched degree");
  return state_->sifts(p, 0);
}

std::vector<Permutation> PermutationGroup::elements(std::uint64_t cap) &&
{
  return std::as_const(*this).elements(cap);
}

std::vector<Permutation> const &
PermutationGroup::elements(std::uint64_t cap) const &
{
  if (order() > cap)
    throw ElementCapExceeded("group of order " + std::to_string(order()) +
                             " exceeds element cap " + std::to_string(cap));
  std::call_once(state_->elements_once, [this] {
    State &s = *state_;
    // every element is u_0 u_1 ... u_{g-1} with u_k from level k
    std::vector<Permutation> current{Permutation(s.degree)};
    for (int k = s.degree - 1; k >= 0; --k) {
      std::vector<Permutation> reps;
      for (auto const &u : s.transversal[k])
        if (u)
          reps.push_back(*u);
      if (reps.size() == 1)
        continue;
      std::vector<Permutation> next;
      next.reserve(current.size() * reps.size());
      for (auto const &u : reps)
        for (auto const &x : current)
          next.push_back(compose(u, x));
      current = std::move(next);
    }
    std::sort(current.begin(), current.end());
    s.elements = std::move(current);
  });
  return state_->elements;
}

std::vector<int> PermutationGroup::basic_orbit_sizes() const
{
  std::vector<int> sizes;
  for (auto const &level : state_->transversal)
    sizes.push_back(static_cast<int>(
        std::count_if(level.begin(), level.end(),
                      [](auto const &u) { return u.has_value(); })));
  return sizes;
}

std::set<int> orbit(PermutationGroup const &group, int point)
{
  if (point < 1 || point > group.degree())
    throw std::out_of_range("orbit point out of range");
  std::set<int> seen{point};
  std::deque<int> queue{point};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (auto const &g : group.generators()) {
      int y = g(x);
      if (seen.insert(y).second)
        queue.push_back(y);
    }
  }
  return seen;
}

bool is_transitive(PermutationGroup const &group)
{
  return static_cast<int>(orbit(group, 1).size()) == group.degree();
}

bool is_regular(PermutationGroup const &group)
{
  return is_transitive(group) &&
         group.order() == static_cast<std::uint64_t>(group.degree());
}

PermutationGroup point_stabilizer(PermutationGroup const &group, int point,
                                  std::uint64_t cap)
{
  if (point < 1 || point > group.degree())
    throw std::out_of_range("stabilizer point out of range");
  std::vector<Permutation> fixing;
  for (auto const &x : group.elements(cap))
    if (x(point) == point)
      fixing.push_back(x);
  // a generating set: add elements not yet generated
  std::vector<Permutation> gens;
  PermutationGroup sub(group.degree());
  for (auto const &x : fixing) {
    if (sub.contains(x))
      continue;
    gens.push_back(x);
    sub = PermutationGroup(group.degree(), gens);
  }
  return sub;
}

PermutationGroup symmetric_group(int degree)
{
  if (degree == 1)
    return PermutationGroup(1);
  return PermutationGroup(degree, {parse_cycles("(1,2)", degree), long_cycle(degree)});
}

bool is_normalized_by(PermutationGroup const &group, PermutationGroup const &by)
{
  for (auto const &t : by.generators())
    for (auto const &n : group.generators())
      if (!group.contains(conjugate(n, t)))
        return false;
  return true;
}

} // namespace hge
