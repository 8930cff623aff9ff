#include "hge/conjugation_orbit.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

namespace hge {

std::string canonical_key(PermutationGroup const &group)
{
  std::string key;
  for (auto const &x : group.elements()) {
    auto bytes = x.zero_based();
    key.append(reinterpret_cast<char const *>(bytes.data()), bytes.size());
  }
  return key;
}

PermutationGroup SubgroupConjugationOrbit::member(std::size_t index) const
{
  return PermutationGroup(degree_, member_generators(index));
}

std::vector<Permutation>
SubgroupConjugationOrbit::member_generators(std::size_t index) const
{
  if (index >= count_)
    throw std::out_of_range("orbit member index out of range");
  std::vector<Permutation> gens;
  auto const *base = generators_.data() + index * gens_per_member_ * degree_;
  for (std::size_t j = 0; j < gens_per_member_; ++j)
    gens.push_back(Permutation::from_zero_based(
        {base + j * degree_, static_cast<std::size_t>(degree_)}));
  return gens;
}

std::string_view SubgroupConjugationOrbit::canonical_key(std::size_t index) const
{
  if (index >= count_)
    throw std::out_of_range("orbit member index out of range");
  return {reinterpret_cast<char const *>(member_data(index)),
          static_cast<std::size_t>(degree_ * degree_)};
}

Permutation SubgroupConjugationOrbit::element_at(std::size_t index, int point) const
{
  if (index >= count_ || point < 1 || point > degree_)
    throw std::out_of_range("orbit element lookup out of range");
  return Permutation::from_zero_based(
      {member_data(index) + (point - 1) * degree_,
       static_cast<std::size_t>(degree_)});
}

bool SubgroupConjugationOrbit::member_contains(std::size_t index,
                                               Permutation const &p) const
{
  auto const *row = member_data(index) + p.image0(0) * degree_;
  auto images = p.zero_based();
  return std::memcmp(row, images.data(), degree_) == 0;
}

bool SubgroupConjugationOrbit::member_normalized_by(
    std::size_t index, std::span<const Permutation> by) const
{
  auto const *gens = generators_.data() + index * gens_per_member_ * degree_;
  std::uint8_t conj[kMaxDegree];
  for (auto const &t : by) {
    // t^-1 n t, evaluated pointwise
    auto tinv = t.inverse();
    for (std::size_t j = 0; j < gens_per_member_; ++j) {
      auto const *n = gens + j * degree_;
      for (int i = 0; i < degree_; ++i)
        conj[i] = tinv.image0(n[t.image0(i)]);
      if (std::memcmp(member_data(index) + conj[0] * degree_, conj, degree_) != 0)
        return false;
    }
  }
  return true;
}

namespace {

struct KeyView
{
  std::vector<std::uint8_t> const *buffer;
  std::size_t stride;

  std::string_view at(std::uint32_t i) const
  {
    return {reinterpret_cast<char const *>(buffer->data() + i * stride), stride};
  }
};

struct KeyHash
{
  KeyView view;
  std::size_t operator()(std::uint32_t i) const
  {
    return std::hash<std::string_view>{}(view.at(i));
  }
};

struct KeyEq
{
  KeyView view;
  bool operator()(std::uint32_t a, std::uint32_t b) const
  {
    return view.at(a) == view.at(b);
  }
};

} // namespace

SubgroupConjugationOrbit conjugation_orbit(PermutationGroup const &n)
{
  int const g = n.degree();
  if (g < 2 || g > 11)
    throw std::invalid_argument("conjugation orbits are supported for degrees 2..11");
  if (!is_regular(n))
    throw std::invalid_argument("conjugation_orbit requires a regular subgroup");

  SubgroupConjugationOrbit orbit;
  orbit.degree_ = g;
  orbit.representative_ = n;
  orbit.gens_per_member_ = n.generators().size();

  std::size_t const stride = static_cast<std::size_t>(g) * g;
  std::size_t const gstride = orbit.gens_per_member_ * g;

  // seed: representative elements indexed by the image of point 1
  orbit.elements_.resize(stride);
  for (auto const &x : n.elements()) {
    auto bytes = x.zero_based();
    std::memcpy(orbit.elements_.data() + bytes[0] * g, bytes.data(), g);
  }
  for (auto const &x : n.generators()) {
    auto bytes = x.zero_based();
    orbit.generators_.insert(orbit.generators_.end(), bytes.begin(), bytes.end());
  }
  orbit.count_ = 1;

  KeyView view{&orbit.elements_, stride};
  std::unordered_set<std::uint32_t, KeyHash, KeyEq> seen(1024, KeyHash{view},
                                                          KeyEq{view});
  seen.insert(0);

  std::vector<Permutation> const sym_gens = symmetric_group(g).generators();
  std::vector<std::uint8_t> scratch(stride);
  std::vector<std::uint8_t> scratch_gens(gstride);

  for (std::size_t head = 0; head < orbit.count_; ++head) {
    for (auto const &s : sym_gens) {
      auto sinv = s.inverse();
      auto conj_into = [&](std::uint8_t const *src, std::uint8_t *dst) {
        for (int i = 0; i < g; ++i)
          dst[i] = sinv.image0(src[s.image0(i)]);
      };
      std::uint8_t const *src = orbit.elements_.data() + head * stride;
      for (int e = 0; e < g; ++e) {
        std::uint8_t tmp[kMaxDegree];
        conj_into(src + e * g, tmp);
        std::memcpy(scratch.data() + tmp[0] * g, tmp, g);
      }
      // tentatively append, keep only when new
      orbit.elements_.insert(orbit.elements_.end(), scratch.begin(), scratch.end());
      auto candidate = static_cast<std::uint32_t>(orbit.count_);
      if (!seen.insert(candidate).second) {
        orbit.elements_.resize(orbit.elements_.size() - stride);
        continue;
      }
      std::uint8_t const *gsrc = orbit.generators_.data() + head * gstride;
      for (std::size_t j = 0; j < orbit.gens_per_member_; ++j)
        conj_into(gsrc + j * g, scratch_gens.data() + j * g);
      orbit.generators_.insert(orbit.generators_.end(), scratch_gens.begin(),
                               scratch_gens.end());
      ++orbit.count_;
    }
  }
  orbit.elements_.shrink_to_fit();
  orbit.generators_.shrink_to_fit();
  return orbit;
}

} // namespace hge
