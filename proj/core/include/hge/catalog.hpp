#ifndef HGE_CATALOG_HPP
#define HGE_CATALOG_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hge/perm_group.hpp"

namespace hge {

/// Syntax or content error in a catalog stream; carries the 1-based line.
class CatalogError : public std::runtime_error
{
public:
  CatalogError(std::string const &what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                  : what),
      line_(line)
  {}

  int line() const { return line_; }

private:
  int line_;
};

/// One transitive group gT k.
struct TransitiveGroupEntry
{
  int degree = 0;
  int index = 0;
  std::uint64_t claimed_order = 0;
  std::optional<std::string> label;
  std::vector<Permutation> generators;

  PermutationGroup group() const { return PermutationGroup(degree, generators); }

  /// "8T3" style name.
  std::string name() const;
};

/// Transitive groups keyed by degree, each degree's entries sorted by index.
class Catalog
{
public:
  void add(TransitiveGroupEntry entry, int line = 0);

  bool has_degree(int degree) const { return entries_.count(degree) != 0; }
  std::vector<int> degrees() const;

  /// Entries of one degree in index order; throws std::out_of_range when the
  /// degree is absent.
  std::vector<TransitiveGroupEntry> const &entries(int degree) const;

  TransitiveGroupEntry const &entry(int degree, int index) const;

private:
  std::map<int, std::vector<TransitiveGroupEntry>> entries_;
};

inline constexpr int kMaxCatalogDegree = 11;

/// Published number of transitive groups of each degree 1..11.
int expected_transitive_count(int degree);

/// Parses the line format `degree index order [label] gen1 gen2 ...`.
/// `#` starts a comment, blank lines are ignored. Throws CatalogError on a
/// syntax error, a duplicate (degree, index), a degree above 11, or an empty
/// stream.
Catalog load_catalog(std::istream &in);
Catalog load_catalog_text(std::string_view text);

/// The embedded catalog, or the file named by HGE_CATALOG_PATH when set.
Catalog default_catalog();

/// Writes the catalog back in the same line format.
std::string serialize_catalog(Catalog const &catalog);

enum class VerifyLevel { basic, strong };

struct VerificationReport
{
  int degree = 0;
  int entry_count = 0;
  int expected_count = 0;
  bool strong_checked = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// basic: indices 1..n without gaps, orders non-decreasing, each entry
/// transitive with its claimed order, count equal to the published total.
/// strong: additionally, entries are pairwise non-conjugate in S_g.
VerificationReport verify_catalog(Catalog const &catalog, int degree,
                                  VerifyLevel level);

/// Entries of order g, verified pairwise non-isomorphic; these are the
/// regular type representatives. Throws CatalogError if two of them are
/// isomorphic.
std::vector<TransitiveGroupEntry> regular_representatives(Catalog const &catalog,
                                                          int degree);

struct OrderBound
{
  std::uint64_t bound = 0;  // max |Hol(N)| over the representatives
  int count_max = 0;        // entries with order <= bound
};

OrderBound max_order_bound(Catalog const &catalog, int degree);

} // namespace hge

#endif // HGE_CATALOG_HPP
