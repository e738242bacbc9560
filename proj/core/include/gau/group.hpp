#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gau/error.hpp"

namespace gau {

/// Finite group as an explicit multiplication table.  Identity is element 0.
/// Direct products index elements in mixed radix with the leftmost factor
/// slowest; dihedral factors list rotations y^b first, then reflections x*y^b.
struct GroupTable {
  int order = 0;
  std::vector<int> mul;  // order x order, row-major: mul[a*order+b] = a*b
  std::vector<int> inv;
  std::vector<std::string> names;
  std::vector<std::pair<std::string, int>> generators;
  std::string spec;  // the string this table was built from, when parsed

  int at(int a, int b) const { return mul[std::size_t(a) * order + b]; }
  int pow(int g, std::uint64_t e) const;
  int element_order(int g) const;
  int generator(std::string_view name) const;  // errc::parse if unknown
};

GroupTable cyclic_group(int n);
GroupTable dihedral_group(int n);  // n = group order, even and >= 2
GroupTable direct_product(const GroupTable& A, const GroupTable& B);

/// Parse "C<n>" / "D<n>" terms joined by 'x' (case sensitive, no whitespace)
/// and build the direct product left to right.  Throws errc::parse with the
/// byte position, errc::odd_dihedral for D<odd>.
GroupTable build_group(std::string_view spec);

struct ClassPartition {
  std::vector<std::vector<int>> classes;  // each sorted; classes sorted by min element
  std::vector<int> representative;        // min element per class
  std::vector<int> class_of;              // element -> class index, -1 if excluded

  int count() const { return int(classes.size()); }
};

ClassPartition conjugacy_classes(const GroupTable& G);

/// Conjugacy classes of the p-regular elements (order coprime to p) plus the
/// lcm m of their element orders.
struct PRegular {
  ClassPartition classes;
  std::uint64_t m = 1;
};
PRegular p_regular_classes(const GroupTable& G, std::uint64_t p);

std::vector<int> subgroup_generated(const GroupTable& G, const std::vector<int>& gens);
std::vector<int> derived_subgroup(const GroupTable& G);
bool is_abelian(const GroupTable& G);

/// Quotient by a normal subgroup given as its sorted element set.  Cosets are
/// indexed by their minimal element, so the coset of the identity is 0.
/// Throws errc::not_normal if N is not a normal subgroup.
struct Quotient {
  GroupTable group;
  std::vector<int> proj;  // element of G -> element of group
};
Quotient quotient_by(const GroupTable& G, const std::vector<int>& normal);

struct DerivedQuotient {
  std::vector<int> derived;
  Quotient quotient;
};
DerivedQuotient derived_quotient(const GroupTable& G);

}  // namespace gau
