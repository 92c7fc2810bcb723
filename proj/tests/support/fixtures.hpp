#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tqr/char_table.hpp"
#include "tqr/group.hpp"

namespace tqr::fx {

struct Fixture {
  std::string name;
  GroupSpec spec;
};

/// Cyclic n <= 64, dihedral n <= 16, S3..S5, A4, A5, Q8, extraspecial p^3 for
/// p in {3, 5}, affine(p) for p in {5, 7, 11, 13}, a few direct products, and
/// the two matrix groups below.
std::vector<Fixture> all_fixtures();
/// The fixtures with at most `max_order` elements and no cyclic n > 12, for
/// the heavier randomized properties.
std::vector<Fixture> small_fixtures(std::size_t max_order = 200);

/// SL(2, 5) as a Cayley table on 2x2 matrices over F_5 of determinant 1.
GroupSpec sl2_5();
/// PSL(2, 7) acting on the 7 points of the projective plane over F_2.
GroupSpec psl2_7();

std::shared_ptr<const CharTable> table_of(const GroupSpec& spec);
std::shared_ptr<const CharTable> table_of(const std::string& shorthand);

}  // namespace tqr::fx
