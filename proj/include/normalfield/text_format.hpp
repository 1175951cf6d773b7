#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "normalfield/factor.hpp"
#include "normalfield/groupring.hpp"
#include "normalfield/tower.hpp"

namespace nf {

// Text encodings shared by the CLI and tests.
//
//   polynomial      "c0,c1,...,cd"      constant term first; each c_i is the
//                                       canonical code of an F_q element
//                                       (the residue itself when q = p)
//   field element   "g0;g1;...;g(n-1)"  one group per y^i, each group k
//                                       comma-separated F_p digits, low first
//   group ring elt  same layout as a field element, group i is the
//                                       coefficient of x^i
//
// Malformed text raises UsageError.

std::vector<std::uint32_t> parse_uint_list(std::string_view text, char sep = ',');

FqPoly parse_poly(const SmallFieldPtr& field, std::string_view text);
std::string format_poly(const FqPoly& f);

FieldElement parse_element(const FieldTower& tower, std::string_view text);
GroupRingElement parse_group_ring_element(const GroupRing& ring, std::string_view text);

}  // namespace nf
