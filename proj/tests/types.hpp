#pragma once

#include <vector>

#include "sphclass/rootsys.hpp"

namespace testing_types {

using sphclass::rootsys::Family;
using sphclass::rootsys::SimpleType;

// Every valid simple type of rank at most max_rank, each isomorphism class once.
inline std::vector<SimpleType> simple_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= 8 && n <= max_rank; ++n) out.push_back({Family::E, n});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

}  // namespace testing_types
