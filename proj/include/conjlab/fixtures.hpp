// fixtures.hpp
// Bundled small semigroups used throughout the test and verification
// suites, in the repository's Cayley text format.

#ifndef CONJLAB_FIXTURES_HPP
#define CONJLAB_FIXTURES_HPP

#include <string>
#include <vector>

#include "conjlab/cayley.hpp"

namespace conjlab {
namespace fixtures {

// 8-element monoid with zero whose elements 2 and 3 are primary- and
// c-conjugate and D-related but not naturally conjugate.
extern const char* kMon8;
// 4-element flip semigroup where witness normalization is a strict
// domain extension.
extern const char* kFlip4;
// 8-element Clifford monoid (two-group semilattice) with the skewed
// centralizers.
extern const char* kClifford8;
// 7-element completely regular semigroup on which single-conjugator
// i-conjugacy fails to be transitive.
extern const char* kCr7;
// 3-element semigroups where the natural partial order meets primary
// (resp. c-) conjugacy nontrivially.
extern const char* kOrd3a;
extern const char* kOrd3b;

CayleyTable mon8();
CayleyTable flip4();
CayleyTable clifford8();
CayleyTable cr7();
CayleyTable ord3a();
CayleyTable ord3b();

struct Named {
  std::string name;
  CayleyTable table;
};

// All bundled fixtures plus the truncated-addition epigroup with n = 3.
std::vector<Named> all();

}  // namespace fixtures
}  // namespace conjlab

#endif  // CONJLAB_FIXTURES_HPP
