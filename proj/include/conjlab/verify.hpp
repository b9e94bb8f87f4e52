// verify.hpp
// Oracle-equivalence and exact-count verification suites.  Each function
// runs one family of checks at configurable sizes and reports per-check
// outcomes; the acceptance runner executes them at full size.

#ifndef CONJLAB_VERIFY_HPP
#define CONJLAB_VERIFY_HPP

#include <string>
#include <vector>

namespace conjlab {

struct CheckResult {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

using CheckList = std::vector<CheckResult>;

// 1. relation-chain inclusions and idempotent facts on the bundled fixtures
//    and all semigroups of order <= max_order up to isomorphism.
CheckList verify_inclusions(int max_order = 4);

// 2. exact facts on the bundled fixtures.
CheckList verify_paper_fixtures();

// 3. specialized transformation deciders against generic brute force.
CheckList verify_transformations(int tn_max = 5, int pn_max = 4, int in_max = 4,
                                 int on_max = 5, int oin_max = 5, int txy_max = 4);

// 4. diagram deciders against generic brute force on P_pn, PB_pbn, B_bn.
CheckList verify_diagrams(int pn = 3, int pbn = 3, int bn = 4);

// 5. polycyclic growth closed forms against the ball oracle.
CheckList verify_polycyclic(int oracle_max_m = 6, int series_max_m = 10);

// 6. partial inner automorphism suite.
CheckList verify_inn(int in_max = 3, int census_max = 3, int random_pairs = 10000);

// 7. abelian G-set suite.
CheckList verify_gsets(int max_orbits = 3, int max_points = 6);

// 8. Rees matrix suite.
CheckList verify_rees(int max_rows = 2, int max_cols = 2);

bool all_pass(const CheckList& checks);

}  // namespace conjlab

#endif  // CONJLAB_VERIFY_HPP
