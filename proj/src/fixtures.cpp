#include "conjlab/fixtures.hpp"

namespace conjlab {
namespace fixtures {

const char* kMon8 = R"(# 8-element monoid: 0 zero, 1 identity
8
0 0 0 0 0 0 0 0
0 1 2 3 4 5 6 7
0 2 6 6 3 2 6 2
0 3 6 6 3 2 6 2
0 4 6 6 4 5 6 5
0 5 6 6 4 5 6 5
0 6 6 6 6 6 6 6
0 7 2 3 4 5 6 7
identity=1
zero=0
)";

const char* kFlip4 = R"(# 4-element flip semigroup
4
0 0 3 3
1 1 2 2
2 2 1 1
3 3 0 0
)";

const char* kClifford8 = R"(# Clifford monoid: semilattice of S3 and Z2
8
0 1 2 3 4 5 0 3
1 2 0 5 3 4 1 5
2 0 1 4 5 3 2 4
3 4 5 0 1 2 3 0
4 5 3 2 0 1 4 2
5 3 4 1 2 0 5 1
0 1 2 3 4 5 6 7
3 4 5 0 1 2 7 6
identity=6
label 0 e
label 1 r1
label 2 r2
label 3 s1
label 4 s2
label 5 s3
label 6 f
label 7 c
)";

const char* kCr7 = R"(# 7-element completely regular semigroup
7
0 0 0 0 0 0 0
1 1 1 1 1 1 1
2 2 2 2 2 2 2
0 1 0 3 3 5 5
2 1 2 4 4 6 6
1 0 1 5 5 3 3
1 2 1 6 6 4 4
)";

const char* kOrd3a = R"(# zero, left identity, rest zero
3
0 0 0
0 0 0
0 1 2
zero=0
)";

const char* kOrd3b = R"(# zero, all other products 1
3
0 0 0
0 1 1
0 1 1
zero=0
)";

CayleyTable mon8() { return parse_cayley_string(kMon8); }
CayleyTable flip4() { return parse_cayley_string(kFlip4); }
CayleyTable clifford8() { return parse_cayley_string(kClifford8); }
CayleyTable cr7() { return parse_cayley_string(kCr7); }
CayleyTable ord3a() { return parse_cayley_string(kOrd3a); }
CayleyTable ord3b() { return parse_cayley_string(kOrd3b); }

std::vector<Named> all() {
  return {
      {"mon8", mon8()},       {"flip4", flip4()}, {"clifford8", clifford8()},
      {"cr7", cr7()},         {"ord3a", ord3a()}, {"ord3b", ord3b()},
      {"truncadd3", truncated_addition(3)},
  };
}

}  // namespace fixtures
}  // namespace conjlab
