#include "fcat/h3_symbols.hpp"

// F-symbol tables for the Haagerup fusion category H3 over the label set
// {1, a, a*, r, ar, a*r} (indices 0..5).  Each entry stores one matrix
// element of F_u^{abc} at (row q, col p) as sign * coef * p1^e1 * p2^e2,
// where (p1, p2) are the two free sign parameters of the real solution.

namespace fcat {

const H3Entry kH3Entries[] = {
    {0,0,0,0,0,0,+1,H3Coef::One,0,0},
    {0,0,1,2,0,1,+1,H3Coef::One,0,0},
    {0,0,2,1,0,2,+1,H3Coef::One,0,0},
    {0,0,3,3,0,3,+1,H3Coef::One,0,0},
    {0,0,4,4,0,4,+1,H3Coef::One,0,0},
    {0,0,5,5,0,5,+1,H3Coef::One,0,0},
    {0,1,0,2,2,1,+1,H3Coef::One,0,0},
    {0,1,1,1,2,2,+1,H3Coef::One,0,0},
    {0,1,2,0,2,0,+1,H3Coef::One,0,0},
    {0,1,3,4,2,4,+1,H3Coef::One,0,0},
    {0,1,4,5,2,5,-1,H3Coef::One,1,0},
    {0,1,5,3,2,3,+1,H3Coef::One,0,0},
    {0,2,0,1,1,2,+1,H3Coef::One,0,0},
    {0,2,1,0,1,0,+1,H3Coef::One,0,0},
    {0,2,2,2,1,1,+1,H3Coef::One,0,0},
    {0,2,3,5,1,5,+1,H3Coef::One,0,0},
    {0,2,4,3,1,3,+1,H3Coef::One,0,0},
    {0,2,5,4,1,4,-1,H3Coef::One,1,0},
    {0,3,0,3,3,3,+1,H3Coef::One,0,0},
    {0,3,1,5,3,5,+1,H3Coef::One,0,0},
    {0,3,2,4,3,4,+1,H3Coef::One,0,0},
    {0,3,3,0,3,0,+1,H3Coef::One,0,0},
    {0,3,3,3,3,3,+1,H3Coef::One,0,0},
    {0,3,3,4,3,4,+1,H3Coef::One,0,0},
    {0,3,3,5,3,5,+1,H3Coef::One,0,0},
    {0,3,4,1,3,2,+1,H3Coef::One,0,0},
    {0,3,4,3,3,3,+1,H3Coef::One,0,0},
    {0,3,4,4,3,4,+1,H3Coef::One,0,0},
    {0,3,4,5,3,5,-1,H3Coef::One,0,0},
    {0,3,5,2,3,1,+1,H3Coef::One,0,0},
    {0,3,5,3,3,3,+1,H3Coef::One,0,0},
    {0,3,5,4,3,4,+1,H3Coef::One,1,1},
    {0,3,5,5,3,5,-1,H3Coef::One,1,1},
    {0,4,0,4,4,4,+1,H3Coef::One,0,0},
    {0,4,1,3,4,3,+1,H3Coef::One,0,0},
    {0,4,2,5,4,5,+1,H3Coef::One,0,0},
    {0,4,3,2,4,1,+1,H3Coef::One,0,0},
    {0,4,3,3,4,3,+1,H3Coef::One,0,0},
    {0,4,3,4,4,4,+1,H3Coef::One,0,0},
    {0,4,3,5,4,5,+1,H3Coef::One,0,1},
    {0,4,4,0,4,0,+1,H3Coef::One,0,0},
    {0,4,4,3,4,3,+1,H3Coef::One,0,0},
    {0,4,4,4,4,4,+1,H3Coef::One,0,0},
    {0,4,4,5,4,5,-1,H3Coef::One,0,0},
    {0,4,5,1,4,2,-1,H3Coef::One,1,0},
    {0,4,5,3,4,3,+1,H3Coef::One,1,0},
    {0,4,5,4,4,4,+1,H3Coef::One,0,0},
    {0,4,5,5,4,5,-1,H3Coef::One,0,0},
    {0,5,0,5,5,5,+1,H3Coef::One,0,0},
    {0,5,1,4,5,4,+1,H3Coef::One,0,0},
    {0,5,2,3,5,3,+1,H3Coef::One,0,0},
    {0,5,3,1,5,2,+1,H3Coef::One,0,0},
    {0,5,3,3,5,3,+1,H3Coef::One,0,0},
    {0,5,3,4,5,4,-1,H3Coef::One,1,0},
    {0,5,3,5,5,5,+1,H3Coef::One,0,0},
    {0,5,4,2,5,1,-1,H3Coef::One,1,0},
    {0,5,4,3,5,3,+1,H3Coef::One,1,0},
    {0,5,4,4,5,4,-1,H3Coef::One,0,0},
    {0,5,4,5,5,5,+1,H3Coef::One,0,0},
    {0,5,5,0,5,0,+1,H3Coef::One,0,0},
    {0,5,5,3,5,3,-1,H3Coef::One,1,1},
    {0,5,5,4,5,4,-1,H3Coef::One,0,0},
    {0,5,5,5,5,5,+1,H3Coef::One,0,0},
    {1,0,0,1,1,0,+1,H3Coef::One,0,0},
    {1,0,1,0,1,1,+1,H3Coef::One,0,0},
    {1,0,2,2,1,2,+1,H3Coef::One,0,0},
    {1,0,3,5,1,3,+1,H3Coef::One,0,0},
    {1,0,4,3,1,4,+1,H3Coef::One,0,0},
    {1,0,5,4,1,5,+1,H3Coef::One,0,0},
    {1,1,0,0,0,1,+1,H3Coef::One,0,0},
    {1,1,1,2,0,2,+1,H3Coef::One,0,0},
    {1,1,2,1,0,0,+1,H3Coef::One,0,0},
    {1,1,3,3,0,4,+1,H3Coef::One,0,0},
    {1,1,4,4,0,5,+1,H3Coef::One,0,0},
    {1,1,5,5,0,3,+1,H3Coef::One,0,0},
    {1,2,0,2,2,2,+1,H3Coef::One,0,0},
    {1,2,1,1,2,0,+1,H3Coef::One,0,0},
    {1,2,2,0,2,1,+1,H3Coef::One,0,0},
    {1,2,3,4,2,5,+1,H3Coef::One,0,0},
    {1,2,4,5,2,3,-1,H3Coef::One,1,0},
    {1,2,5,3,2,4,-1,H3Coef::One,1,0},
    {1,3,0,5,5,3,+1,H3Coef::One,0,0},
    {1,3,1,4,5,5,-1,H3Coef::One,1,0},
    {1,3,2,3,5,4,-1,H3Coef::One,0,0},
    {1,3,3,1,5,0,+1,H3Coef::One,0,0},
    {1,3,3,3,5,4,+1,H3Coef::One,0,0},
    {1,3,3,4,5,5,+1,H3Coef::One,0,0},
    {1,3,3,5,5,3,+1,H3Coef::One,0,0},
    {1,3,4,2,5,2,-1,H3Coef::One,1,0},
    {1,3,4,3,5,4,+1,H3Coef::One,1,0},
    {1,3,4,4,5,5,+1,H3Coef::One,1,0},
    {1,3,4,5,5,3,+1,H3Coef::One,0,0},
    {1,3,5,0,5,1,+1,H3Coef::One,0,0},
    {1,3,5,3,5,4,-1,H3Coef::One,1,1},
    {1,3,5,4,5,5,+1,H3Coef::One,1,0},
    {1,3,5,5,5,3,+1,H3Coef::One,0,0},
    {1,4,0,3,3,4,+1,H3Coef::One,0,0},
    {1,4,1,5,3,3,-1,H3Coef::One,0,0},
    {1,4,2,4,3,5,-1,H3Coef::One,0,0},
    {1,4,3,0,3,1,+1,H3Coef::One,0,0},
    {1,4,3,3,3,4,+1,H3Coef::One,0,0},
    {1,4,3,4,3,5,+1,H3Coef::One,0,0},
    {1,4,3,5,3,3,-1,H3Coef::One,0,0},
    {1,4,4,1,3,0,+1,H3Coef::One,0,0},
    {1,4,4,3,3,4,+1,H3Coef::One,0,0},
    {1,4,4,4,3,5,+1,H3Coef::One,0,0},
    {1,4,4,5,3,3,-1,H3Coef::One,0,0},
    {1,4,5,2,3,2,-1,H3Coef::One,1,0},
    {1,4,5,3,3,4,+1,H3Coef::One,0,0},
    {1,4,5,4,3,5,+1,H3Coef::One,0,0},
    {1,4,5,5,3,3,-1,H3Coef::One,1,1},
    {1,5,0,4,4,5,+1,H3Coef::One,0,0},
    {1,5,1,3,4,4,+1,H3Coef::One,1,0},
    {1,5,2,5,4,3,+1,H3Coef::One,0,0},
    {1,5,3,2,4,2,+1,H3Coef::One,0,0},
    {1,5,3,3,4,4,+1,H3Coef::One,1,0},
    {1,5,3,4,4,5,+1,H3Coef::One,0,0},
    {1,5,3,5,4,3,+1,H3Coef::One,0,1},
    {1,5,4,0,4,1,+1,H3Coef::One,0,0},
    {1,5,4,3,4,4,-1,H3Coef::One,1,0},
    {1,5,4,4,4,5,+1,H3Coef::One,0,0},
    {1,5,4,5,4,3,-1,H3Coef::One,0,0},
    {1,5,5,1,4,0,+1,H3Coef::One,0,0},
    {1,5,5,3,4,4,-1,H3Coef::One,0,0},
    {1,5,5,4,4,5,+1,H3Coef::One,0,0},
    {1,5,5,5,4,3,-1,H3Coef::One,1,1},
    {2,0,0,2,2,0,+1,H3Coef::One,0,0},
    {2,0,1,1,2,1,+1,H3Coef::One,0,0},
    {2,0,2,0,2,2,+1,H3Coef::One,0,0},
    {2,0,3,4,2,3,+1,H3Coef::One,0,0},
    {2,0,4,5,2,4,+1,H3Coef::One,0,0},
    {2,0,5,3,2,5,+1,H3Coef::One,0,0},
    {2,1,0,1,1,1,+1,H3Coef::One,0,0},
    {2,1,1,0,1,2,+1,H3Coef::One,0,0},
    {2,1,2,2,1,0,+1,H3Coef::One,0,0},
    {2,1,3,5,1,4,-1,H3Coef::One,1,0},
    {2,1,4,3,1,5,+1,H3Coef::One,0,0},
    {2,1,5,4,1,3,+1,H3Coef::One,0,0},
    {2,2,0,0,0,2,+1,H3Coef::One,0,0},
    {2,2,1,2,0,0,+1,H3Coef::One,0,0},
    {2,2,2,1,0,1,+1,H3Coef::One,0,0},
    {2,2,3,3,0,5,+1,H3Coef::One,0,0},
    {2,2,4,4,0,3,+1,H3Coef::One,0,0},
    {2,2,5,5,0,4,+1,H3Coef::One,0,0},
    {2,3,0,4,4,3,+1,H3Coef::One,0,0},
    {2,3,1,3,4,5,-1,H3Coef::One,0,0},
    {2,3,2,5,4,4,+1,H3Coef::One,1,0},
    {2,3,3,2,4,0,+1,H3Coef::One,0,0},
    {2,3,3,3,4,5,-1,H3Coef::One,0,0},
    {2,3,3,4,4,3,+1,H3Coef::One,0,0},
    {2,3,3,5,4,4,-1,H3Coef::One,1,1},
    {2,3,4,0,4,2,+1,H3Coef::One,0,0},
    {2,3,4,3,4,5,+1,H3Coef::One,0,0},
    {2,3,4,4,4,3,+1,H3Coef::One,0,0},
    {2,3,4,5,4,4,+1,H3Coef::One,1,0},
    {2,3,5,1,4,1,+1,H3Coef::One,0,0},
    {2,3,5,3,4,5,+1,H3Coef::One,1,0},
    {2,3,5,4,4,3,+1,H3Coef::One,0,0},
    {2,3,5,5,4,4,+1,H3Coef::One,0,1},
    {2,4,0,5,5,4,+1,H3Coef::One,0,0},
    {2,4,1,4,5,3,-1,H3Coef::One,0,0},
    {2,4,2,3,5,5,-1,H3Coef::One,1,0},
    {2,4,3,1,5,1,-1,H3Coef::One,1,0},
    {2,4,3,3,5,5,-1,H3Coef::One,1,0},
    {2,4,3,4,5,3,+1,H3Coef::One,1,0},
    {2,4,3,5,5,4,+1,H3Coef::One,0,0},
    {2,4,4,2,5,0,+1,H3Coef::One,0,0},
    {2,4,4,3,5,5,-1,H3Coef::One,0,0},
    {2,4,4,4,5,3,-1,H3Coef::One,0,0},
    {2,4,4,5,5,4,+1,H3Coef::One,0,0},
    {2,4,5,0,5,2,+1,H3Coef::One,0,0},
    {2,4,5,3,5,5,+1,H3Coef::One,1,0},
    {2,4,5,4,5,3,-1,H3Coef::One,0,0},
    {2,4,5,5,5,4,+1,H3Coef::One,0,0},
    {2,5,0,3,3,5,+1,H3Coef::One,0,0},
    {2,5,1,5,3,4,+1,H3Coef::One,0,0},
    {2,5,2,4,3,3,-1,H3Coef::One,0,0},
    {2,5,3,0,3,2,+1,H3Coef::One,0,0},
    {2,5,3,3,3,5,+1,H3Coef::One,0,0},
    {2,5,3,4,3,3,+1,H3Coef::One,0,0},
    {2,5,3,5,3,4,+1,H3Coef::One,0,0},
    {2,5,4,1,3,1,+1,H3Coef::One,0,0},
    {2,5,4,3,3,5,+1,H3Coef::One,0,0},
    {2,5,4,4,3,3,+1,H3Coef::One,0,0},
    {2,5,4,5,3,4,-1,H3Coef::One,0,0},
    {2,5,5,2,3,0,+1,H3Coef::One,0,0},
    {2,5,5,3,3,5,+1,H3Coef::One,0,0},
    {2,5,5,4,3,3,+1,H3Coef::One,1,1},
    {2,5,5,5,3,4,-1,H3Coef::One,1,1},
    {3,0,0,3,3,0,+1,H3Coef::One,0,0},
    {3,0,1,5,3,1,+1,H3Coef::One,0,0},
    {3,0,2,4,3,2,+1,H3Coef::One,0,0},
    {3,0,3,0,3,3,+1,H3Coef::One,0,0},
    {3,0,3,3,3,3,+1,H3Coef::One,0,0},
    {3,0,3,4,3,3,+1,H3Coef::One,0,0},
    {3,0,3,5,3,3,+1,H3Coef::One,0,0},
    {3,0,4,1,3,4,+1,H3Coef::One,0,0},
    {3,0,4,3,3,4,+1,H3Coef::One,0,0},
    {3,0,4,4,3,4,+1,H3Coef::One,0,0},
    {3,0,4,5,3,4,+1,H3Coef::One,0,0},
    {3,0,5,2,3,5,+1,H3Coef::One,0,0},
    {3,0,5,3,3,5,+1,H3Coef::One,0,0},
    {3,0,5,4,3,5,+1,H3Coef::One,0,0},
    {3,0,5,5,3,5,+1,H3Coef::One,0,0},
    {3,1,0,5,5,1,+1,H3Coef::One,0,0},
    {3,1,1,4,5,2,+1,H3Coef::One,0,0},
    {3,1,2,3,5,0,+1,H3Coef::One,0,0},
    {3,1,3,1,5,4,-1,H3Coef::One,0,0},
    {3,1,3,3,5,4,-1,H3Coef::One,0,0},
    {3,1,3,4,5,4,+1,H3Coef::One,0,0},
    {3,1,3,5,5,4,+1,H3Coef::One,0,0},
    {3,1,4,2,5,5,+1,H3Coef::One,0,0},
    {3,1,4,3,5,5,+1,H3Coef::One,0,0},
    {3,1,4,4,5,5,+1,H3Coef::One,0,0},
    {3,1,4,5,5,5,+1,H3Coef::One,1,1},
    {3,1,5,0,5,3,+1,H3Coef::One,0,0},
    {3,1,5,3,5,3,+1,H3Coef::One,0,0},
    {3,1,5,4,5,3,+1,H3Coef::One,0,0},
    {3,1,5,5,5,3,+1,H3Coef::One,0,0},
    {3,2,0,4,4,2,+1,H3Coef::One,0,0},
    {3,2,1,3,4,0,+1,H3Coef::One,0,0},
    {3,2,2,5,4,1,-1,H3Coef::One,1,0},
    {3,2,3,2,4,5,-1,H3Coef::One,0,0},
    {3,2,3,3,4,5,+1,H3Coef::One,0,0},
    {3,2,3,4,4,5,+1,H3Coef::One,0,0},
    {3,2,3,5,4,5,+1,H3Coef::One,0,0},
    {3,2,4,0,4,3,+1,H3Coef::One,0,0},
    {3,2,4,3,4,3,+1,H3Coef::One,0,0},
    {3,2,4,4,4,3,+1,H3Coef::One,0,0},
    {3,2,4,5,4,3,+1,H3Coef::One,0,0},
    {3,2,5,1,4,4,-1,H3Coef::One,0,0},
    {3,2,5,3,4,4,-1,H3Coef::One,0,0},
    {3,2,5,4,4,4,+1,H3Coef::One,0,0},
    {3,2,5,5,4,4,+1,H3Coef::One,0,0},
    {3,3,0,0,0,3,+1,H3Coef::One,0,0},
    {3,3,0,3,3,3,+1,H3Coef::One,0,0},
    {3,3,0,4,4,3,+1,H3Coef::One,0,0},
    {3,3,0,5,5,3,+1,H3Coef::One,0,0},
    {3,3,1,2,0,5,+1,H3Coef::One,0,0},
    {3,3,1,3,4,5,-1,H3Coef::One,0,0},
    {3,3,1,4,5,5,+1,H3Coef::One,1,0},
    {3,3,1,5,3,5,-1,H3Coef::One,1,1},
    {3,3,2,1,0,4,+1,H3Coef::One,0,0},
    {3,3,2,3,5,4,+1,H3Coef::One,0,0},
    {3,3,2,4,3,4,+1,H3Coef::One,0,0},
    {3,3,2,5,4,4,-1,H3Coef::One,1,0},
    {3,3,3,0,3,3,+1,H3Coef::One,0,0},
    {3,3,3,1,5,4,-1,H3Coef::One,0,0},
    {3,3,3,2,4,5,+1,H3Coef::One,0,0},
    {3,3,4,0,4,3,+1,H3Coef::One,0,0},
    {3,3,4,1,3,4,+1,H3Coef::One,0,0},
    {3,3,4,2,5,5,-1,H3Coef::One,1,0},
    {3,3,5,0,5,3,+1,H3Coef::One,0,0},
    {3,3,5,1,4,4,+1,H3Coef::One,0,1},
    {3,3,5,2,3,5,+1,H3Coef::One,0,0},
    {3,4,0,1,1,4,+1,H3Coef::One,0,0},
    {3,4,0,3,3,4,+1,H3Coef::One,0,0},
    {3,4,0,4,4,4,+1,H3Coef::One,0,0},
    {3,4,0,5,5,4,+1,H3Coef::One,0,0},
    {3,4,1,0,1,3,+1,H3Coef::One,0,0},
    {3,4,1,3,4,3,+1,H3Coef::One,0,0},
    {3,4,1,4,5,3,+1,H3Coef::One,0,0},
    {3,4,1,5,3,3,+1,H3Coef::One,0,0},
    {3,4,2,2,1,5,-1,H3Coef::One,1,0},
    {3,4,2,3,5,5,+1,H3Coef::One,1,0},
    {3,4,2,4,3,5,-1,H3Coef::One,0,0},
    {3,4,2,5,4,5,-1,H3Coef::One,1,1},
    {3,4,3,0,3,3,+1,H3Coef::One,0,0},
    {3,4,3,1,5,4,-1,H3Coef::One,0,0},
    {3,4,3,2,4,5,+1,H3Coef::One,1,0},
    {3,4,4,0,4,3,+1,H3Coef::One,0,0},
    {3,4,4,1,3,4,+1,H3Coef::One,0,0},
    {3,4,4,2,5,5,+1,H3Coef::One,0,0},
    {3,4,5,0,5,3,+1,H3Coef::One,0,0},
    {3,4,5,1,4,4,-1,H3Coef::One,0,0},
    {3,4,5,2,3,5,+1,H3Coef::One,0,0},
    {3,5,0,2,2,5,+1,H3Coef::One,0,0},
    {3,5,0,3,3,5,+1,H3Coef::One,0,0},
    {3,5,0,4,4,5,+1,H3Coef::One,0,0},
    {3,5,0,5,5,5,+1,H3Coef::One,0,0},
    {3,5,1,1,2,4,+1,H3Coef::One,0,0},
    {3,5,1,3,4,4,+1,H3Coef::One,1,0},
    {3,5,1,4,5,4,-1,H3Coef::One,1,1},
    {3,5,1,5,3,4,-1,H3Coef::One,0,0},
    {3,5,2,0,2,3,+1,H3Coef::One,0,0},
    {3,5,2,3,5,3,-1,H3Coef::One,1,1},
    {3,5,2,4,3,3,-1,H3Coef::One,0,0},
    {3,5,2,5,4,3,-1,H3Coef::One,0,0},
    {3,5,3,0,3,3,+1,H3Coef::One,0,0},
    {3,5,3,1,5,4,-1,H3Coef::One,0,1},
    {3,5,3,2,4,5,-1,H3Coef::One,0,0},
    {3,5,4,0,4,3,+1,H3Coef::One,0,0},
    {3,5,4,1,3,4,+1,H3Coef::One,0,0},
    {3,5,4,2,5,5,+1,H3Coef::One,1,1},
    {3,5,5,0,5,3,+1,H3Coef::One,0,0},
    {3,5,5,1,4,4,-1,H3Coef::One,0,0},
    {3,5,5,2,3,5,+1,H3Coef::One,0,0},
    {4,0,0,4,4,0,+1,H3Coef::One,0,0},
    {4,0,1,3,4,1,+1,H3Coef::One,0,0},
    {4,0,2,5,4,2,+1,H3Coef::One,0,0},
    {4,0,3,2,4,3,+1,H3Coef::One,0,0},
    {4,0,3,3,4,3,+1,H3Coef::One,0,0},
    {4,0,3,4,4,3,+1,H3Coef::One,0,0},
    {4,0,3,5,4,3,+1,H3Coef::One,0,0},
    {4,0,4,0,4,4,+1,H3Coef::One,0,0},
    {4,0,4,3,4,4,+1,H3Coef::One,0,0},
    {4,0,4,4,4,4,+1,H3Coef::One,0,0},
    {4,0,4,5,4,4,+1,H3Coef::One,0,0},
    {4,0,5,1,4,5,+1,H3Coef::One,0,0},
    {4,0,5,3,4,5,+1,H3Coef::One,0,0},
    {4,0,5,4,4,5,+1,H3Coef::One,0,0},
    {4,0,5,5,4,5,+1,H3Coef::One,0,0},
    {4,1,0,3,3,1,+1,H3Coef::One,0,0},
    {4,1,1,5,3,2,-1,H3Coef::One,1,0},
    {4,1,2,4,3,0,+1,H3Coef::One,0,0},
    {4,1,3,0,3,4,+1,H3Coef::One,0,0},
    {4,1,3,3,3,4,+1,H3Coef::One,0,0},
    {4,1,3,4,3,4,+1,H3Coef::One,0,0},
    {4,1,3,5,3,4,+1,H3Coef::One,0,0},
    {4,1,4,1,3,5,+1,H3Coef::One,1,0},
    {4,1,4,3,3,5,+1,H3Coef::One,1,0},
    {4,1,4,4,3,5,-1,H3Coef::One,1,0},
    {4,1,4,5,3,5,-1,H3Coef::One,1,0},
    {4,1,5,2,3,3,-1,H3Coef::One,0,0},
    {4,1,5,3,3,3,+1,H3Coef::One,0,0},
    {4,1,5,4,3,3,+1,H3Coef::One,0,0},
    {4,1,5,5,3,3,+1,H3Coef::One,0,0},
    {4,2,0,5,5,2,+1,H3Coef::One,0,0},
    {4,2,1,4,5,0,-1,H3Coef::One,1,0},
    {4,2,2,3,5,1,-1,H3Coef::One,1,0},
    {4,2,3,1,5,5,+1,H3Coef::One,0,0},
    {4,2,3,3,5,5,+1,H3Coef::One,0,0},
    {4,2,3,4,5,5,+1,H3Coef::One,0,0},
    {4,2,3,5,5,5,+1,H3Coef::One,0,0},
    {4,2,4,2,5,3,+1,H3Coef::One,1,0},
    {4,2,4,3,5,3,-1,H3Coef::One,1,0},
    {4,2,4,4,5,3,-1,H3Coef::One,1,0},
    {4,2,4,5,5,3,-1,H3Coef::One,0,1},
    {4,2,5,0,5,4,+1,H3Coef::One,0,0},
    {4,2,5,3,5,4,+1,H3Coef::One,0,0},
    {4,2,5,4,5,4,+1,H3Coef::One,0,0},
    {4,2,5,5,5,4,+1,H3Coef::One,0,0},
    {4,3,0,2,2,3,+1,H3Coef::One,0,0},
    {4,3,0,3,3,3,+1,H3Coef::One,0,0},
    {4,3,0,4,4,3,+1,H3Coef::One,0,0},
    {4,3,0,5,5,3,+1,H3Coef::One,0,0},
    {4,3,1,1,2,5,+1,H3Coef::One,0,0},
    {4,3,1,3,4,5,-1,H3Coef::One,1,0},
    {4,3,1,4,5,5,-1,H3Coef::One,1,1},
    {4,3,1,5,3,5,-1,H3Coef::One,0,0},
    {4,3,2,0,2,4,+1,H3Coef::One,0,0},
    {4,3,2,3,5,4,+1,H3Coef::One,1,1},
    {4,3,2,4,3,4,+1,H3Coef::One,0,0},
    {4,3,2,5,4,4,+1,H3Coef::One,0,0},
    {4,3,3,0,3,4,+1,H3Coef::One,0,0},
    {4,3,3,1,5,5,+1,H3Coef::One,0,1},
    {4,3,3,2,4,3,+1,H3Coef::One,0,0},
    {4,3,4,0,4,4,+1,H3Coef::One,0,0},
    {4,3,4,1,3,5,-1,H3Coef::One,0,0},
    {4,3,4,2,5,3,-1,H3Coef::One,1,1},
    {4,3,5,0,5,4,+1,H3Coef::One,0,0},
    {4,3,5,1,4,5,+1,H3Coef::One,0,0},
    {4,3,5,2,3,3,-1,H3Coef::One,0,0},
    {4,4,0,0,0,4,+1,H3Coef::One,0,0},
    {4,4,0,3,3,4,+1,H3Coef::One,0,0},
    {4,4,0,4,4,4,+1,H3Coef::One,0,0},
    {4,4,0,5,5,4,+1,H3Coef::One,0,0},
    {4,4,1,2,0,3,+1,H3Coef::One,0,0},
    {4,4,1,3,4,3,+1,H3Coef::One,0,0},
    {4,4,1,4,5,3,-1,H3Coef::One,1,0},
    {4,4,1,5,3,3,+1,H3Coef::One,1,1},
    {4,4,2,1,0,5,-1,H3Coef::One,1,0},
    {4,4,2,3,5,5,-1,H3Coef::One,1,0},
    {4,4,2,4,3,5,+1,H3Coef::One,1,0},
    {4,4,2,5,4,5,-1,H3Coef::One,0,0},
    {4,4,3,0,3,4,+1,H3Coef::One,0,0},
    {4,4,3,1,5,5,-1,H3Coef::One,1,0},
    {4,4,3,2,4,3,+1,H3Coef::One,0,0},
    {4,4,4,0,4,4,+1,H3Coef::One,0,0},
    {4,4,4,1,3,5,+1,H3Coef::One,1,0},
    {4,4,4,2,5,3,+1,H3Coef::One,1,0},
    {4,4,5,0,5,4,+1,H3Coef::One,0,0},
    {4,4,5,1,4,5,+1,H3Coef::One,0,0},
    {4,4,5,2,3,3,-1,H3Coef::One,0,0},
    {4,5,0,1,1,5,+1,H3Coef::One,0,0},
    {4,5,0,3,3,5,+1,H3Coef::One,0,0},
    {4,5,0,4,4,5,+1,H3Coef::One,0,0},
    {4,5,0,5,5,5,+1,H3Coef::One,0,0},
    {4,5,1,0,1,4,+1,H3Coef::One,0,0},
    {4,5,1,3,4,4,-1,H3Coef::One,0,0},
    {4,5,1,4,5,4,-1,H3Coef::One,0,0},
    {4,5,1,5,3,4,+1,H3Coef::One,0,0},
    {4,5,2,2,1,3,+1,H3Coef::One,0,0},
    {4,5,2,3,5,3,-1,H3Coef::One,0,0},
    {4,5,2,4,3,3,-1,H3Coef::One,1,0},
    {4,5,2,5,4,3,+1,H3Coef::One,0,1},
    {4,5,3,0,3,4,+1,H3Coef::One,0,0},
    {4,5,3,1,5,5,+1,H3Coef::One,0,0},
    {4,5,3,2,4,3,+1,H3Coef::One,0,0},
    {4,5,4,0,4,4,+1,H3Coef::One,0,0},
    {4,5,4,1,3,5,+1,H3Coef::One,0,0},
    {4,5,4,2,5,3,+1,H3Coef::One,1,0},
    {4,5,5,0,5,4,+1,H3Coef::One,0,0},
    {4,5,5,1,4,5,+1,H3Coef::One,0,0},
    {4,5,5,2,3,3,-1,H3Coef::One,0,1},
    {5,0,0,5,5,0,+1,H3Coef::One,0,0},
    {5,0,1,4,5,1,+1,H3Coef::One,0,0},
    {5,0,2,3,5,2,+1,H3Coef::One,0,0},
    {5,0,3,1,5,3,+1,H3Coef::One,0,0},
    {5,0,3,3,5,3,+1,H3Coef::One,0,0},
    {5,0,3,4,5,3,+1,H3Coef::One,0,0},
    {5,0,3,5,5,3,+1,H3Coef::One,0,0},
    {5,0,4,2,5,4,+1,H3Coef::One,0,0},
    {5,0,4,3,5,4,+1,H3Coef::One,0,0},
    {5,0,4,4,5,4,+1,H3Coef::One,0,0},
    {5,0,4,5,5,4,+1,H3Coef::One,0,0},
    {5,0,5,0,5,5,+1,H3Coef::One,0,0},
    {5,0,5,3,5,5,+1,H3Coef::One,0,0},
    {5,0,5,4,5,5,+1,H3Coef::One,0,0},
    {5,0,5,5,5,5,+1,H3Coef::One,0,0},
    {5,1,0,4,4,1,+1,H3Coef::One,0,0},
    {5,1,1,3,4,2,+1,H3Coef::One,0,0},
    {5,1,2,5,4,0,-1,H3Coef::One,1,0},
    {5,1,3,2,4,4,-1,H3Coef::One,0,0},
    {5,1,3,3,4,4,+1,H3Coef::One,0,0},
    {5,1,3,4,4,4,+1,H3Coef::One,0,0},
    {5,1,3,5,4,4,+1,H3Coef::One,1,1},
    {5,1,4,0,4,5,+1,H3Coef::One,0,0},
    {5,1,4,3,4,5,+1,H3Coef::One,0,0},
    {5,1,4,4,4,5,+1,H3Coef::One,0,0},
    {5,1,4,5,4,5,+1,H3Coef::One,0,0},
    {5,1,5,1,4,3,-1,H3Coef::One,1,0},
    {5,1,5,3,4,3,-1,H3Coef::One,1,0},
    {5,1,5,4,4,3,-1,H3Coef::One,1,0},
    {5,1,5,5,4,3,-1,H3Coef::One,1,0},
    {5,2,0,3,3,2,+1,H3Coef::One,0,0},
    {5,2,1,5,3,0,+1,H3Coef::One,0,0},
    {5,2,2,4,3,1,+1,H3Coef::One,0,0},
    {5,2,3,0,3,5,+1,H3Coef::One,0,0},
    {5,2,3,3,3,5,+1,H3Coef::One,0,0},
    {5,2,3,4,3,5,+1,H3Coef::One,0,0},
    {5,2,3,5,3,5,+1,H3Coef::One,0,0},
    {5,2,4,1,3,3,-1,H3Coef::One,0,0},
    {5,2,4,3,3,3,-1,H3Coef::One,0,0},
    {5,2,4,4,3,3,+1,H3Coef::One,0,0},
    {5,2,4,5,3,3,+1,H3Coef::One,0,0},
    {5,2,5,2,3,4,-1,H3Coef::One,1,0},
    {5,2,5,3,3,4,-1,H3Coef::One,1,0},
    {5,2,5,4,3,4,-1,H3Coef::One,1,0},
    {5,2,5,5,3,4,-1,H3Coef::One,0,1},
    {5,3,0,1,1,3,+1,H3Coef::One,0,0},
    {5,3,0,3,3,3,+1,H3Coef::One,0,0},
    {5,3,0,4,4,3,+1,H3Coef::One,0,0},
    {5,3,0,5,5,3,+1,H3Coef::One,0,0},
    {5,3,1,0,1,5,+1,H3Coef::One,0,0},
    {5,3,1,3,4,5,-1,H3Coef::One,0,0},
    {5,3,1,4,5,5,-1,H3Coef::One,0,0},
    {5,3,1,5,3,5,+1,H3Coef::One,0,0},
    {5,3,2,2,1,4,-1,H3Coef::One,1,0},
    {5,3,2,3,5,4,-1,H3Coef::One,1,0},
    {5,3,2,4,3,4,-1,H3Coef::One,0,0},
    {5,3,2,5,4,4,+1,H3Coef::One,0,0},
    {5,3,3,0,3,5,+1,H3Coef::One,0,0},
    {5,3,3,1,5,3,+1,H3Coef::One,0,0},
    {5,3,3,2,4,4,+1,H3Coef::One,1,0},
    {5,3,4,0,4,5,+1,H3Coef::One,0,0},
    {5,3,4,1,3,3,+1,H3Coef::One,0,0},
    {5,3,4,2,5,4,+1,H3Coef::One,0,0},
    {5,3,5,0,5,5,+1,H3Coef::One,0,0},
    {5,3,5,1,4,3,+1,H3Coef::One,0,0},
    {5,3,5,2,3,4,-1,H3Coef::One,1,1},
    {5,4,0,2,2,4,+1,H3Coef::One,0,0},
    {5,4,0,3,3,4,+1,H3Coef::One,0,0},
    {5,4,0,4,4,4,+1,H3Coef::One,0,0},
    {5,4,0,5,5,4,+1,H3Coef::One,0,0},
    {5,4,1,1,2,3,-1,H3Coef::One,1,0},
    {5,4,1,3,4,3,-1,H3Coef::One,0,0},
    {5,4,1,4,5,3,-1,H3Coef::One,1,0},
    {5,4,1,5,3,3,-1,H3Coef::One,1,0},
    {5,4,2,0,2,5,+1,H3Coef::One,0,0},
    {5,4,2,3,5,5,-1,H3Coef::One,0,0},
    {5,4,2,4,3,5,-1,H3Coef::One,0,0},
    {5,4,2,5,4,5,-1,H3Coef::One,0,0},
    {5,4,3,0,3,5,+1,H3Coef::One,0,0},
    {5,4,3,1,5,3,+1,H3Coef::One,0,0},
    {5,4,3,2,4,4,-1,H3Coef::One,0,0},
    {5,4,4,0,4,5,+1,H3Coef::One,0,0},
    {5,4,4,1,3,3,+1,H3Coef::One,1,0},
    {5,4,4,2,5,4,+1,H3Coef::One,0,0},
    {5,4,5,0,5,5,+1,H3Coef::One,0,0},
    {5,4,5,1,4,3,-1,H3Coef::One,1,0},
    {5,4,5,2,3,4,+1,H3Coef::One,0,0},
    {5,5,0,0,0,5,+1,H3Coef::One,0,0},
    {5,5,0,3,3,5,+1,H3Coef::One,0,0},
    {5,5,0,4,4,5,+1,H3Coef::One,0,0},
    {5,5,0,5,5,5,+1,H3Coef::One,0,0},
    {5,5,1,2,0,4,-1,H3Coef::One,1,0},
    {5,5,1,3,4,4,+1,H3Coef::One,1,0},
    {5,5,1,4,5,4,-1,H3Coef::One,0,0},
    {5,5,1,5,3,4,+1,H3Coef::One,1,0},
    {5,5,2,1,0,3,+1,H3Coef::One,0,0},
    {5,5,2,3,5,3,+1,H3Coef::One,0,0},
    {5,5,2,4,3,3,-1,H3Coef::One,0,0},
    {5,5,2,5,4,3,+1,H3Coef::One,1,0},
    {5,5,3,0,3,5,+1,H3Coef::One,0,0},
    {5,5,3,1,5,3,+1,H3Coef::One,0,0},
    {5,5,3,2,4,4,-1,H3Coef::One,1,0},
    {5,5,4,0,4,5,+1,H3Coef::One,0,0},
    {5,5,4,1,3,3,-1,H3Coef::One,0,0},
    {5,5,4,2,5,4,+1,H3Coef::One,0,0},
    {5,5,5,0,5,5,+1,H3Coef::One,0,0},
    {5,5,5,1,4,3,-1,H3Coef::One,0,1},
    {5,5,5,2,3,4,-1,H3Coef::One,1,0},
    {3,3,3,4,3,3,+1,H3Coef::Dp,0,0},
    {3,3,3,4,3,4,+1,H3Coef::Dm,0,0},
    {3,3,3,4,3,5,-1,H3Coef::C,0,0},
    {3,3,3,4,4,3,+1,H3Coef::Dm,0,0},
    {3,3,3,4,4,4,+1,H3Coef::C,0,0},
    {3,3,3,4,4,5,-1,H3Coef::Dp,0,0},
    {3,3,3,4,5,3,+1,H3Coef::C,0,0},
    {3,3,3,4,5,4,+1,H3Coef::Dp,0,0},
    {3,3,3,4,5,5,-1,H3Coef::Dm,0,0},
    {3,3,3,5,3,3,+1,H3Coef::Dm,0,0},
    {3,3,3,5,3,4,+1,H3Coef::C,0,0},
    {3,3,3,5,3,5,-1,H3Coef::Dp,1,1},
    {3,3,3,5,4,3,+1,H3Coef::C,1,1},
    {3,3,3,5,4,4,+1,H3Coef::Dp,1,1},
    {3,3,3,5,4,5,-1,H3Coef::Dm,0,0},
    {3,3,3,5,5,3,+1,H3Coef::Dp,0,0},
    {3,3,3,5,5,4,+1,H3Coef::Dm,0,0},
    {3,3,3,5,5,5,-1,H3Coef::C,1,1},
    {3,3,4,3,3,3,+1,H3Coef::Dp,0,0},
    {3,3,4,3,3,4,+1,H3Coef::Dm,0,0},
    {3,3,4,3,3,5,+1,H3Coef::C,0,0},
    {3,3,4,3,4,3,+1,H3Coef::Dm,0,0},
    {3,3,4,3,4,4,+1,H3Coef::C,0,0},
    {3,3,4,3,4,5,+1,H3Coef::Dp,0,0},
    {3,3,4,3,5,3,-1,H3Coef::C,1,0},
    {3,3,4,3,5,4,-1,H3Coef::Dp,1,0},
    {3,3,4,3,5,5,-1,H3Coef::Dm,1,0},
    {3,3,4,5,3,3,-1,H3Coef::C,1,0},
    {3,3,4,5,3,4,+1,H3Coef::Dp,0,0},
    {3,3,4,5,3,5,+1,H3Coef::Dm,1,1},
    {3,3,4,5,4,3,+1,H3Coef::Dp,0,0},
    {3,3,4,5,4,4,-1,H3Coef::Dm,1,0},
    {3,3,4,5,4,5,-1,H3Coef::C,0,1},
    {3,3,4,5,5,3,+1,H3Coef::Dm,0,0},
    {3,3,4,5,5,4,-1,H3Coef::C,1,0},
    {3,3,4,5,5,5,-1,H3Coef::Dp,0,1},
    {3,3,5,3,3,3,+1,H3Coef::Dm,0,0},
    {3,3,5,3,3,4,+1,H3Coef::C,1,1},
    {3,3,5,3,3,5,+1,H3Coef::Dp,0,0},
    {3,3,5,3,4,3,+1,H3Coef::C,1,0},
    {3,3,5,3,4,4,+1,H3Coef::Dp,0,1},
    {3,3,5,3,4,5,+1,H3Coef::Dm,1,0},
    {3,3,5,3,5,3,+1,H3Coef::Dp,0,0},
    {3,3,5,3,5,4,+1,H3Coef::Dm,1,1},
    {3,3,5,3,5,5,+1,H3Coef::C,0,0},
    {3,3,5,4,3,3,-1,H3Coef::C,1,0},
    {3,3,5,4,3,4,+1,H3Coef::Dp,1,1},
    {3,3,5,4,3,5,+1,H3Coef::Dm,0,0},
    {3,3,5,4,4,3,+1,H3Coef::Dp,0,0},
    {3,3,5,4,4,4,-1,H3Coef::Dm,0,1},
    {3,3,5,4,4,5,-1,H3Coef::C,1,0},
    {3,3,5,4,5,3,+1,H3Coef::Dm,0,0},
    {3,3,5,4,5,4,-1,H3Coef::C,0,1},
    {3,3,5,4,5,5,-1,H3Coef::Dp,1,0},
    {3,4,3,3,3,3,+1,H3Coef::Dp,0,0},
    {3,4,3,3,3,4,+1,H3Coef::Dm,0,0},
    {3,4,3,3,3,5,-1,H3Coef::C,1,0},
    {3,4,3,3,4,3,+1,H3Coef::Dm,0,0},
    {3,4,3,3,4,4,+1,H3Coef::C,0,0},
    {3,4,3,3,4,5,-1,H3Coef::Dp,1,0},
    {3,4,3,3,5,3,-1,H3Coef::C,0,0},
    {3,4,3,3,5,4,-1,H3Coef::Dp,0,0},
    {3,4,3,3,5,5,+1,H3Coef::Dm,1,0},
    {3,4,3,4,3,3,+1,H3Coef::Dm,0,0},
    {3,4,3,4,3,4,-1,H3Coef::C,1,0},
    {3,4,3,4,3,5,+1,H3Coef::Dp,0,0},
    {3,4,3,4,4,3,-1,H3Coef::C,1,0},
    {3,4,3,4,4,4,+1,H3Coef::Dp,0,0},
    {3,4,3,4,4,5,-1,H3Coef::Dm,1,0},
    {3,4,3,4,5,3,-1,H3Coef::Dp,1,0},
    {3,4,3,4,5,4,+1,H3Coef::Dm,0,0},
    {3,4,3,4,5,5,-1,H3Coef::C,1,0},
    {3,4,4,4,3,3,+1,H3Coef::C,0,0},
    {3,4,4,4,3,4,+1,H3Coef::Dp,0,0},
    {3,4,4,4,3,5,+1,H3Coef::Dm,0,0},
    {3,4,4,4,4,3,+1,H3Coef::Dp,0,0},
    {3,4,4,4,4,4,+1,H3Coef::Dm,0,0},
    {3,4,4,4,4,5,+1,H3Coef::C,0,0},
    {3,4,4,4,5,3,+1,H3Coef::Dm,0,0},
    {3,4,4,4,5,4,+1,H3Coef::C,0,0},
    {3,4,4,4,5,5,+1,H3Coef::Dp,0,0},
    {3,4,4,5,3,3,+1,H3Coef::Dp,0,0},
    {3,4,4,5,3,4,+1,H3Coef::Dm,0,0},
    {3,4,4,5,3,5,+1,H3Coef::C,1,1},
    {3,4,4,5,4,3,+1,H3Coef::Dm,0,0},
    {3,4,4,5,4,4,+1,H3Coef::C,0,0},
    {3,4,4,5,4,5,+1,H3Coef::Dp,1,1},
    {3,4,4,5,5,3,+1,H3Coef::C,0,0},
    {3,4,4,5,5,4,+1,H3Coef::Dp,0,0},
    {3,4,4,5,5,5,+1,H3Coef::Dm,1,1},
    {3,4,5,3,3,3,-1,H3Coef::C,1,0},
    {3,4,5,3,3,4,+1,H3Coef::Dp,0,0},
    {3,4,5,3,3,5,+1,H3Coef::Dm,0,0},
    {3,4,5,3,4,3,+1,H3Coef::Dp,1,0},
    {3,4,5,3,4,4,-1,H3Coef::Dm,0,0},
    {3,4,5,3,4,5,-1,H3Coef::C,0,0},
    {3,4,5,3,5,3,+1,H3Coef::Dm,0,0},
    {3,4,5,3,5,4,-1,H3Coef::C,1,0},
    {3,4,5,3,5,5,-1,H3Coef::Dp,1,0},
    {3,4,5,5,3,3,+1,H3Coef::Dm,1,1},
    {3,4,5,5,3,4,+1,H3Coef::C,1,1},
    {3,4,5,5,3,5,+1,H3Coef::Dp,0,0},
    {3,4,5,5,4,3,+1,H3Coef::C,0,0},
    {3,4,5,5,4,4,+1,H3Coef::Dp,0,0},
    {3,4,5,5,4,5,+1,H3Coef::Dm,1,1},
    {3,4,5,5,5,3,+1,H3Coef::Dp,0,0},
    {3,4,5,5,5,4,+1,H3Coef::Dm,0,0},
    {3,4,5,5,5,5,+1,H3Coef::C,1,1},
    {3,5,3,3,3,3,+1,H3Coef::Dm,0,0},
    {3,5,3,3,3,4,+1,H3Coef::C,1,0},
    {3,5,3,3,3,5,+1,H3Coef::Dp,0,0},
    {3,5,3,3,4,3,+1,H3Coef::C,0,0},
    {3,5,3,3,4,4,+1,H3Coef::Dp,1,0},
    {3,5,3,3,4,5,+1,H3Coef::Dm,0,0},
    {3,5,3,3,5,3,-1,H3Coef::Dp,1,1},
    {3,5,3,3,5,4,-1,H3Coef::Dm,0,1},
    {3,5,3,3,5,5,-1,H3Coef::C,1,1},
    {3,5,3,5,3,3,+1,H3Coef::Dp,0,0},
    {3,5,3,5,3,4,-1,H3Coef::Dm,0,0},
    {3,5,3,5,3,5,-1,H3Coef::C,0,1},
    {3,5,3,5,4,3,-1,H3Coef::Dm,0,1},
    {3,5,3,5,4,4,+1,H3Coef::C,0,1},
    {3,5,3,5,4,5,+1,H3Coef::Dp,0,0},
    {3,5,3,5,5,3,-1,H3Coef::C,0,1},
    {3,5,3,5,5,4,+1,H3Coef::Dp,0,1},
    {3,5,3,5,5,5,+1,H3Coef::Dm,0,0},
    {3,5,4,3,3,3,-1,H3Coef::C,1,0},
    {3,5,4,3,3,4,+1,H3Coef::Dp,0,0},
    {3,5,4,3,3,5,+1,H3Coef::Dm,0,0},
    {3,5,4,3,4,3,+1,H3Coef::Dp,0,0},
    {3,5,4,3,4,4,-1,H3Coef::Dm,1,0},
    {3,5,4,3,4,5,-1,H3Coef::C,1,0},
    {3,5,4,3,5,3,-1,H3Coef::Dm,0,1},
    {3,5,4,3,5,4,+1,H3Coef::C,1,1},
    {3,5,4,3,5,5,+1,H3Coef::Dp,1,1},
    {3,5,4,4,3,3,+1,H3Coef::Dp,0,0},
    {3,5,4,4,3,4,+1,H3Coef::Dm,0,0},
    {3,5,4,4,3,5,+1,H3Coef::C,0,0},
    {3,5,4,4,4,3,+1,H3Coef::Dm,0,0},
    {3,5,4,4,4,4,+1,H3Coef::C,0,0},
    {3,5,4,4,4,5,+1,H3Coef::Dp,0,0},
    {3,5,4,4,5,3,+1,H3Coef::C,1,1},
    {3,5,4,4,5,4,+1,H3Coef::Dp,1,1},
    {3,5,4,4,5,5,+1,H3Coef::Dm,1,1},
    {3,5,5,4,3,3,+1,H3Coef::Dm,1,1},
    {3,5,5,4,3,4,+1,H3Coef::C,0,0},
    {3,5,5,4,3,5,+1,H3Coef::Dp,0,0},
    {3,5,5,4,4,3,+1,H3Coef::C,1,1},
    {3,5,5,4,4,4,+1,H3Coef::Dp,0,0},
    {3,5,5,4,4,5,+1,H3Coef::Dm,0,0},
    {3,5,5,4,5,3,+1,H3Coef::Dp,0,0},
    {3,5,5,4,5,4,+1,H3Coef::Dm,1,1},
    {3,5,5,4,5,5,+1,H3Coef::C,1,1},
    {3,5,5,5,3,3,+1,H3Coef::C,0,0},
    {3,5,5,5,3,4,+1,H3Coef::Dp,1,1},
    {3,5,5,5,3,5,+1,H3Coef::Dm,0,0},
    {3,5,5,5,4,3,+1,H3Coef::Dp,1,1},
    {3,5,5,5,4,4,+1,H3Coef::Dm,0,0},
    {3,5,5,5,4,5,+1,H3Coef::C,1,1},
    {3,5,5,5,5,3,+1,H3Coef::Dm,0,0},
    {3,5,5,5,5,4,+1,H3Coef::C,1,1},
    {3,5,5,5,5,5,+1,H3Coef::Dp,0,0},
    {4,3,3,3,3,3,+1,H3Coef::Dp,0,0},
    {4,3,3,3,3,4,+1,H3Coef::Dm,0,0},
    {4,3,3,3,3,5,-1,H3Coef::C,1,0},
    {4,3,3,3,4,3,+1,H3Coef::Dm,0,0},
    {4,3,3,3,4,4,+1,H3Coef::C,0,0},
    {4,3,3,3,4,5,-1,H3Coef::Dp,1,0},
    {4,3,3,3,5,3,-1,H3Coef::C,1,1},
    {4,3,3,3,5,4,-1,H3Coef::Dp,1,1},
    {4,3,3,3,5,5,+1,H3Coef::Dm,0,1},
    {4,3,3,5,3,3,-1,H3Coef::C,0,1},
    {4,3,3,5,3,4,+1,H3Coef::Dp,0,0},
    {4,3,3,5,3,5,-1,H3Coef::Dm,0,0},
    {4,3,3,5,4,3,+1,H3Coef::Dp,0,0},
    {4,3,3,5,4,4,-1,H3Coef::Dm,0,1},
    {4,3,3,5,4,5,+1,H3Coef::C,0,1},
    {4,3,3,5,5,3,+1,H3Coef::Dm,0,0},
    {4,3,3,5,5,4,-1,H3Coef::C,0,1},
    {4,3,3,5,5,5,+1,H3Coef::Dp,0,1},
    {4,3,4,3,3,3,+1,H3Coef::Dm,0,0},
    {4,3,4,3,3,4,-1,H3Coef::C,1,0},
    {4,3,4,3,3,5,-1,H3Coef::Dp,0,0},
    {4,3,4,3,4,3,-1,H3Coef::C,1,0},
    {4,3,4,3,4,4,+1,H3Coef::Dp,0,0},
    {4,3,4,3,4,5,+1,H3Coef::Dm,1,0},
    {4,3,4,3,5,3,+1,H3Coef::Dp,1,1},
    {4,3,4,3,5,4,-1,H3Coef::Dm,0,1},
    {4,3,4,3,5,5,-1,H3Coef::C,1,1},
    {4,3,4,4,3,3,+1,H3Coef::C,0,0},
    {4,3,4,4,3,4,+1,H3Coef::Dp,0,0},
    {4,3,4,4,3,5,+1,H3Coef::Dm,0,0},
    {4,3,4,4,4,3,+1,H3Coef::Dp,0,0},
    {4,3,4,4,4,4,+1,H3Coef::Dm,0,0},
    {4,3,4,4,4,5,+1,H3Coef::C,0,0},
    {4,3,4,4,5,3,+1,H3Coef::Dm,1,1},
    {4,3,4,4,5,4,+1,H3Coef::C,1,1},
    {4,3,4,4,5,5,+1,H3Coef::Dp,1,1},
    {4,3,5,4,3,3,+1,H3Coef::Dp,0,0},
    {4,3,5,4,3,4,+1,H3Coef::Dm,1,1},
    {4,3,5,4,3,5,+1,H3Coef::C,0,0},
    {4,3,5,4,4,3,+1,H3Coef::Dm,0,0},
    {4,3,5,4,4,4,+1,H3Coef::C,1,1},
    {4,3,5,4,4,5,+1,H3Coef::Dp,0,0},
    {4,3,5,4,5,3,+1,H3Coef::C,1,1},
    {4,3,5,4,5,4,+1,H3Coef::Dp,0,0},
    {4,3,5,4,5,5,+1,H3Coef::Dm,1,1},
    {4,3,5,5,3,3,+1,H3Coef::Dm,0,0},
    {4,3,5,5,3,4,+1,H3Coef::C,0,0},
    {4,3,5,5,3,5,+1,H3Coef::Dp,1,1},
    {4,3,5,5,4,3,+1,H3Coef::C,1,1},
    {4,3,5,5,4,4,+1,H3Coef::Dp,1,1},
    {4,3,5,5,4,5,+1,H3Coef::Dm,0,0},
    {4,3,5,5,5,3,+1,H3Coef::Dp,0,0},
    {4,3,5,5,5,4,+1,H3Coef::Dm,0,0},
    {4,3,5,5,5,5,+1,H3Coef::C,1,1},
    {4,4,3,4,3,3,+1,H3Coef::C,0,0},
    {4,4,3,4,3,4,+1,H3Coef::Dp,0,0},
    {4,4,3,4,3,5,-1,H3Coef::Dm,1,0},
    {4,4,3,4,4,3,+1,H3Coef::Dp,0,0},
    {4,4,3,4,4,4,+1,H3Coef::Dm,0,0},
    {4,4,3,4,4,5,-1,H3Coef::C,1,0},
    {4,4,3,4,5,3,+1,H3Coef::Dm,0,0},
    {4,4,3,4,5,4,+1,H3Coef::C,0,0},
    {4,4,3,4,5,5,-1,H3Coef::Dp,1,0},
    {4,4,3,5,3,3,+1,H3Coef::Dp,1,1},
    {4,4,3,5,3,4,+1,H3Coef::Dm,0,0},
    {4,4,3,5,3,5,-1,H3Coef::C,1,0},
    {4,4,3,5,4,3,+1,H3Coef::Dm,0,0},
    {4,4,3,5,4,4,+1,H3Coef::C,1,1},
    {4,4,3,5,4,5,-1,H3Coef::Dp,0,1},
    {4,4,3,5,5,3,+1,H3Coef::C,1,1},
    {4,4,3,5,5,4,+1,H3Coef::Dp,0,0},
    {4,4,3,5,5,5,-1,H3Coef::Dm,1,0},
    {4,4,4,3,3,3,+1,H3Coef::C,0,0},
    {4,4,4,3,3,4,+1,H3Coef::Dp,0,0},
    {4,4,4,3,3,5,+1,H3Coef::Dm,1,0},
    {4,4,4,3,4,3,+1,H3Coef::Dp,0,0},
    {4,4,4,3,4,4,+1,H3Coef::Dm,0,0},
    {4,4,4,3,4,5,+1,H3Coef::C,1,0},
    {4,4,4,3,5,3,-1,H3Coef::Dm,1,0},
    {4,4,4,3,5,4,-1,H3Coef::C,1,0},
    {4,4,4,3,5,5,-1,H3Coef::Dp,0,0},
    {4,4,4,5,3,3,+1,H3Coef::Dm,1,1},
    {4,4,4,5,3,4,-1,H3Coef::C,1,0},
    {4,4,4,5,3,5,-1,H3Coef::Dp,1,0},
    {4,4,4,5,4,3,-1,H3Coef::C,0,1},
    {4,4,4,5,4,4,+1,H3Coef::Dp,0,0},
    {4,4,4,5,4,5,+1,H3Coef::Dm,0,0},
    {4,4,4,5,5,3,-1,H3Coef::Dp,0,1},
    {4,4,4,5,5,4,+1,H3Coef::Dm,0,0},
    {4,4,4,5,5,5,+1,H3Coef::C,0,0},
    {4,4,5,3,3,3,+1,H3Coef::Dp,0,0},
    {4,4,5,3,3,4,+1,H3Coef::Dm,0,0},
    {4,4,5,3,3,5,+1,H3Coef::C,1,0},
    {4,4,5,3,4,3,+1,H3Coef::Dm,1,0},
    {4,4,5,3,4,4,+1,H3Coef::C,1,0},
    {4,4,5,3,4,5,+1,H3Coef::Dp,0,0},
    {4,4,5,3,5,3,+1,H3Coef::C,0,0},
    {4,4,5,3,5,4,+1,H3Coef::Dp,0,0},
    {4,4,5,3,5,5,+1,H3Coef::Dm,1,0},
    {4,4,5,4,3,3,+1,H3Coef::Dm,0,0},
    {4,4,5,4,3,4,-1,H3Coef::C,1,0},
    {4,4,5,4,3,5,-1,H3Coef::Dp,1,0},
    {4,4,5,4,4,3,-1,H3Coef::C,1,0},
    {4,4,5,4,4,4,+1,H3Coef::Dp,0,0},
    {4,4,5,4,4,5,+1,H3Coef::Dm,0,0},
    {4,4,5,4,5,3,-1,H3Coef::Dp,1,0},
    {4,4,5,4,5,4,+1,H3Coef::Dm,0,0},
    {4,4,5,4,5,5,+1,H3Coef::C,0,0},
    {4,5,3,3,3,3,-1,H3Coef::C,0,0},
    {4,5,3,3,3,4,+1,H3Coef::Dp,0,0},
    {4,5,3,3,3,5,+1,H3Coef::Dm,0,0},
    {4,5,3,3,4,3,+1,H3Coef::Dp,0,0},
    {4,5,3,3,4,4,-1,H3Coef::Dm,0,0},
    {4,5,3,3,4,5,-1,H3Coef::C,0,0},
    {4,5,3,3,5,3,-1,H3Coef::Dm,0,0},
    {4,5,3,3,5,4,+1,H3Coef::C,0,0},
    {4,5,3,3,5,5,+1,H3Coef::Dp,0,0},
    {4,5,3,4,3,3,+1,H3Coef::Dp,1,0},
    {4,5,3,4,3,4,+1,H3Coef::Dm,0,0},
    {4,5,3,4,3,5,+1,H3Coef::C,1,0},
    {4,5,3,4,4,3,+1,H3Coef::Dm,0,0},
    {4,5,3,4,4,4,+1,H3Coef::C,1,0},
    {4,5,3,4,4,5,+1,H3Coef::Dp,0,0},
    {4,5,3,4,5,3,+1,H3Coef::C,0,0},
    {4,5,3,4,5,4,+1,H3Coef::Dp,1,0},
    {4,5,3,4,5,5,+1,H3Coef::Dm,0,0},
    {4,5,4,4,3,3,+1,H3Coef::Dm,1,0},
    {4,5,4,4,3,4,-1,H3Coef::C,0,0},
    {4,5,4,4,3,5,-1,H3Coef::Dp,0,0},
    {4,5,4,4,4,3,-1,H3Coef::C,1,0},
    {4,5,4,4,4,4,+1,H3Coef::Dp,0,0},
    {4,5,4,4,4,5,+1,H3Coef::Dm,0,0},
    {4,5,4,4,5,3,-1,H3Coef::Dp,1,0},
    {4,5,4,4,5,4,+1,H3Coef::Dm,0,0},
    {4,5,4,4,5,5,+1,H3Coef::C,0,0},
    {4,5,4,5,3,3,+1,H3Coef::C,0,1},
    {4,5,4,5,3,4,-1,H3Coef::Dp,0,0},
    {4,5,4,5,3,5,-1,H3Coef::Dm,0,0},
    {4,5,4,5,4,3,-1,H3Coef::Dp,0,1},
    {4,5,4,5,4,4,+1,H3Coef::Dm,0,0},
    {4,5,4,5,4,5,+1,H3Coef::C,0,0},
    {4,5,4,5,5,3,-1,H3Coef::Dm,0,1},
    {4,5,4,5,5,4,+1,H3Coef::C,0,0},
    {4,5,4,5,5,5,+1,H3Coef::Dp,0,0},
    {4,5,5,3,3,3,+1,H3Coef::Dm,0,1},
    {4,5,5,3,3,4,+1,H3Coef::C,1,0},
    {4,5,5,3,3,5,+1,H3Coef::Dp,0,0},
    {4,5,5,3,4,3,+1,H3Coef::C,0,1},
    {4,5,5,3,4,4,+1,H3Coef::Dp,1,0},
    {4,5,5,3,4,5,+1,H3Coef::Dm,0,0},
    {4,5,5,3,5,3,+1,H3Coef::Dp,1,1},
    {4,5,5,3,5,4,+1,H3Coef::Dm,0,0},
    {4,5,5,3,5,5,+1,H3Coef::C,1,0},
    {4,5,5,5,3,3,+1,H3Coef::Dp,0,1},
    {4,5,5,5,3,4,-1,H3Coef::Dm,1,1},
    {4,5,5,5,3,5,-1,H3Coef::C,1,1},
    {4,5,5,5,4,3,-1,H3Coef::Dm,1,0},
    {4,5,5,5,4,4,+1,H3Coef::C,0,0},
    {4,5,5,5,4,5,+1,H3Coef::Dp,0,0},
    {4,5,5,5,5,3,-1,H3Coef::C,1,0},
    {4,5,5,5,5,4,+1,H3Coef::Dp,0,0},
    {4,5,5,5,5,5,+1,H3Coef::Dm,0,0},
    {5,3,3,3,3,3,+1,H3Coef::Dm,0,0},
    {5,3,3,3,3,4,+1,H3Coef::C,1,0},
    {5,3,3,3,3,5,+1,H3Coef::Dp,0,0},
    {5,3,3,3,4,3,-1,H3Coef::C,0,0},
    {5,3,3,3,4,4,-1,H3Coef::Dp,1,0},
    {5,3,3,3,4,5,-1,H3Coef::Dm,0,0},
    {5,3,3,3,5,3,+1,H3Coef::Dp,0,0},
    {5,3,3,3,5,4,+1,H3Coef::Dm,1,0},
    {5,3,3,3,5,5,+1,H3Coef::C,0,0},
    {5,3,3,4,3,3,+1,H3Coef::C,1,0},
    {5,3,3,4,3,4,-1,H3Coef::Dp,0,0},
    {5,3,3,4,3,5,+1,H3Coef::Dm,0,0},
    {5,3,3,4,4,3,+1,H3Coef::Dp,0,0},
    {5,3,3,4,4,4,-1,H3Coef::Dm,1,0},
    {5,3,3,4,4,5,+1,H3Coef::C,1,0},
    {5,3,3,4,5,3,+1,H3Coef::Dm,0,0},
    {5,3,3,4,5,4,-1,H3Coef::C,1,0},
    {5,3,3,4,5,5,+1,H3Coef::Dp,1,0},
    {5,3,4,4,3,3,-1,H3Coef::Dp,0,0},
    {5,3,4,4,3,4,-1,H3Coef::Dm,0,0},
    {5,3,4,4,3,5,-1,H3Coef::C,0,0},
    {5,3,4,4,4,3,+1,H3Coef::Dm,0,0},
    {5,3,4,4,4,4,+1,H3Coef::C,0,0},
    {5,3,4,4,4,5,+1,H3Coef::Dp,0,0},
    {5,3,4,4,5,3,+1,H3Coef::C,0,0},
    {5,3,4,4,5,4,+1,H3Coef::Dp,0,0},
    {5,3,4,4,5,5,+1,H3Coef::Dm,0,0},
    {5,3,4,5,3,3,-1,H3Coef::Dm,0,0},
    {5,3,4,5,3,4,-1,H3Coef::C,0,0},
    {5,3,4,5,3,5,-1,H3Coef::Dp,0,0},
    {5,3,4,5,4,3,+1,H3Coef::C,0,0},
    {5,3,4,5,4,4,+1,H3Coef::Dp,0,0},
    {5,3,4,5,4,5,+1,H3Coef::Dm,0,0},
    {5,3,4,5,5,3,+1,H3Coef::Dp,0,0},
    {5,3,4,5,5,4,+1,H3Coef::Dm,0,0},
    {5,3,4,5,5,5,+1,H3Coef::C,0,0},
    {5,3,5,3,3,3,+1,H3Coef::Dp,0,0},
    {5,3,5,3,3,4,-1,H3Coef::Dm,1,1},
    {5,3,5,3,3,5,+1,H3Coef::C,1,0},
    {5,3,5,3,4,3,+1,H3Coef::Dm,0,0},
    {5,3,5,3,4,4,-1,H3Coef::C,1,1},
    {5,3,5,3,4,5,+1,H3Coef::Dp,1,0},
    {5,3,5,3,5,3,+1,H3Coef::C,1,0},
    {5,3,5,3,5,4,-1,H3Coef::Dp,0,1},
    {5,3,5,3,5,5,+1,H3Coef::Dm,0,0},
    {5,3,5,5,3,3,-1,H3Coef::C,1,1},
    {5,3,5,5,3,4,-1,H3Coef::Dp,0,0},
    {5,3,5,5,3,5,-1,H3Coef::Dm,1,1},
    {5,3,5,5,4,3,+1,H3Coef::Dp,0,0},
    {5,3,5,5,4,4,+1,H3Coef::Dm,1,1},
    {5,3,5,5,4,5,+1,H3Coef::C,0,0},
    {5,3,5,5,5,3,+1,H3Coef::Dm,0,0},
    {5,3,5,5,5,4,+1,H3Coef::C,1,1},
    {5,3,5,5,5,5,+1,H3Coef::Dp,0,0},
    {5,4,3,3,3,3,-1,H3Coef::C,0,0},
    {5,4,3,3,3,4,+1,H3Coef::Dp,0,0},
    {5,4,3,3,3,5,+1,H3Coef::Dm,0,0},
    {5,4,3,3,4,3,-1,H3Coef::Dp,0,0},
    {5,4,3,3,4,4,+1,H3Coef::Dm,0,0},
    {5,4,3,3,4,5,+1,H3Coef::C,0,0},
    {5,4,3,3,5,3,+1,H3Coef::Dm,0,0},
    {5,4,3,3,5,4,-1,H3Coef::C,0,0},
    {5,4,3,3,5,5,-1,H3Coef::Dp,0,0},
    {5,4,3,5,3,3,-1,H3Coef::Dm,1,0},
    {5,4,3,5,3,4,-1,H3Coef::C,1,0},
    {5,4,3,5,3,5,+1,H3Coef::Dp,0,0},
    {5,4,3,5,4,3,+1,H3Coef::C,1,1},
    {5,4,3,5,4,4,+1,H3Coef::Dp,1,1},
    {5,4,3,5,4,5,-1,H3Coef::Dm,0,1},
    {5,4,3,5,5,3,+1,H3Coef::Dp,0,0},
    {5,4,3,5,5,4,+1,H3Coef::Dm,0,0},
    {5,4,3,5,5,5,-1,H3Coef::C,1,0},
    {5,4,4,3,3,3,+1,H3Coef::Dp,1,0},
    {5,4,4,3,3,4,+1,H3Coef::Dm,0,0},
    {5,4,4,3,3,5,-1,H3Coef::C,1,0},
    {5,4,4,3,4,3,-1,H3Coef::Dm,0,0},
    {5,4,4,3,4,4,-1,H3Coef::C,1,0},
    {5,4,4,3,4,5,+1,H3Coef::Dp,0,0},
    {5,4,4,3,5,3,+1,H3Coef::C,1,0},
    {5,4,4,3,5,4,+1,H3Coef::Dp,0,0},
    {5,4,4,3,5,5,-1,H3Coef::Dm,1,0},
    {5,4,4,4,3,3,-1,H3Coef::Dm,1,0},
    {5,4,4,4,3,4,+1,H3Coef::C,0,0},
    {5,4,4,4,3,5,+1,H3Coef::Dp,0,0},
    {5,4,4,4,4,3,-1,H3Coef::C,1,0},
    {5,4,4,4,4,4,+1,H3Coef::Dp,0,0},
    {5,4,4,4,4,5,+1,H3Coef::Dm,0,0},
    {5,4,4,4,5,3,-1,H3Coef::Dp,1,0},
    {5,4,4,4,5,4,+1,H3Coef::Dm,0,0},
    {5,4,4,4,5,5,+1,H3Coef::C,0,0},
    {5,4,5,4,3,3,-1,H3Coef::C,1,0},
    {5,4,5,4,3,4,+1,H3Coef::Dp,0,0},
    {5,4,5,4,3,5,+1,H3Coef::Dm,0,0},
    {5,4,5,4,4,3,-1,H3Coef::Dp,1,0},
    {5,4,5,4,4,4,+1,H3Coef::Dm,0,0},
    {5,4,5,4,4,5,+1,H3Coef::C,0,0},
    {5,4,5,4,5,3,-1,H3Coef::Dm,1,0},
    {5,4,5,4,5,4,+1,H3Coef::C,0,0},
    {5,4,5,4,5,5,+1,H3Coef::Dp,0,0},
    {5,4,5,5,3,3,-1,H3Coef::Dp,0,1},
    {5,4,5,5,3,4,+1,H3Coef::Dm,1,1},
    {5,4,5,5,3,5,+1,H3Coef::C,1,1},
    {5,4,5,5,4,3,-1,H3Coef::Dm,1,0},
    {5,4,5,5,4,4,+1,H3Coef::C,0,0},
    {5,4,5,5,4,5,+1,H3Coef::Dp,0,0},
    {5,4,5,5,5,3,-1,H3Coef::C,1,0},
    {5,4,5,5,5,4,+1,H3Coef::Dp,0,0},
    {5,4,5,5,5,5,+1,H3Coef::Dm,0,0},
    {5,5,3,4,3,3,+1,H3Coef::Dm,0,0},
    {5,5,3,4,3,4,+1,H3Coef::C,1,0},
    {5,5,3,4,3,5,+1,H3Coef::Dp,0,0},
    {5,5,3,4,4,3,+1,H3Coef::C,0,0},
    {5,5,3,4,4,4,+1,H3Coef::Dp,1,0},
    {5,5,3,4,4,5,+1,H3Coef::Dm,0,0},
    {5,5,3,4,5,3,+1,H3Coef::Dp,0,0},
    {5,5,3,4,5,4,+1,H3Coef::Dm,1,0},
    {5,5,3,4,5,5,+1,H3Coef::C,0,0},
    {5,5,3,5,3,3,+1,H3Coef::C,0,0},
    {5,5,3,5,3,4,+1,H3Coef::Dp,1,0},
    {5,5,3,5,3,5,+1,H3Coef::Dm,0,0},
    {5,5,3,5,4,3,+1,H3Coef::Dp,1,1},
    {5,5,3,5,4,4,+1,H3Coef::Dm,0,1},
    {5,5,3,5,4,5,+1,H3Coef::C,1,1},
    {5,5,3,5,5,3,+1,H3Coef::Dm,0,0},
    {5,5,3,5,5,4,+1,H3Coef::C,1,0},
    {5,5,3,5,5,5,+1,H3Coef::Dp,0,0},
    {5,5,4,3,3,3,-1,H3Coef::Dm,0,0},
    {5,5,4,3,3,4,-1,H3Coef::C,1,0},
    {5,5,4,3,3,5,+1,H3Coef::Dp,0,0},
    {5,5,4,3,4,3,-1,H3Coef::C,0,0},
    {5,5,4,3,4,4,-1,H3Coef::Dp,1,0},
    {5,5,4,3,4,5,+1,H3Coef::Dm,0,0},
    {5,5,4,3,5,3,+1,H3Coef::Dp,1,0},
    {5,5,4,3,5,4,+1,H3Coef::Dm,0,0},
    {5,5,4,3,5,5,-1,H3Coef::C,1,0},
    {5,5,4,5,3,3,+1,H3Coef::Dp,0,0},
    {5,5,4,5,3,4,-1,H3Coef::Dm,1,0},
    {5,5,4,5,3,5,-1,H3Coef::C,1,0},
    {5,5,4,5,4,3,-1,H3Coef::Dm,1,0},
    {5,5,4,5,4,4,+1,H3Coef::C,0,0},
    {5,5,4,5,4,5,+1,H3Coef::Dp,0,0},
    {5,5,4,5,5,3,-1,H3Coef::C,1,0},
    {5,5,4,5,5,4,+1,H3Coef::Dp,0,0},
    {5,5,4,5,5,5,+1,H3Coef::Dm,0,0},
    {5,5,5,3,3,3,-1,H3Coef::C,1,1},
    {5,5,5,3,3,4,-1,H3Coef::Dp,1,0},
    {5,5,5,3,3,5,+1,H3Coef::Dm,0,0},
    {5,5,5,3,4,3,-1,H3Coef::Dp,0,1},
    {5,5,5,3,4,4,-1,H3Coef::Dm,0,0},
    {5,5,5,3,4,5,+1,H3Coef::C,1,0},
    {5,5,5,3,5,3,-1,H3Coef::Dm,1,1},
    {5,5,5,3,5,4,-1,H3Coef::C,1,0},
    {5,5,5,3,5,5,+1,H3Coef::Dp,0,0},
    {5,5,5,4,3,3,+1,H3Coef::Dp,1,1},
    {5,5,5,4,3,4,-1,H3Coef::Dm,1,0},
    {5,5,5,4,3,5,-1,H3Coef::C,1,0},
    {5,5,5,4,4,3,-1,H3Coef::Dm,0,1},
    {5,5,5,4,4,4,+1,H3Coef::C,0,0},
    {5,5,5,4,4,5,+1,H3Coef::Dp,0,0},
    {5,5,5,4,5,3,-1,H3Coef::C,0,1},
    {5,5,5,4,5,4,+1,H3Coef::Dp,0,0},
    {5,5,5,4,5,5,+1,H3Coef::Dm,0,0},
    {3,3,3,3,0,0,+1,H3Coef::A,0,0},
    {3,3,3,3,0,3,+1,H3Coef::SqrtA,0,0},
    {3,3,3,3,0,4,-1,H3Coef::SqrtA,1,0},
    {3,3,3,3,0,5,+1,H3Coef::SqrtA,1,0},
    {3,3,3,3,3,0,+1,H3Coef::SqrtA,0,0},
    {3,3,3,3,3,3,-1,H3Coef::B,0,0},
    {3,3,3,3,3,4,-1,H3Coef::Dp,1,0},
    {3,3,3,3,3,5,+1,H3Coef::Dm,1,0},
    {3,3,3,3,4,0,-1,H3Coef::SqrtA,1,0},
    {3,3,3,3,4,3,-1,H3Coef::Dp,1,0},
    {3,3,3,3,4,4,+1,H3Coef::Dm,0,0},
    {3,3,3,3,4,5,+1,H3Coef::B,0,0},
    {3,3,3,3,5,0,+1,H3Coef::SqrtA,1,0},
    {3,3,3,3,5,3,+1,H3Coef::Dm,1,0},
    {3,3,3,3,5,4,+1,H3Coef::B,0,0},
    {3,3,3,3,5,5,+1,H3Coef::Dp,0,0},
    {3,3,4,4,0,2,+1,H3Coef::A,0,0},
    {3,3,4,4,0,3,-1,H3Coef::SqrtA,1,0},
    {3,3,4,4,0,4,+1,H3Coef::SqrtA,0,0},
    {3,3,4,4,0,5,+1,H3Coef::SqrtA,0,0},
    {3,3,4,4,3,2,+1,H3Coef::SqrtA,0,0},
    {3,3,4,4,3,3,-1,H3Coef::Dm,1,0},
    {3,3,4,4,3,4,-1,H3Coef::B,0,0},
    {3,3,4,4,3,5,+1,H3Coef::Dp,0,0},
    {3,3,4,4,4,2,-1,H3Coef::SqrtA,1,0},
    {3,3,4,4,4,3,-1,H3Coef::B,0,0},
    {3,3,4,4,4,4,-1,H3Coef::Dp,1,0},
    {3,3,4,4,4,5,-1,H3Coef::Dm,1,0},
    {3,3,4,4,5,2,-1,H3Coef::SqrtA,1,0},
    {3,3,4,4,5,3,+1,H3Coef::Dp,0,0},
    {3,3,4,4,5,4,-1,H3Coef::Dm,1,0},
    {3,3,4,4,5,5,+1,H3Coef::B,1,0},
    {3,3,5,5,0,1,+1,H3Coef::A,0,0},
    {3,3,5,5,0,3,+1,H3Coef::SqrtA,1,0},
    {3,3,5,5,0,4,-1,H3Coef::SqrtA,1,1},
    {3,3,5,5,0,5,-1,H3Coef::SqrtA,1,1},
    {3,3,5,5,3,1,-1,H3Coef::SqrtA,1,1},
    {3,3,5,5,3,3,-1,H3Coef::Dp,0,1},
    {3,3,5,5,3,4,+1,H3Coef::Dm,0,0},
    {3,3,5,5,3,5,-1,H3Coef::B,0,0},
    {3,3,5,5,4,1,+1,H3Coef::SqrtA,1,0},
    {3,3,5,5,4,3,+1,H3Coef::Dm,0,0},
    {3,3,5,5,4,4,+1,H3Coef::B,0,1},
    {3,3,5,5,4,5,-1,H3Coef::Dp,0,1},
    {3,3,5,5,5,1,+1,H3Coef::SqrtA,1,0},
    {3,3,5,5,5,3,-1,H3Coef::B,0,0},
    {3,3,5,5,5,4,-1,H3Coef::Dp,0,1},
    {3,3,5,5,5,5,-1,H3Coef::Dm,0,1},
    {3,4,3,5,1,1,-1,H3Coef::A,0,0},
    {3,4,3,5,1,3,+1,H3Coef::SqrtA,1,0},
    {3,4,3,5,1,4,-1,H3Coef::SqrtA,0,0},
    {3,4,3,5,1,5,+1,H3Coef::SqrtA,0,1},
    {3,4,3,5,3,1,-1,H3Coef::SqrtA,1,0},
    {3,4,3,5,3,3,-1,H3Coef::B,0,0},
    {3,4,3,5,3,4,-1,H3Coef::Dp,1,0},
    {3,4,3,5,3,5,+1,H3Coef::Dm,1,1},
    {3,4,3,5,4,1,+1,H3Coef::SqrtA,1,1},
    {3,4,3,5,4,3,-1,H3Coef::Dp,0,1},
    {3,4,3,5,4,4,+1,H3Coef::Dm,1,1},
    {3,4,3,5,4,5,+1,H3Coef::B,1,0},
    {3,4,3,5,5,1,+1,H3Coef::SqrtA,0,0},
    {3,4,3,5,5,3,-1,H3Coef::Dm,1,0},
    {3,4,3,5,5,4,-1,H3Coef::B,0,0},
    {3,4,3,5,5,5,-1,H3Coef::Dp,0,1},
    {3,4,4,3,1,0,+1,H3Coef::A,0,0},
    {3,4,4,3,1,3,+1,H3Coef::SqrtA,0,0},
    {3,4,4,3,1,4,-1,H3Coef::SqrtA,1,0},
    {3,4,4,3,1,5,-1,H3Coef::SqrtA,1,0},
    {3,4,4,3,3,0,-1,H3Coef::SqrtA,1,0},
    {3,4,4,3,3,3,-1,H3Coef::Dm,1,0},
    {3,4,4,3,3,4,-1,H3Coef::B,0,0},
    {3,4,4,3,3,5,+1,H3Coef::Dp,0,0},
    {3,4,4,3,4,0,+1,H3Coef::SqrtA,0,0},
    {3,4,4,3,4,3,-1,H3Coef::B,0,0},
    {3,4,4,3,4,4,-1,H3Coef::Dp,1,0},
    {3,4,4,3,4,5,-1,H3Coef::Dm,1,0},
    {3,4,4,3,5,0,-1,H3Coef::SqrtA,1,0},
    {3,4,4,3,5,3,-1,H3Coef::Dp,1,0},
    {3,4,4,3,5,4,+1,H3Coef::Dm,0,0},
    {3,4,4,3,5,5,-1,H3Coef::B,0,0},
    {3,4,5,4,1,2,-1,H3Coef::A,0,0},
    {3,4,5,4,1,3,-1,H3Coef::SqrtA,1,0},
    {3,4,5,4,1,4,-1,H3Coef::SqrtA,1,0},
    {3,4,5,4,1,5,-1,H3Coef::SqrtA,1,0},
    {3,4,5,4,3,2,+1,H3Coef::SqrtA,1,0},
    {3,4,5,4,3,3,+1,H3Coef::Dp,0,0},
    {3,4,5,4,3,4,+1,H3Coef::Dm,0,0},
    {3,4,5,4,3,5,-1,H3Coef::B,0,0},
    {3,4,5,4,4,2,+1,H3Coef::SqrtA,1,0},
    {3,4,5,4,4,3,+1,H3Coef::Dm,0,0},
    {3,4,5,4,4,4,-1,H3Coef::B,0,0},
    {3,4,5,4,4,5,+1,H3Coef::Dp,0,0},
    {3,4,5,4,5,2,+1,H3Coef::SqrtA,1,0},
    {3,4,5,4,5,3,-1,H3Coef::B,0,0},
    {3,4,5,4,5,4,+1,H3Coef::Dp,0,0},
    {3,4,5,4,5,5,+1,H3Coef::Dm,0,0},
    {3,5,3,4,2,2,-1,H3Coef::A,0,0},
    {3,5,3,4,2,3,+1,H3Coef::SqrtA,1,0},
    {3,5,3,4,2,4,-1,H3Coef::SqrtA,1,0},
    {3,5,3,4,2,5,-1,H3Coef::SqrtA,0,0},
    {3,5,3,4,3,2,-1,H3Coef::SqrtA,1,0},
    {3,5,3,4,3,3,-1,H3Coef::B,0,0},
    {3,5,3,4,3,4,-1,H3Coef::Dp,0,0},
    {3,5,3,4,3,5,-1,H3Coef::Dm,1,0},
    {3,5,3,4,4,2,+1,H3Coef::SqrtA,0,0},
    {3,5,3,4,4,3,-1,H3Coef::Dp,1,0},
    {3,5,3,4,4,4,+1,H3Coef::Dm,1,0},
    {3,5,3,4,4,5,-1,H3Coef::B,0,0},
    {3,5,3,4,5,2,+1,H3Coef::SqrtA,1,1},
    {3,5,3,4,5,3,-1,H3Coef::Dm,0,1},
    {3,5,3,4,5,4,-1,H3Coef::B,0,1},
    {3,5,3,4,5,5,+1,H3Coef::Dp,1,1},
    {3,5,4,5,2,1,+1,H3Coef::A,0,0},
    {3,5,4,5,2,3,-1,H3Coef::SqrtA,1,0},
    {3,5,4,5,2,4,-1,H3Coef::SqrtA,1,0},
    {3,5,4,5,2,5,-1,H3Coef::SqrtA,0,1},
    {3,5,4,5,3,1,-1,H3Coef::SqrtA,1,0},
    {3,5,4,5,3,3,+1,H3Coef::Dm,0,0},
    {3,5,4,5,3,4,-1,H3Coef::B,0,0},
    {3,5,4,5,3,5,+1,H3Coef::Dp,1,1},
    {3,5,4,5,4,1,-1,H3Coef::SqrtA,1,0},
    {3,5,4,5,4,3,-1,H3Coef::B,0,0},
    {3,5,4,5,4,4,+1,H3Coef::Dp,0,0},
    {3,5,4,5,4,5,+1,H3Coef::Dm,1,1},
    {3,5,4,5,5,1,-1,H3Coef::SqrtA,0,1},
    {3,5,4,5,5,3,+1,H3Coef::Dp,1,1},
    {3,5,4,5,5,4,+1,H3Coef::Dm,1,1},
    {3,5,4,5,5,5,-1,H3Coef::B,0,0},
    {3,5,5,3,2,0,+1,H3Coef::A,0,0},
    {3,5,5,3,2,3,-1,H3Coef::SqrtA,1,1},
    {3,5,5,3,2,4,+1,H3Coef::SqrtA,1,0},
    {3,5,5,3,2,5,+1,H3Coef::SqrtA,1,0},
    {3,5,5,3,3,0,+1,H3Coef::SqrtA,1,0},
    {3,5,5,3,3,3,-1,H3Coef::Dp,0,1},
    {3,5,5,3,3,4,+1,H3Coef::Dm,0,0},
    {3,5,5,3,3,5,-1,H3Coef::B,0,0},
    {3,5,5,3,4,0,-1,H3Coef::SqrtA,1,0},
    {3,5,5,3,4,3,+1,H3Coef::Dm,0,1},
    {3,5,5,3,4,4,+1,H3Coef::B,0,0},
    {3,5,5,3,4,5,-1,H3Coef::Dp,0,0},
    {3,5,5,3,5,0,-1,H3Coef::SqrtA,1,1},
    {3,5,5,3,5,3,-1,H3Coef::B,0,0},
    {3,5,5,3,5,4,-1,H3Coef::Dp,0,1},
    {3,5,5,3,5,5,-1,H3Coef::Dm,0,1},
    {4,3,3,4,2,0,+1,H3Coef::A,0,0},
    {4,3,3,4,2,3,+1,H3Coef::SqrtA,0,0},
    {4,3,3,4,2,4,-1,H3Coef::SqrtA,1,0},
    {4,3,3,4,2,5,+1,H3Coef::SqrtA,1,0},
    {4,3,3,4,3,0,-1,H3Coef::SqrtA,1,0},
    {4,3,3,4,3,3,-1,H3Coef::Dm,1,0},
    {4,3,3,4,3,4,-1,H3Coef::B,0,0},
    {4,3,3,4,3,5,-1,H3Coef::Dp,0,0},
    {4,3,3,4,4,0,+1,H3Coef::SqrtA,0,0},
    {4,3,3,4,4,3,-1,H3Coef::B,0,0},
    {4,3,3,4,4,4,-1,H3Coef::Dp,1,0},
    {4,3,3,4,4,5,+1,H3Coef::Dm,1,0},
    {4,3,3,4,5,0,+1,H3Coef::SqrtA,1,1},
    {4,3,3,4,5,3,+1,H3Coef::Dp,1,1},
    {4,3,3,4,5,4,-1,H3Coef::Dm,0,1},
    {4,3,3,4,5,5,-1,H3Coef::B,0,1},
    {4,3,4,5,2,2,+1,H3Coef::A,1,0},
    {4,3,4,5,2,3,+1,H3Coef::SqrtA,0,1},
    {4,3,4,5,2,4,+1,H3Coef::SqrtA,1,0},
    {4,3,4,5,2,5,+1,H3Coef::SqrtA,1,0},
    {4,3,4,5,3,2,+1,H3Coef::SqrtA,0,0},
    {4,3,4,5,3,3,+1,H3Coef::Dp,1,1},
    {4,3,4,5,3,4,+1,H3Coef::Dm,0,0},
    {4,3,4,5,3,5,-1,H3Coef::B,0,0},
    {4,3,4,5,4,2,+1,H3Coef::SqrtA,0,0},
    {4,3,4,5,4,3,+1,H3Coef::Dm,1,1},
    {4,3,4,5,4,4,-1,H3Coef::B,0,0},
    {4,3,4,5,4,5,+1,H3Coef::Dp,0,0},
    {4,3,4,5,5,2,+1,H3Coef::SqrtA,1,1},
    {4,3,4,5,5,3,-1,H3Coef::B,0,0},
    {4,3,4,5,5,4,+1,H3Coef::Dp,1,1},
    {4,3,4,5,5,5,+1,H3Coef::Dm,1,1},
    {4,3,5,3,2,1,-1,H3Coef::A,0,0},
    {4,3,5,3,2,3,-1,H3Coef::SqrtA,1,0},
    {4,3,5,3,2,4,+1,H3Coef::SqrtA,1,1},
    {4,3,5,3,2,5,+1,H3Coef::SqrtA,1,0},
    {4,3,5,3,3,1,+1,H3Coef::SqrtA,1,0},
    {4,3,5,3,3,3,-1,H3Coef::B,0,0},
    {4,3,5,3,3,4,-1,H3Coef::Dp,0,1},
    {4,3,5,3,3,5,-1,H3Coef::Dm,0,0},
    {4,3,5,3,4,1,-1,H3Coef::SqrtA,1,0},
    {4,3,5,3,4,3,-1,H3Coef::Dp,0,0},
    {4,3,5,3,4,4,+1,H3Coef::Dm,0,1},
    {4,3,5,3,4,5,-1,H3Coef::B,0,0},
    {4,3,5,3,5,1,-1,H3Coef::SqrtA,1,1},
    {4,3,5,3,5,3,-1,H3Coef::Dm,0,1},
    {4,3,5,3,5,4,-1,H3Coef::B,0,0},
    {4,3,5,3,5,5,+1,H3Coef::Dp,0,1},
    {4,4,3,3,0,1,+1,H3Coef::A,0,0},
    {4,4,3,3,0,3,-1,H3Coef::SqrtA,1,0},
    {4,4,3,3,0,4,+1,H3Coef::SqrtA,0,0},
    {4,4,3,3,0,5,-1,H3Coef::SqrtA,0,0},
    {4,4,3,3,3,1,+1,H3Coef::SqrtA,0,0},
    {4,4,3,3,3,3,-1,H3Coef::Dm,1,0},
    {4,4,3,3,3,4,-1,H3Coef::B,0,0},
    {4,4,3,3,3,5,-1,H3Coef::Dp,0,0},
    {4,4,3,3,4,1,-1,H3Coef::SqrtA,1,0},
    {4,4,3,3,4,3,-1,H3Coef::B,0,0},
    {4,4,3,3,4,4,-1,H3Coef::Dp,1,0},
    {4,4,3,3,4,5,+1,H3Coef::Dm,1,0},
    {4,4,3,3,5,1,+1,H3Coef::SqrtA,1,0},
    {4,4,3,3,5,3,-1,H3Coef::Dp,0,0},
    {4,4,3,3,5,4,+1,H3Coef::Dm,1,0},
    {4,4,3,3,5,5,+1,H3Coef::B,1,0},
    {4,4,4,4,0,0,+1,H3Coef::A,0,0},
    {4,4,4,4,0,3,+1,H3Coef::SqrtA,0,0},
    {4,4,4,4,0,4,-1,H3Coef::SqrtA,1,0},
    {4,4,4,4,0,5,-1,H3Coef::SqrtA,1,0},
    {4,4,4,4,3,0,+1,H3Coef::SqrtA,0,0},
    {4,4,4,4,3,3,+1,H3Coef::Dp,0,0},
    {4,4,4,4,3,4,-1,H3Coef::Dm,1,0},
    {4,4,4,4,3,5,+1,H3Coef::B,1,0},
    {4,4,4,4,4,0,-1,H3Coef::SqrtA,1,0},
    {4,4,4,4,4,3,-1,H3Coef::Dm,1,0},
    {4,4,4,4,4,4,-1,H3Coef::B,0,0},
    {4,4,4,4,4,5,+1,H3Coef::Dp,0,0},
    {4,4,4,4,5,0,-1,H3Coef::SqrtA,1,0},
    {4,4,4,4,5,3,+1,H3Coef::B,1,0},
    {4,4,4,4,5,4,+1,H3Coef::Dp,0,0},
    {4,4,4,4,5,5,+1,H3Coef::Dm,0,0},
    {4,4,5,5,0,2,+1,H3Coef::A,0,0},
    {4,4,5,5,0,3,-1,H3Coef::SqrtA,1,1},
    {4,4,5,5,0,4,+1,H3Coef::SqrtA,1,0},
    {4,4,5,5,0,5,+1,H3Coef::SqrtA,1,0},
    {4,4,5,5,3,2,-1,H3Coef::SqrtA,1,1},
    {4,4,5,5,3,3,-1,H3Coef::B,0,0},
    {4,4,5,5,3,4,-1,H3Coef::Dp,0,1},
    {4,4,5,5,3,5,-1,H3Coef::Dm,0,1},
    {4,4,5,5,4,2,+1,H3Coef::SqrtA,1,0},
    {4,4,5,5,4,3,-1,H3Coef::Dp,0,1},
    {4,4,5,5,4,4,+1,H3Coef::Dm,0,0},
    {4,4,5,5,4,5,-1,H3Coef::B,0,0},
    {4,4,5,5,5,2,+1,H3Coef::SqrtA,1,0},
    {4,4,5,5,5,3,-1,H3Coef::Dm,0,1},
    {4,4,5,5,5,4,-1,H3Coef::B,0,0},
    {4,4,5,5,5,5,+1,H3Coef::Dp,0,0},
    {4,5,3,5,1,2,+1,H3Coef::A,0,0},
    {4,5,3,5,1,3,+1,H3Coef::SqrtA,1,1},
    {4,5,3,5,1,4,+1,H3Coef::SqrtA,1,0},
    {4,5,3,5,1,5,+1,H3Coef::SqrtA,0,0},
    {4,5,3,5,3,2,+1,H3Coef::SqrtA,1,0},
    {4,5,3,5,3,3,+1,H3Coef::Dm,0,1},
    {4,5,3,5,3,4,-1,H3Coef::B,0,0},
    {4,5,3,5,3,5,+1,H3Coef::Dp,1,0},
    {4,5,3,5,4,2,+1,H3Coef::SqrtA,1,1},
    {4,5,3,5,4,3,-1,H3Coef::B,0,0},
    {4,5,3,5,4,4,+1,H3Coef::Dp,0,1},
    {4,5,3,5,4,5,+1,H3Coef::Dm,1,1},
    {4,5,3,5,5,2,+1,H3Coef::SqrtA,0,0},
    {4,5,3,5,5,3,+1,H3Coef::Dp,1,1},
    {4,5,3,5,5,4,+1,H3Coef::Dm,1,0},
    {4,5,3,5,5,5,-1,H3Coef::B,0,0},
    {4,5,4,3,1,1,+1,H3Coef::A,1,0},
    {4,5,4,3,1,3,-1,H3Coef::SqrtA,0,0},
    {4,5,4,3,1,4,-1,H3Coef::SqrtA,0,0},
    {4,5,4,3,1,5,-1,H3Coef::SqrtA,1,0},
    {4,5,4,3,3,1,-1,H3Coef::SqrtA,0,0},
    {4,5,4,3,3,3,+1,H3Coef::Dp,1,0},
    {4,5,4,3,3,4,+1,H3Coef::Dm,1,0},
    {4,5,4,3,3,5,-1,H3Coef::B,0,0},
    {4,5,4,3,4,1,-1,H3Coef::SqrtA,1,0},
    {4,5,4,3,4,3,+1,H3Coef::Dm,0,0},
    {4,5,4,3,4,4,-1,H3Coef::B,0,0},
    {4,5,4,3,4,5,+1,H3Coef::Dp,1,0},
    {4,5,4,3,5,1,+1,H3Coef::SqrtA,0,0},
    {4,5,4,3,5,3,+1,H3Coef::B,1,0},
    {4,5,4,3,5,4,-1,H3Coef::Dp,1,0},
    {4,5,4,3,5,5,-1,H3Coef::Dm,0,0},
    {4,5,5,4,1,0,+1,H3Coef::A,0,0},
    {4,5,5,4,1,3,-1,H3Coef::SqrtA,1,1},
    {4,5,5,4,1,4,+1,H3Coef::SqrtA,1,0},
    {4,5,5,4,1,5,+1,H3Coef::SqrtA,1,0},
    {4,5,5,4,3,0,-1,H3Coef::SqrtA,1,0},
    {4,5,5,4,3,3,-1,H3Coef::B,0,1},
    {4,5,5,4,3,4,-1,H3Coef::Dp,0,0},
    {4,5,5,4,3,5,-1,H3Coef::Dm,0,0},
    {4,5,5,4,4,0,+1,H3Coef::SqrtA,1,0},
    {4,5,5,4,4,3,-1,H3Coef::Dp,0,1},
    {4,5,5,4,4,4,+1,H3Coef::Dm,0,0},
    {4,5,5,4,4,5,-1,H3Coef::B,0,0},
    {4,5,5,4,5,0,+1,H3Coef::SqrtA,1,0},
    {4,5,5,4,5,3,-1,H3Coef::Dm,0,1},
    {4,5,5,4,5,4,-1,H3Coef::B,0,0},
    {4,5,5,4,5,5,+1,H3Coef::Dp,0,0},
    {5,3,3,5,1,0,+1,H3Coef::A,0,0},
    {5,3,3,5,1,3,+1,H3Coef::SqrtA,0,0},
    {5,3,3,5,1,4,-1,H3Coef::SqrtA,1,0},
    {5,3,3,5,1,5,+1,H3Coef::SqrtA,1,0},
    {5,3,3,5,3,0,+1,H3Coef::SqrtA,1,0},
    {5,3,3,5,3,3,+1,H3Coef::Dp,1,0},
    {5,3,3,5,3,4,-1,H3Coef::Dm,0,0},
    {5,3,3,5,3,5,-1,H3Coef::B,0,0},
    {5,3,3,5,4,0,+1,H3Coef::SqrtA,1,1},
    {5,3,3,5,4,3,+1,H3Coef::Dm,1,1},
    {5,3,3,5,4,4,+1,H3Coef::B,0,1},
    {5,3,3,5,4,5,+1,H3Coef::Dp,0,1},
    {5,3,3,5,5,0,+1,H3Coef::SqrtA,0,0},
    {5,3,3,5,5,3,-1,H3Coef::B,0,0},
    {5,3,3,5,5,4,-1,H3Coef::Dp,1,0},
    {5,3,3,5,5,5,+1,H3Coef::Dm,1,0},
    {5,3,4,3,1,2,-1,H3Coef::A,0,0},
    {5,3,4,3,1,3,-1,H3Coef::SqrtA,1,0},
    {5,3,4,3,1,4,+1,H3Coef::SqrtA,1,0},
    {5,3,4,3,1,5,-1,H3Coef::SqrtA,0,0},
    {5,3,4,3,3,2,+1,H3Coef::SqrtA,1,0},
    {5,3,4,3,3,3,-1,H3Coef::B,0,0},
    {5,3,4,3,3,4,-1,H3Coef::Dp,0,0},
    {5,3,4,3,3,5,+1,H3Coef::Dm,1,0},
    {5,3,4,3,4,2,+1,H3Coef::SqrtA,0,0},
    {5,3,4,3,4,3,+1,H3Coef::Dp,1,0},
    {5,3,4,3,4,4,-1,H3Coef::Dm,1,0},
    {5,3,4,3,4,5,-1,H3Coef::B,0,0},
    {5,3,4,3,5,2,-1,H3Coef::SqrtA,1,0},
    {5,3,4,3,5,3,-1,H3Coef::Dm,0,0},
    {5,3,4,3,5,4,-1,H3Coef::B,0,0},
    {5,3,4,3,5,5,-1,H3Coef::Dp,1,0},
    {5,3,5,4,1,1,-1,H3Coef::A,1,0},
    {5,3,5,4,1,3,+1,H3Coef::SqrtA,1,0},
    {5,3,5,4,1,4,+1,H3Coef::SqrtA,0,1},
    {5,3,5,4,1,5,+1,H3Coef::SqrtA,1,0},
    {5,3,5,4,3,1,+1,H3Coef::SqrtA,0,0},
    {5,3,5,4,3,3,-1,H3Coef::Dm,0,0},
    {5,3,5,4,3,4,+1,H3Coef::B,1,1},
    {5,3,5,4,3,5,-1,H3Coef::Dp,0,0},
    {5,3,5,4,4,1,-1,H3Coef::SqrtA,0,0},
    {5,3,5,4,4,3,-1,H3Coef::B,0,0},
    {5,3,5,4,4,4,+1,H3Coef::Dp,1,1},
    {5,3,5,4,4,5,+1,H3Coef::Dm,0,0},
    {5,3,5,4,5,1,-1,H3Coef::SqrtA,0,0},
    {5,3,5,4,5,3,+1,H3Coef::Dp,0,0},
    {5,3,5,4,5,4,+1,H3Coef::Dm,1,1},
    {5,3,5,4,5,5,-1,H3Coef::B,0,0},
    {5,4,3,4,2,1,-1,H3Coef::A,0,0},
    {5,4,3,4,2,3,-1,H3Coef::SqrtA,0,0},
    {5,4,3,4,2,4,-1,H3Coef::SqrtA,0,0},
    {5,4,3,4,2,5,+1,H3Coef::SqrtA,1,0},
    {5,4,3,4,3,1,-1,H3Coef::SqrtA,1,0},
    {5,4,3,4,3,3,-1,H3Coef::Dp,1,0},
    {5,4,3,4,3,4,-1,H3Coef::Dm,1,0},
    {5,4,3,4,3,5,-1,H3Coef::B,0,0},
    {5,4,3,4,4,1,+1,H3Coef::SqrtA,0,0},
    {5,4,3,4,4,3,+1,H3Coef::Dm,0,0},
    {5,4,3,4,4,4,-1,H3Coef::B,0,0},
    {5,4,3,4,4,5,-1,H3Coef::Dp,1,0},
    {5,4,3,4,5,1,+1,H3Coef::SqrtA,0,0},
    {5,4,3,4,5,3,-1,H3Coef::B,0,0},
    {5,4,3,4,5,4,+1,H3Coef::Dp,0,0},
    {5,4,3,4,5,5,-1,H3Coef::Dm,1,0},
    {5,4,4,5,2,0,+1,H3Coef::A,0,0},
    {5,4,4,5,2,3,+1,H3Coef::SqrtA,0,0},
    {5,4,4,5,2,4,-1,H3Coef::SqrtA,1,0},
    {5,4,4,5,2,5,-1,H3Coef::SqrtA,1,0},
    {5,4,4,5,3,0,-1,H3Coef::SqrtA,1,0},
    {5,4,4,5,3,3,+1,H3Coef::B,1,0},
    {5,4,4,5,3,4,+1,H3Coef::Dp,0,0},
    {5,4,4,5,3,5,+1,H3Coef::Dm,0,0},
    {5,4,4,5,4,0,-1,H3Coef::SqrtA,1,0},
    {5,4,4,5,4,3,-1,H3Coef::Dp,1,0},
    {5,4,4,5,4,4,+1,H3Coef::Dm,0,0},
    {5,4,4,5,4,5,-1,H3Coef::B,0,0},
    {5,4,4,5,5,0,-1,H3Coef::SqrtA,1,0},
    {5,4,4,5,5,3,-1,H3Coef::Dm,1,0},
    {5,4,4,5,5,4,-1,H3Coef::B,0,0},
    {5,4,4,5,5,5,+1,H3Coef::Dp,0,0},
    {5,4,5,3,2,2,-1,H3Coef::A,1,0},
    {5,4,5,3,2,3,+1,H3Coef::SqrtA,0,0},
    {5,4,5,3,2,4,+1,H3Coef::SqrtA,1,0},
    {5,4,5,3,2,5,-1,H3Coef::SqrtA,0,0},
    {5,4,5,3,3,2,-1,H3Coef::SqrtA,0,0},
    {5,4,5,3,3,3,+1,H3Coef::Dm,1,0},
    {5,4,5,3,3,4,-1,H3Coef::B,0,0},
    {5,4,5,3,3,5,-1,H3Coef::Dp,1,0},
    {5,4,5,3,4,2,+1,H3Coef::SqrtA,0,0},
    {5,4,5,3,4,3,+1,H3Coef::B,1,0},
    {5,4,5,3,4,4,-1,H3Coef::Dp,0,0},
    {5,4,5,3,4,5,+1,H3Coef::Dm,1,0},
    {5,4,5,3,5,2,+1,H3Coef::SqrtA,1,0},
    {5,4,5,3,5,3,-1,H3Coef::Dp,0,0},
    {5,4,5,3,5,4,-1,H3Coef::Dm,1,0},
    {5,4,5,3,5,5,-1,H3Coef::B,0,0},
    {5,5,3,3,0,2,+1,H3Coef::A,0,0},
    {5,5,3,3,0,3,+1,H3Coef::SqrtA,1,0},
    {5,5,3,3,0,4,-1,H3Coef::SqrtA,0,0},
    {5,5,3,3,0,5,+1,H3Coef::SqrtA,0,0},
    {5,5,3,3,3,2,+1,H3Coef::SqrtA,0,0},
    {5,5,3,3,3,3,+1,H3Coef::Dp,1,0},
    {5,5,3,3,3,4,-1,H3Coef::Dm,0,0},
    {5,5,3,3,3,5,-1,H3Coef::B,0,0},
    {5,5,3,3,4,2,-1,H3Coef::SqrtA,1,0},
    {5,5,3,3,4,3,-1,H3Coef::Dm,0,0},
    {5,5,3,3,4,4,-1,H3Coef::B,1,0},
    {5,5,3,3,4,5,-1,H3Coef::Dp,1,0},
    {5,5,3,3,5,2,+1,H3Coef::SqrtA,1,0},
    {5,5,3,3,5,3,-1,H3Coef::B,0,0},
    {5,5,3,3,5,4,-1,H3Coef::Dp,1,0},
    {5,5,3,3,5,5,+1,H3Coef::Dm,1,0},
    {5,5,4,4,0,1,+1,H3Coef::A,0,0},
    {5,5,4,4,0,3,+1,H3Coef::SqrtA,0,0},
    {5,5,4,4,0,4,-1,H3Coef::SqrtA,1,0},
    {5,5,4,4,0,5,-1,H3Coef::SqrtA,1,0},
    {5,5,4,4,3,1,+1,H3Coef::SqrtA,0,0},
    {5,5,4,4,3,3,-1,H3Coef::B,0,0},
    {5,5,4,4,3,4,-1,H3Coef::Dp,1,0},
    {5,5,4,4,3,5,-1,H3Coef::Dm,1,0},
    {5,5,4,4,4,1,-1,H3Coef::SqrtA,1,0},
    {5,5,4,4,4,3,-1,H3Coef::Dp,1,0},
    {5,5,4,4,4,4,+1,H3Coef::Dm,0,0},
    {5,5,4,4,4,5,-1,H3Coef::B,0,0},
    {5,5,4,4,5,1,-1,H3Coef::SqrtA,1,0},
    {5,5,4,4,5,3,-1,H3Coef::Dm,1,0},
    {5,5,4,4,5,4,-1,H3Coef::B,0,0},
    {5,5,4,4,5,5,+1,H3Coef::Dp,0,0},
    {5,5,5,5,0,0,+1,H3Coef::A,0,0},
    {5,5,5,5,0,3,-1,H3Coef::SqrtA,1,1},
    {5,5,5,5,0,4,+1,H3Coef::SqrtA,1,0},
    {5,5,5,5,0,5,+1,H3Coef::SqrtA,1,0},
    {5,5,5,5,3,0,-1,H3Coef::SqrtA,1,1},
    {5,5,5,5,3,3,+1,H3Coef::Dm,0,0},
    {5,5,5,5,3,4,+1,H3Coef::B,0,1},
    {5,5,5,5,3,5,-1,H3Coef::Dp,0,1},
    {5,5,5,5,4,0,+1,H3Coef::SqrtA,1,0},
    {5,5,5,5,4,3,+1,H3Coef::B,0,1},
    {5,5,5,5,4,4,+1,H3Coef::Dp,0,0},
    {5,5,5,5,4,5,+1,H3Coef::Dm,0,0},
    {5,5,5,5,5,0,+1,H3Coef::SqrtA,1,0},
    {5,5,5,5,5,3,-1,H3Coef::Dp,0,1},
    {5,5,5,5,5,4,+1,H3Coef::Dm,0,0},
    {5,5,5,5,5,5,-1,H3Coef::B,0,0},
};

const std::size_t kH3EntryCount = sizeof(kH3Entries) / sizeof(kH3Entries[0]);

}  // namespace fcat
