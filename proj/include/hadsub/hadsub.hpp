#pragma once

// Umbrella header.

#include "hadsub/cmat.hpp"        // dense complex matrices, Hermitian eigensolver
#include "hadsub/algebra.hpp"     // *-algebra bases, expectations, commutants
#include "hadsub/hadamard.hpp"    // complex Hadamard matrices, phase pairs
#include "hadsub/tower.hpp"       // basic-construction tower, W blocks, Q split
#include "hadsub/biunitary.hpp"   // block transpose, permutation codec, vertex witness
#include "hadsub/invariants.hpp"  // angles, entropy, commuting cube, reports
#include "hadsub/verify.hpp"      // seeded verification suite
