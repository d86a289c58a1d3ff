#pragma once

// Everything: exact arithmetic, the cocycle, cone decompositions, the pairing
// with test functions, L-values and the JSON front end.

#include "shintani/cli/run.hpp"
#include "shintani/cocycle/solomon.hpp"
#include "shintani/cone/decompose.hpp"
#include "shintani/io/json.hpp"
#include "shintani/lvalues/real_quadratic.hpp"
#include "shintani/random.hpp"
