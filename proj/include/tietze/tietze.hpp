#pragma once

// Exact arithmetic for semi-regular continued fractions
//
//     b_0 + a_1/(b_1 + a_2/(b_2 + ...)),  a_n in {-1, +1},  b_n >= 1,
//     b_n + a_{n+1} >= 1,
//
// with convergents, tail values and certified error bounds.

#include "tietze/rational.hpp"
#include "tietze/errors.hpp"
#include "tietze/sequence.hpp"
#include "tietze/convergents.hpp"
#include "tietze/oracle.hpp"
#include "tietze/tails.hpp"
#include "tietze/expand.hpp"
#include "tietze/checks.hpp"
