#ifndef STIELTJES_STIELTJES_HPP
#define STIELTJES_STIELTJES_HPP

// Exact moment -> Hankel determinant -> continued fraction -> indefinite
// string pipeline, with the forward Weyl recursion for bit-exact round trips.

#include "stieltjes/bench.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/expansion.hpp"
#include "stieltjes/forward.hpp"
#include "stieltjes/generators.hpp"
#include "stieltjes/hankel.hpp"
#include "stieltjes/json_io.hpp"
#include "stieltjes/moments.hpp"
#include "stieltjes/polynomial.hpp"
#include "stieltjes/rational.hpp"
#include "stieltjes/rational_function.hpp"

#endif
