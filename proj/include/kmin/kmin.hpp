#pragma once

// Umbrella header.

#include "errors.hpp"
#include "ring.hpp"
#include "integer.hpp"
#include "fraction.hpp"
#include "polynomial.hpp"
#include "fracpoly.hpp"
#include "matrix.hpp"
#include "linalg.hpp"
#include "word.hpp"
#include "automaton.hpp"
#include "minimize.hpp"
#include "equivalence.hpp"
