#pragma once

// Umbrella header for the gig library: greatest-increase digraphs on
// randomly labeled grids — exact probabilities, enumeration oracles, and
// Monte Carlo simulation.

#include "gig/digraph.hpp"
#include "gig/errors.hpp"
#include "gig/exact.hpp"
#include "gig/lattice.hpp"
#include "gig/montecarlo.hpp"
#include "gig/oracle.hpp"
#include "gig/rational.hpp"
