#pragma once

// Umbrella header for the whole library.

#include "matchforge/antiforcing.hpp"
#include "matchforge/cli.hpp"
#include "matchforge/errors.hpp"
#include "matchforge/forcing.hpp"
#include "matchforge/formulas.hpp"
#include "matchforge/lattice.hpp"
#include "matchforge/matching.hpp"
#include "matchforge/polynomial.hpp"
#include "matchforge/serialize.hpp"
#include "matchforge/spectrum.hpp"
#include "matchforge/surd.hpp"
#include "matchforge/verify.hpp"
