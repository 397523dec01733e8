#pragma once

#include "qfree/arith.hpp"
#include "qfree/basis.hpp"
#include "qfree/density.hpp"
#include "qfree/error.hpp"
#include "qfree/gamma.hpp"
#include "qfree/geometry.hpp"
#include "qfree/independent.hpp"
#include "qfree/lattice.hpp"
#include "qfree/monochromatize.hpp"
#include "qfree/real.hpp"
#include "qfree/rng.hpp"
#include "qfree/smooth.hpp"
