#pragma once

// Umbrella header for the gridknot library.

#include "gridknot/alexander.hpp"
#include "gridknot/enumerate.hpp"
#include "gridknot/errors.hpp"
#include "gridknot/grid.hpp"
#include "gridknot/laurent.hpp"
#include "gridknot/simplify.hpp"
#include "gridknot/tau.hpp"
