#pragma once

#include "starlike/analytic.hpp"
#include "starlike/bounds.hpp"
#include "starlike/config.hpp"
#include "starlike/harness.hpp"
#include "starlike/radii.hpp"
#include "starlike/random.hpp"
#include "starlike/regions.hpp"
#include "starlike/serialize.hpp"
