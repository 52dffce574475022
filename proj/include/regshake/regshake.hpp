#pragma once

#include "experiments.hpp"
#include "format.hpp"
#include "partition.hpp"
#include "piecewise_linear.hpp"
#include "plancherel.hpp"
#include "profile.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "shapes.hpp"
#include "shaking.hpp"
#include "svg.hpp"
