#pragma once

#include "fracbateman/bateman.hpp"
#include "fracbateman/conformable.hpp"
#include "fracbateman/density.hpp"
#include "fracbateman/eigensolver.hpp"
#include "fracbateman/hermite.hpp"
#include "fracbateman/numerics.hpp"
#include "fracbateman/polyexp.hpp"
#include "fracbateman/quadrature.hpp"
