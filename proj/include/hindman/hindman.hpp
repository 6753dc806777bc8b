#pragma once

#include "colorings.hpp"
#include "decoders.hpp"
#include "io.hpp"
#include "numerals.hpp"
#include "solver.hpp"
#include "stages.hpp"
