#pragma once

#include "error.hpp"
#include "interval.hpp"
#include "oracle.hpp"
#include "patterngen.hpp"
#include "rational.hpp"
#include "renorm.hpp"
#include "symbolic.hpp"
