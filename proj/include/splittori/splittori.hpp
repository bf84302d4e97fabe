#pragma once

/// @file splittori.hpp
/// Umbrella header for the library (everything except the command-line front end).

#include "splittori/billiard.hpp"
#include "splittori/classify.hpp"
#include "splittori/domain.hpp"
#include "splittori/error.hpp"
#include "splittori/matrix.hpp"
#include "splittori/monodromy.hpp"
#include "splittori/packing.hpp"
#include "splittori/probes.hpp"
#include "splittori/recurrence.hpp"
#include "splittori/scalar.hpp"
#include "splittori/svg.hpp"
