#pragma once

// Umbrella header for the ALDR toolkit: exact rejection sampling for finite
// discrete distributions with rational weights, exact entropy-cost analysis,
// and an entropy-optimal alias-method baseline.

#include "aldr/alias.hpp"
#include "aldr/analysis.hpp"
#include "aldr/bench.hpp"
#include "aldr/bit_expansion.hpp"
#include "aldr/bit_source.hpp"
#include "aldr/ddg_table.hpp"
#include "aldr/entropy.hpp"
#include "aldr/errors.hpp"
#include "aldr/interval.hpp"
#include "aldr/leaf_counts.hpp"
#include "aldr/nu.hpp"
#include "aldr/rational.hpp"
#include "aldr/samplers.hpp"
#include "aldr/weights.hpp"
