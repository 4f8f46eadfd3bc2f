#pragma once

#include "moea/algorithms.hpp"
#include "moea/benchmarks.hpp"
#include "moea/core.hpp"
#include "moea/crowding.hpp"
#include "moea/harness.hpp"
#include "moea/metrics.hpp"
#include "moea/variation.hpp"
