#pragma once

// Umbrella header for the whole toolkit.

#include "mindr/baselines.hpp"
#include "mindr/errors.hpp"
#include "mindr/eval.hpp"
#include "mindr/exact.hpp"
#include "mindr/gen.hpp"
#include "mindr/graph.hpp"
#include "mindr/heuristics.hpp"
#include "mindr/instance.hpp"
#include "mindr/io.hpp"
#include "mindr/oracle.hpp"
