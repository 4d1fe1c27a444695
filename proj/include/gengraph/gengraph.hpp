#pragma once

// Umbrella header for the generating-graph toolkit.

#include "gengraph/bitset.hpp"
#include "gengraph/bounds.hpp"
#include "gengraph/catalog.hpp"
#include "gengraph/checks.hpp"
#include "gengraph/classification.hpp"
#include "gengraph/counting.hpp"
#include "gengraph/errors.hpp"
#include "gengraph/expr.hpp"
#include "gengraph/graph.hpp"
#include "gengraph/group.hpp"
#include "gengraph/intervals.hpp"
#include "gengraph/planarity.hpp"
#include "gengraph/rational.hpp"
#include "gengraph/report.hpp"
#include "gengraph/subgroups.hpp"
#include "gengraph/verify.hpp"
