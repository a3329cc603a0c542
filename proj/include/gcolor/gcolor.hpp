#pragma once

#include "gcolor/coloring.hpp"
#include "gcolor/error.hpp"
#include "gcolor/experiments.hpp"
#include "gcolor/gcn.hpp"
#include "gcolor/generators.hpp"
#include "gcolor/graph.hpp"
#include "gcolor/io.hpp"
#include "gcolor/local_search.hpp"
#include "gcolor/planarity.hpp"
#include "gcolor/rng.hpp"
#include "gcolor/stats.hpp"
#include "gcolor/train.hpp"
