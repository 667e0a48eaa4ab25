#pragma once

// Everything at once.

#include "copsrobbers/errors.hpp"
#include "copsrobbers/rational.hpp"
#include "copsrobbers/graph.hpp"
#include "copsrobbers/distance.hpp"
#include "copsrobbers/graph_algorithms.hpp"
#include "copsrobbers/edge_list_io.hpp"
#include "copsrobbers/finite_field.hpp"
#include "copsrobbers/spectral.hpp"
#include "copsrobbers/generators.hpp"
#include "copsrobbers/exact_solver.hpp"
#include "copsrobbers/game.hpp"
#include "copsrobbers/evasion.hpp"
#include "copsrobbers/girth_strategies.hpp"
#include "copsrobbers/dispersion.hpp"
#include "copsrobbers/digraph_strategies.hpp"
#include "copsrobbers/expansion.hpp"
#include "copsrobbers/matching.hpp"
#include "copsrobbers/cop_expander.hpp"
