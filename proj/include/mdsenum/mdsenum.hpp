#pragma once

#include "mdsenum/edge_dom.hpp"
#include "mdsenum/errors.hpp"
#include "mdsenum/flipping.hpp"
#include "mdsenum/gen_bipartite.hpp"
#include "mdsenum/gen_girth.hpp"
#include "mdsenum/gen_line.hpp"
#include "mdsenum/graph.hpp"
#include "mdsenum/graph_io.hpp"
#include "mdsenum/mis.hpp"
#include "mdsenum/oracle.hpp"
#include "mdsenum/vertex_set.hpp"
