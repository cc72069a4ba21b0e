#pragma once

#include "bigint.hpp"
#include "cli.hpp"
#include "decomp_tree.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "isomorphism.hpp"
#include "oracle.hpp"
#include "param_vec.hpp"
#include "pipeline.hpp"
#include "reducibility.hpp"
#include "reference_tables.hpp"
#include "search.hpp"
#include "table_format.hpp"
#include "tutte.hpp"
