#pragma once

#include "hyptrace/constructions.hpp"
#include "hyptrace/cospectral.hpp"
#include "hyptrace/cycle_traces.hpp"
#include "hyptrace/errors.hpp"
#include "hyptrace/exact.hpp"
#include "hyptrace/graph.hpp"
#include "hyptrace/io.hpp"
#include "hyptrace/linalg.hpp"
#include "hyptrace/subgraphs.hpp"
#include "hyptrace/trace_oracle.hpp"
#include "hyptrace/tree_traces.hpp"
#include "hyptrace/trees.hpp"
