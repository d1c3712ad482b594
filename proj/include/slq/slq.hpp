#pragma once

#include "slq/bits.hpp"
#include "slq/construct.hpp"
#include "slq/families.hpp"
#include "slq/graph.hpp"
#include "slq/graph6.hpp"
#include "slq/hypergraph.hpp"
#include "slq/linalg.hpp"
#include "slq/rational.hpp"
#include "slq/reduction.hpp"
#include "slq/rng.hpp"
#include "slq/spectral.hpp"
#include "slq/subgraph.hpp"
#include "slq/verify.hpp"
