#ifndef WLLADDER_WLLADDER_HPP
#define WLLADDER_WLLADDER_HPP

#include "cfi.hpp"
#include "delta.hpp"
#include "dress.hpp"
#include "fingerprint.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "isomorphism.hpp"
#include "named_graphs.hpp"
#include "subsets.hpp"
#include "wl.hpp"

#endif
