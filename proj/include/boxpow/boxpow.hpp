#pragma once

#include "box_rep.hpp"
#include "construction.hpp"
#include "gadgets.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "random.hpp"
#include "rooted_tree.hpp"
#include "verify.hpp"
