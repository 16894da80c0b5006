#pragma once

#include "pagtc/beta.hpp"
#include "pagtc/binomial.hpp"
#include "pagtc/centrality.hpp"
#include "pagtc/contagion.hpp"
#include "pagtc/datasets.hpp"
#include "pagtc/generators.hpp"
#include "pagtc/graph.hpp"
#include "pagtc/oracle.hpp"
#include "pagtc/parallel.hpp"
#include "pagtc/seedopt.hpp"
#include "pagtc/targeting.hpp"
