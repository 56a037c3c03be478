#pragma once

// Umbrella header: the whole library in one include.

#include "dsv/cache.hpp"
#include "dsv/cells.hpp"
#include "dsv/config.hpp"
#include "dsv/filling.hpp"
#include "dsv/groebner.hpp"
#include "dsv/hall_littlewood.hpp"
#include "dsv/json_io.hpp"
#include "dsv/latex.hpp"
#include "dsv/linalg.hpp"
#include "dsv/monomial.hpp"
#include "dsv/partition.hpp"
#include "dsv/polynomial.hpp"
#include "dsv/prd.hpp"
#include "dsv/presentations.hpp"
#include "dsv/qpoly.hpp"
#include "dsv/stable.hpp"
#include "dsv/symfunc.hpp"
#include "dsv/tableaux.hpp"
#include "dsv/verify.hpp"

namespace dsv {}
