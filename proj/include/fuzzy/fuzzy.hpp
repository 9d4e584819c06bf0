#pragma once

#include "fuzzy/audit.hpp"
#include "fuzzy/balance.hpp"
#include "fuzzy/error.hpp"
#include "fuzzy/generators.hpp"
#include "fuzzy/graph.hpp"
#include "fuzzy/io.hpp"
#include "fuzzy/iso.hpp"
#include "fuzzy/ops.hpp"
#include "fuzzy/random.hpp"
#include "fuzzy/rational.hpp"
