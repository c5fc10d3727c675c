#pragma once

#include "bugraph/betweenness.hpp"
#include "bugraph/canonical.hpp"
#include "bugraph/connectivity.hpp"
#include "bugraph/constructions.hpp"
#include "bugraph/discrepancy.hpp"
#include "bugraph/enumeration.hpp"
#include "bugraph/errors.hpp"
#include "bugraph/graph.hpp"
#include "bugraph/graph6.hpp"
#include "bugraph/rational.hpp"
#include "bugraph/report.hpp"
#include "bugraph/verifier.hpp"
