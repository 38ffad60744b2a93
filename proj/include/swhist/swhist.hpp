#pragma once

#include "swhist/algorithms.hpp"
#include "swhist/doubling.hpp"
#include "swhist/errors.hpp"
#include "swhist/estimators.hpp"
#include "swhist/graph/alpha_good.hpp"
#include "swhist/graph/edge.hpp"
#include "swhist/graph/exact_matching.hpp"
#include "swhist/graph/greedy_matching.hpp"
#include "swhist/harness/generators.hpp"
#include "swhist/harness/records.hpp"
#include "swhist/harness/runner.hpp"
#include "swhist/harness/stream_file.hpp"
#include "swhist/histogram.hpp"
#include "swhist/oracle/alpha_good.hpp"
#include "swhist/oracle/matching.hpp"
#include "swhist/oracle/splits.hpp"
#include "swhist/oracle/window.hpp"
#include "swhist/rng.hpp"
