#pragma once

// Umbrella header.

#include "twy/expr.hpp"
#include "twy/invariants.hpp"
#include "twy/lie.hpp"
#include "twy/linalg.hpp"
#include "twy/multipoly.hpp"
#include "twy/pbw.hpp"
#include "twy/rational.hpp"
#include "twy/relations.hpp"
#include "twy/report.hpp"
#include "twy/series.hpp"
#include "twy/series_matrix.hpp"
#include "twy/suite.hpp"
#include "twy/symfun.hpp"
