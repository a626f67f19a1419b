#pragma once

#include "comaximal/arithmetic.hpp"
#include "comaximal/cut_experiments.hpp"
#include "comaximal/error.hpp"
#include "comaximal/explicit_graph.hpp"
#include "comaximal/export.hpp"
#include "comaximal/oracles.hpp"
#include "comaximal/report.hpp"
#include "comaximal/support_model.hpp"
#include "comaximal/support_set.hpp"
#include "comaximal/verify.hpp"
