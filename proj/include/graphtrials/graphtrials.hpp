#pragma once

#include "graphtrials/connectivity.hpp"
#include "graphtrials/errors.hpp"
#include "graphtrials/evidence.hpp"
#include "graphtrials/geometry.hpp"
#include "graphtrials/gist.hpp"
#include "graphtrials/graph.hpp"
#include "graphtrials/layout.hpp"
#include "graphtrials/metrics.hpp"
#include "graphtrials/mutate.hpp"
#include "graphtrials/oracle.hpp"
#include "graphtrials/pipeline.hpp"
#include "graphtrials/serialize.hpp"
#include "graphtrials/svg.hpp"
#include "graphtrials/trial.hpp"
#include "graphtrials/verify.hpp"
