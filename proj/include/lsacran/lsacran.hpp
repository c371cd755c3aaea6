#pragma once

// Convenience umbrella for the whole library.

#include "lsacran/allocator.hpp"
#include "lsacran/band_plan.hpp"
#include "lsacran/errors.hpp"
#include "lsacran/lsa_protocol.hpp"
#include "lsacran/rate_model.hpp"
#include "lsacran/report.hpp"
#include "lsacran/scenario.hpp"
#include "lsacran/sim_engine.hpp"
#include "lsacran/sim_events.hpp"
#include "lsacran/sweeps.hpp"
#include "lsacran/units.hpp"
