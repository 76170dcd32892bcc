// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "socsim/bundled_data.hpp"
#include "socsim/calib.hpp"
#include "socsim/collab.hpp"
#include "socsim/errors.hpp"
#include "socsim/exact.hpp"
#include "socsim/hwmodel.hpp"
#include "socsim/netmodel.hpp"
#include "socsim/powermodel.hpp"
#include "socsim/report.hpp"
#include "socsim/rng.hpp"
#include "socsim/scenario_io.hpp"
#include "socsim/simengine.hpp"
#include "socsim/tco.hpp"
#include "socsim/trace.hpp"
