#pragma once

#include "conelab/calibration.hpp"
#include "conelab/cone_functions.hpp"
#include "conelab/errors.hpp"
#include "conelab/holo_models.hpp"
#include "conelab/jordan.hpp"
#include "conelab/plancherel.hpp"
#include "conelab/quadrature.hpp"
#include "conelab/report.hpp"
#include "conelab/su11.hpp"
#include "conelab/whittaker.hpp"
