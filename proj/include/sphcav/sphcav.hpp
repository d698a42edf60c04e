#pragma once

#include "sphcav/angular.hpp"
#include "sphcav/energy.hpp"
#include "sphcav/errors.hpp"
#include "sphcav/fields.hpp"
#include "sphcav/radial.hpp"
#include "sphcav/report.hpp"
#include "sphcav/specfun.hpp"
#include "sphcav/spectrum.hpp"
#include "sphcav/types.hpp"
