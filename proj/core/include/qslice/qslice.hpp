#pragma once

#include "qslice/bch_deriv.hpp"
#include "qslice/cquaternion.hpp"
#include "qslice/error.hpp"
#include "qslice/lift_cover.hpp"
#include "qslice/quaternion.hpp"
#include "qslice/slice_function.hpp"
#include "qslice/star_exp_log.hpp"
