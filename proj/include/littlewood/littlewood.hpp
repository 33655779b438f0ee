// littlewood - root header.

#pragma once

#include "littlewood/constants.hpp"
#include "littlewood/dyadic.hpp"
#include "littlewood/extremal.hpp"
#include "littlewood/form.hpp"
#include "littlewood/interp.hpp"
#include "littlewood/mixednorm.hpp"
#include "littlewood/opnorm.hpp"
#include "littlewood/rational.hpp"
