#pragma once

#include "rampi/big_float.hpp"
#include "rampi/catalog.hpp"
#include "rampi/errors.hpp"
#include "rampi/pi_reference.hpp"
#include "rampi/rational.hpp"
#include "rampi/report_json.hpp"
#include "rampi/series.hpp"
#include "rampi/shifted_factorial.hpp"
#include "rampi/summation.hpp"
#include "rampi/surd.hpp"
#include "rampi/verifier.hpp"
