#pragma once

#include "adkit/bench.hpp"
#include "adkit/carrier.hpp"
#include "adkit/drivers.hpp"
#include "adkit/dual.hpp"
#include "adkit/functions.hpp"
#include "adkit/second_order.hpp"
#include "adkit/tape.hpp"
