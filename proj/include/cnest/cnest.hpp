#pragma once

#include "cnest/core.hpp"
#include "cnest/fans.hpp"
#include "cnest/growth.hpp"
#include "cnest/io.hpp"
#include "cnest/partition.hpp"
#include "cnest/polyomino.hpp"
#include "cnest/render.hpp"
#include "cnest/statistics.hpp"
#include "cnest/swaps.hpp"
#include "cnest/verify.hpp"
#include "cnest/young.hpp"
