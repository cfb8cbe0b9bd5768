#pragma once

#include "corekit/abacus.hpp"
#include "corekit/beta_set.hpp"
#include "corekit/bijection.hpp"
#include "corekit/catalan.hpp"
#include "corekit/error.hpp"
#include "corekit/partition.hpp"
#include "corekit/simulcores.hpp"
