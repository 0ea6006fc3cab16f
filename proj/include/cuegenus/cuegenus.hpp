#pragma once

#include "cuegenus/exact.hpp"
#include "cuegenus/partitions.hpp"
#include "cuegenus/pseries.hpp"
#include "cuegenus/hurwitz.hpp"
#include "cuegenus/oracle.hpp"
#include "cuegenus/quasimod.hpp"
#include "cuegenus/numerics.hpp"
#include "cuegenus/serialize.hpp"
#include "cuegenus/cache.hpp"
#include "cuegenus/verify.hpp"
