#pragma once

#include "weyld/partitions.hpp"
#include "weyld/symchar.hpp"
#include "weyld/lr.hpp"
#include "weyld/bchar.hpp"
#include "weyld/dchar.hpp"
#include "weyld/decomp.hpp"
#include "weyld/oracle.hpp"
