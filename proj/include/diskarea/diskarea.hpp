#pragma once

#include "diskarea/errors.hpp"
#include "diskarea/geom_core.hpp"
#include "diskarea/circular_regions.hpp"
#include "diskarea/polygon.hpp"
#include "diskarea/oracles.hpp"
#include "diskarea/disk_triangle.hpp"
#include "diskarea/disk_polygon.hpp"
#include "diskarea/distance_distribution.hpp"
#include "diskarea/io.hpp"
#include "diskarea/bench.hpp"
