#pragma once

#include "belief.hpp"
#include "combine.hpp"
#include "core.hpp"
#include "distribution.hpp"
#include "frame.hpp"
#include "geometry.hpp"
#include "intervals.hpp"
#include "io.hpp"
#include "random.hpp"
#include "transforms.hpp"
#include "verify.hpp"
