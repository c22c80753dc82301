#pragma once

// Umbrella header.
#include "braid3/analysis.hpp"
#include "braid3/family.hpp"
#include "braid3/io.hpp"
#include "braid3/suite.hpp"
