#pragma once

// Umbrella header.

#include "centra/axioms.hpp"
#include "centra/cache.hpp"
#include "centra/centre.hpp"
#include "centra/cohomology.hpp"
#include "centra/error.hpp"
#include "centra/field.hpp"
#include "centra/fullcentre.hpp"
#include "centra/graded.hpp"
#include "centra/group.hpp"
#include "centra/io.hpp"
#include "centra/matrix.hpp"
#include "centra/matrixsuite.hpp"
#include "centra/random.hpp"
#include "centra/report.hpp"
#include "centra/repworld.hpp"
#include "centra/snf.hpp"
