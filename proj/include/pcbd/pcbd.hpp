#pragma once

#include "constructions.hpp"
#include "design_core.hpp"
#include "error.hpp"
#include "estimation.hpp"
#include "hadamard.hpp"
#include "info_matrix.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "optimality.hpp"
#include "rational.hpp"
#include "version.hpp"
