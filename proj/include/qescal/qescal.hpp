#pragma once

#include "qescal/rational.hpp"
#include "qescal/poly.hpp"
#include "qescal/root_count.hpp"
#include "qescal/laguerre.hpp"
#include "qescal/rational_function.hpp"
#include "qescal/wave.hpp"
#include "qescal/superpotential.hpp"
#include "qescal/susy.hpp"
#include "qescal/potential.hpp"
#include "qescal/spectral.hpp"
#include "qescal/quadrature.hpp"
#include "qescal/quadratic_field.hpp"
#include "qescal/multipoly.hpp"
#include "qescal/linalg.hpp"
#include "qescal/manybody.hpp"
#include "qescal/pct.hpp"
