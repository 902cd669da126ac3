#pragma once

#include "bicomplex.hpp"
#include "boundary.hpp"
#include "bvp.hpp"
#include "config.hpp"
#include "fd.hpp"
#include "grid.hpp"
#include "hardy.hpp"
#include "hoib.hpp"
#include "io.hpp"
#include "operators.hpp"
#include "poly.hpp"
#include "quadrature.hpp"
#include "suite.hpp"
#include "transforms.hpp"
