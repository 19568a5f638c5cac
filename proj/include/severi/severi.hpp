#pragma once

#include "severi/components.hpp"
#include "severi/degeneration.hpp"
#include "severi/direct_enumeration.hpp"
#include "severi/ec_witness.hpp"
#include "severi/embedding.hpp"
#include "severi/exact.hpp"
#include "severi/integral_polygon.hpp"
#include "severi/lattice.hpp"
#include "severi/lattice_paths.hpp"
#include "severi/polygon_io.hpp"
#include "severi/severi_degree.hpp"
#include "severi/sparse_poly.hpp"
#include "severi/subdivision.hpp"
#include "severi/tropical_curve.hpp"
