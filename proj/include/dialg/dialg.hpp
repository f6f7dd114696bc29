#pragma once

// Diagram algebras (partition, Brauer, Rook-Brauer, Rook), their linear
// categories C_A, the FI functors into them, and checkers for the
// constructive steps of the Noetherianity argument.

#include "dialg/diagram.hpp"
#include "dialg/error.hpp"
#include "dialg/fi.hpp"
#include "dialg/hom.hpp"
#include "dialg/io.hpp"
#include "dialg/parallel.hpp"
#include "dialg/poly.hpp"
#include "dialg/product.hpp"
#include "dialg/rank.hpp"
#include "dialg/render.hpp"
#include "dialg/report.hpp"
#include "dialg/suites.hpp"
#include "dialg/verify.hpp"
