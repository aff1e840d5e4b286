#pragma once

// Umbrella header: exact signless-Laplacian walk machinery, rooted-product
// constructions, spectral-determination certificates and the exhaustive
// cospectral-mate oracle.

#include "qwalk/canonical.hpp"
#include "qwalk/certify.hpp"
#include "qwalk/error.hpp"
#include "qwalk/factor.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/graph6.hpp"
#include "qwalk/identities.hpp"
#include "qwalk/int_matrix.hpp"
#include "qwalk/int_poly.hpp"
#include "qwalk/mate_oracle.hpp"
#include "qwalk/mod_p.hpp"
#include "qwalk/numeric.hpp"
#include "qwalk/rooted_product.hpp"
#include "qwalk/walk.hpp"
