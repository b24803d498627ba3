#pragma once

#include "knlab/error.hpp"
#include "knlab/exact/matrix.hpp"
#include "knlab/exact/polynomial.hpp"
#include "knlab/exact/rational.hpp"
#include "knlab/exact/rational_function.hpp"
#include "knlab/exact/smith.hpp"
#include "knlab/curve/legendre.hpp"
#include "knlab/rr/function_field.hpp"
#include "knlab/rr/laurent.hpp"
#include "knlab/rr/riemann_roch.hpp"
#include "knlab/rr/valuation.hpp"
#include "knlab/equivariant/canonical.hpp"
#include "knlab/equivariant/character.hpp"
#include "knlab/equivariant/linearization.hpp"
#include "knlab/group/affine.hpp"
#include "knlab/group/presentation.hpp"
#include "knlab/double_cover/invariants.hpp"
#include "knlab/kn/bicanonical.hpp"
#include "knlab/kn/section.hpp"
#include "knlab/kn/surface.hpp"
#include "knlab/cli/app.hpp"
