#pragma once

#include "hypell/area.hpp"
#include "hypell/bernstein.hpp"
#include "hypell/certificate.hpp"
#include "hypell/conics.hpp"
#include "hypell/convex_program.hpp"
#include "hypell/deformation.hpp"
#include "hypell/elliptic.hpp"
#include "hypell/enclosing.hpp"
#include "hypell/errors.hpp"
#include "hypell/hull.hpp"
#include "hypell/minkowski.hpp"
#include "hypell/nelder_mead.hpp"
#include "hypell/quadrature.hpp"
#include "hypell/random.hpp"
#include "hypell/svg.hpp"
#include "hypell/uniqueness.hpp"
#include "hypell/verify.hpp"
