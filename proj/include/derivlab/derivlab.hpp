#ifndef DERIVLAB_DERIVLAB_HPP
#define DERIVLAB_DERIVLAB_HPP

#include "classifier.hpp"
#include "context.hpp"
#include "derivation.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "linear_ode.hpp"
#include "membership.hpp"
#include "parser.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "resonance.hpp"
#include "simplicity.hpp"

#endif
