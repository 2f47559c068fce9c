// Umbrella header.

#ifndef TPACT_TPACT_HPP_
#define TPACT_TPACT_HPP_

#include "error.hpp"
#include "semigroup.hpp"
#include "morphisms.hpp"
#include "clifford.hpp"
#include "module.hpp"
#include "partial_action.hpp"
#include "correspondence.hpp"
#include "catalog.hpp"
#include "bundle_io.hpp"
#include "battery.hpp"

#endif  // TPACT_TPACT_HPP_
