#ifndef WITTALG_SCALARS_HPP
#define WITTALG_SCALARS_HPP

#include "wittalg/scalars/combinatorics.hpp"
#include "wittalg/scalars/ext_field.hpp"
#include "wittalg/scalars/fp_poly.hpp"
#include "wittalg/scalars/prime_field.hpp"
#include "wittalg/scalars/ratfunc.hpp"
#include "wittalg/scalars/ring.hpp"
#include "wittalg/scalars/test_ring.hpp"

#endif  // WITTALG_SCALARS_HPP
