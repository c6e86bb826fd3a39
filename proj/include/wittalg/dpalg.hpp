#ifndef WITTALG_DPALG_HPP
#define WITTALG_DPALG_HPP

#include "wittalg/dpalg/dp_algebra.hpp"
#include "wittalg/dpalg/monomial_algebra.hpp"
#include "wittalg/dpalg/pia.hpp"
#include "wittalg/dpalg/truncated_poly.hpp"

#endif  // WITTALG_DPALG_HPP
