#ifndef WITTALG_LIE_HPP
#define WITTALG_LIE_HPP

#include "wittalg/lie/derivation.hpp"
#include "wittalg/lie/derivation_algebra.hpp"
#include "wittalg/lie/lie_data.hpp"
#include "wittalg/lie/structure.hpp"
#include "wittalg/lie/witt.hpp"

#endif  // WITTALG_LIE_HPP
