#ifndef WITTALG_AUTOS_HPP
#define WITTALG_AUTOS_HPP

#include "wittalg/autos/morphism.hpp"
#include "wittalg/autos/subgroups.hpp"
#include "wittalg/autos/triangulate.hpp"

#endif  // WITTALG_AUTOS_HPP
