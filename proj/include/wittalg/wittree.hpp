#ifndef WITTALG_WITTREE_HPP
#define WITTALG_WITTREE_HPP

#include "wittalg/wittree/candidate.hpp"
#include "wittalg/wittree/forms.hpp"
#include "wittalg/wittree/recognize.hpp"

#endif  // WITTALG_WITTREE_HPP
