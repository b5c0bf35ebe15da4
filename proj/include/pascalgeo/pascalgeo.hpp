#pragma once

#include "pascalgeo/error.hpp"
#include "pascalgeo/formula.hpp"
#include "pascalgeo/hexagram.hpp"
#include "pascalgeo/multipoly.hpp"
#include "pascalgeo/pascal.hpp"
#include "pascalgeo/projgeom.hpp"
#include "pascalgeo/identities.hpp"
#include "pascalgeo/random.hpp"
#include "pascalgeo/rational.hpp"
#include "pascalgeo/sextuple.hpp"
#include "pascalgeo/symbols.hpp"
#include "pascalgeo/unipoly.hpp"
