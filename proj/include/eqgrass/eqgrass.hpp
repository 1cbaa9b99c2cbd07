#pragma once

#include "eqgrass/bipoly.hpp"
#include "eqgrass/modalg.hpp"
#include "eqgrass/oracle.hpp"
#include "eqgrass/schubert.hpp"
#include "eqgrass/search.hpp"
