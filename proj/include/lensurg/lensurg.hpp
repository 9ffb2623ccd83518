#pragma once

#include "lensurg/checked.hpp"
#include "lensurg/residue.hpp"
#include "lensurg/lens.hpp"
#include "lensurg/laurent.hpp"
#include "lensurg/diagram.hpp"
#include "lensurg/reidemeister.hpp"
#include "lensurg/bridge.hpp"
#include "lensurg/invariants.hpp"
#include "lensurg/triviality.hpp"
#include "lensurg/decider.hpp"
#include "lensurg/report.hpp"
