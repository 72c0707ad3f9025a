#pragma once

#include "entlab/core.hpp"
#include "entlab/linalg.hpp"
#include "entlab/symmetry.hpp"
#include "entlab/witness.hpp"
#include "entlab/optimize.hpp"
#include "entlab/sdp.hpp"
#include "entlab/entanglement_sdp.hpp"
#include "entlab/statespace.hpp"
#include "entlab/povm.hpp"
#include "entlab/io.hpp"
