#pragma once

// Umbrella header for the library.

#include "p2q2/numtheory.hpp"
#include "p2q2/gfp2.hpp"
#include "p2q2/pc_group.hpp"
#include "p2q2/group_algorithms.hpp"
#include "p2q2/structure.hpp"
#include "p2q2/catalog.hpp"
#include "p2q2/automorphism.hpp"
#include "p2q2/aut_matrix.hpp"
#include "p2q2/construction.hpp"
#include "p2q2/predicted.hpp"
#include "p2q2/mn_sum.hpp"
#include "p2q2/verify.hpp"
#include "p2q2/report.hpp"
