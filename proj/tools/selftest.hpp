#pragma once

#include "pfh/twist_profile.hpp"

#include <ostream>

// Runs the invariant suite against one profile; prints `check,status,detail`
// rows and returns the number of failures.
int run_selftest(const pfh::TwistProfile& profile, int homology_cap, int brute_cap, std::ostream& out);
