#pragma once

// Umbrella header for the ring flow library.

#include "fluxring/ring.hpp"
#include "fluxring/steady.hpp"
#include "fluxring/rotation.hpp"
#include "fluxring/oracle.hpp"
#include "fluxring/landau.hpp"
#include "fluxring/profile_io.hpp"
#include "fluxring/random_profiles.hpp"
