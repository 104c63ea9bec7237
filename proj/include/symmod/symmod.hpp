#pragma once

#include "bounds.hpp"
#include "crystal.hpp"
#include "crystal_depth.hpp"
#include "error.hpp"
#include "mullineux.hpp"
#include "partition.hpp"
#include "prime_field.hpp"
#include "specht.hpp"
#include "verify.hpp"
