#pragma once

// Umbrella header for the σ-partition subgroup-embedding library.

#include "sigma/arith.hpp"
#include "sigma/bitset.hpp"
#include "sigma/corpus.hpp"
#include "sigma/dsl.hpp"
#include "sigma/embedding.hpp"
#include "sigma/errors.hpp"
#include "sigma/group.hpp"
#include "sigma/lattice.hpp"
#include "sigma/lemmas.hpp"
#include "sigma/partition.hpp"
#include "sigma/perm.hpp"
#include "sigma/report.hpp"
#include "sigma/sigma_core.hpp"
#include "sigma/structure.hpp"
#include "sigma/subgroup.hpp"
#include "sigma/theorems.hpp"
