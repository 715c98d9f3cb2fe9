// Copyright 2026 The fermicorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fermicorr/common.hpp"
#include "fermicorr/corr.hpp"
#include "fermicorr/fock.hpp"
#include "fermicorr/fock_space.hpp"
#include "fermicorr/io.hpp"
#include "fermicorr/models.hpp"
#include "fermicorr/natural_orbitals.hpp"
#include "fermicorr/oracle.hpp"
#include "fermicorr/quasifree.hpp"
#include "fermicorr/random.hpp"
#include "fermicorr/wavefunction.hpp"
