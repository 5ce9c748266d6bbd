// Copyright 2026 The coreabacus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Umbrella header for the coreabacus library.

#pragma once

#include "coreabacus/abacus.hpp"
#include "coreabacus/constructions.hpp"
#include "coreabacus/enumeration.hpp"
#include "coreabacus/errors.hpp"
#include "coreabacus/formulas.hpp"
#include "coreabacus/guard_rails.hpp"
#include "coreabacus/io.hpp"
#include "coreabacus/oracle.hpp"
#include "coreabacus/partition.hpp"
#include "coreabacus/verification.hpp"
#include "coreabacus/version.hpp"
