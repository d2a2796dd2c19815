// Copyright 2026 The cymub Authors
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

#pragma once

#include "cymub/ent/partition.hpp"
#include "cymub/ent/structure.hpp"
#include "cymub/fixtures.hpp"
#include "cymub/gf2/fibonacci.hpp"
#include "cymub/gf2/linalg.hpp"
#include "cymub/gf2/matrix.hpp"
#include "cymub/gf2/poly.hpp"
#include "cymub/io/json.hpp"
#include "cymub/mub/classes.hpp"
#include "cymub/mub/generator.hpp"
#include "cymub/mub/triple.hpp"
#include "cymub/num/cmatrix.hpp"
#include "cymub/pauli/dense.hpp"
#include "cymub/pauli/pauli.hpp"
#include "cymub/search/search.hpp"
#include "cymub/sim/checks.hpp"
#include "cymub/sim/eigenbasis.hpp"
#include "cymub/sim/unitary.hpp"
#include "cymub/synth/circuit.hpp"
#include "cymub/synth/export.hpp"
#include "cymub/synth/synthesize.hpp"
