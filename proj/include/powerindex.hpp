// Copyright 2026 The powerindex Authors
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

#include "powerindex/bitset.hpp"
#include "powerindex/catalog.hpp"
#include "powerindex/clique.hpp"
#include "powerindex/embedding.hpp"
#include "powerindex/graph.hpp"
#include "powerindex/graph_io.hpp"
#include "powerindex/group.hpp"
#include "powerindex/group_spec.hpp"
#include "powerindex/inverse_paths.hpp"
#include "powerindex/isomorphism.hpp"
#include "powerindex/matching.hpp"
#include "powerindex/number_theory.hpp"
#include "powerindex/patterns.hpp"
#include "powerindex/power_graph.hpp"
#include "powerindex/serialize.hpp"
#include "powerindex/theta.hpp"
#include "powerindex/verify.hpp"
