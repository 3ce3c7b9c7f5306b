// Copyright 2026 The tgrad Authors
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

#include "tgrad/bounds.hpp"
#include "tgrad/cliques.hpp"
#include "tgrad/coloring.hpp"
#include "tgrad/config.hpp"
#include "tgrad/densest.hpp"
#include "tgrad/density.hpp"
#include "tgrad/errors.hpp"
#include "tgrad/generators.hpp"
#include "tgrad/graph.hpp"
#include "tgrad/hats.hpp"
#include "tgrad/numeric.hpp"
#include "tgrad/pipeline.hpp"
#include "tgrad/subdivision_search.hpp"
#include "tgrad/trend.hpp"
#include "tgrad/witness.hpp"
