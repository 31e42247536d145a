// Copyright 2026 The gelfand Authors
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

// Everything except io.hpp, which pulls in nlohmann/json.

#include "gelfand/algebra.hpp"
#include "gelfand/combinatorics.hpp"
#include "gelfand/diagram.hpp"
#include "gelfand/enumerate.hpp"
#include "gelfand/error.hpp"
#include "gelfand/family.hpp"
#include "gelfand/format.hpp"
#include "gelfand/linalg.hpp"
#include "gelfand/matrix.hpp"
#include "gelfand/model.hpp"
#include "gelfand/scalars.hpp"
#include "gelfand/symgroup.hpp"
#include "gelfand/verification.hpp"
