// Copyright 2026 The amekit Authors
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

#include "amekit/ame/certify.hpp"
#include "amekit/ame/construct.hpp"
#include "amekit/core/index.hpp"
#include "amekit/core/linalg.hpp"
#include "amekit/core/measure.hpp"
#include "amekit/core/pauli.hpp"
#include "amekit/core/random.hpp"
#include "amekit/core/state.hpp"
#include "amekit/errors.hpp"
#include "amekit/io.hpp"
#include "amekit/qss.hpp"
#include "amekit/teleport.hpp"
#include "amekit/tolerances.hpp"
