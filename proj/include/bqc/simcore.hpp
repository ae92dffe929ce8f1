// Copyright 2026 The bqc-workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "bqc/errors.hpp"
#include "bqc/simcore/gate.hpp"
#include "bqc/simcore/octant.hpp"
#include "bqc/simcore/ops.hpp"
#include "bqc/simcore/random.hpp"
#include "bqc/simcore/state_vector.hpp"
