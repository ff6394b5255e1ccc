// Copyright 2026 The duclab Authors
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

#include "duclab/closure.hpp"
#include "duclab/engine.hpp"
#include "duclab/mbqc.hpp"
#include "duclab/pauli.hpp"
#include "duclab/polyqca.hpp"
#include "duclab/reports.hpp"
#include "duclab/schedule.hpp"
#include "duclab/statevector.hpp"
#include "duclab/symplectic.hpp"
#include "duclab/universality.hpp"
