// Copyright 2026 The qswitch Authors
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

// Convenience umbrella for the whole library. cli_config.hpp is not pulled
// in here because it depends on the vendored JSON parser; include it
// explicitly where config files are read.

#include "qswitch/channels.hpp"
#include "qswitch/errors.hpp"
#include "qswitch/experiment.hpp"
#include "qswitch/qmath.hpp"
#include "qswitch/rng.hpp"
#include "qswitch/runner.hpp"
#include "qswitch/switch.hpp"
#include "qswitch/tolerances.hpp"
