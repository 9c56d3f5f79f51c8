// Copyright 2026 The reliattack Authors.
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

#ifndef RELIATTACK_RELIATTACK_HPP
#define RELIATTACK_RELIATTACK_HPP

#include "reliattack/attacks.hpp"
#include "reliattack/error.hpp"
#include "reliattack/games.hpp"
#include "reliattack/io.hpp"
#include "reliattack/limits.hpp"
#include "reliattack/oracle.hpp"
#include "reliattack/player_set.hpp"
#include "reliattack/reliability.hpp"
#include "reliattack/shapley.hpp"
#include "reliattack/solve.hpp"

#endif  // RELIATTACK_RELIATTACK_HPP
