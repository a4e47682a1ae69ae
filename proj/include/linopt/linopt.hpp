// Copyright 2026 The linopt Authors
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

// Convenience header pulling in the whole library.

#ifndef LINOPT_LINOPT_HPP
#define LINOPT_LINOPT_HPP

#include "linopt/algebra.hpp"
#include "linopt/commands.hpp"
#include "linopt/decompose.hpp"
#include "linopt/errors.hpp"
#include "linopt/fock.hpp"
#include "linopt/io.hpp"
#include "linopt/lift.hpp"
#include "linopt/matrix.hpp"
#include "linopt/synth.hpp"

#endif  // LINOPT_LINOPT_HPP
