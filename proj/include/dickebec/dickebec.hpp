/* Copyright 2026 the dickebec authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DICKEBEC_DICKEBEC_HPP
#define DICKEBEC_DICKEBEC_HPP

#include "dickebec/branch_solvers.hpp"
#include "dickebec/equilibrium.hpp"
#include "dickebec/errors.hpp"
#include "dickebec/fock_oracle.hpp"
#include "dickebec/model.hpp"
#include "dickebec/rootfind.hpp"
#include "dickebec/special_functions.hpp"
#include "dickebec/sweep.hpp"

#endif  // DICKEBEC_DICKEBEC_HPP
