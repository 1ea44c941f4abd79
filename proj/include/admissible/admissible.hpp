/*
   Copyright 2026 The admissible-poly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ADMISSIBLE_ADMISSIBLE_HPP
#define ADMISSIBLE_ADMISSIBLE_HPP

#include "combinatorics.hpp"
#include "errors.hpp"
#include "finite_field.hpp"
#include "integer_irreducibility.hpp"
#include "limits.hpp"
#include "numeric.hpp"
#include "polynomials.hpp"
#include "sieve.hpp"

#endif
