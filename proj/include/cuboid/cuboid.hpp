/*
   Copyright 2026 The cuboid-quintic authors

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

#ifndef CUBOID_CUBOID_HPP
#define CUBOID_CUBOID_HPP

#include "cuboid/certificate.hpp"
#include "cuboid/check.hpp"
#include "cuboid/curve.hpp"
#include "cuboid/exact.hpp"
#include "cuboid/family.hpp"
#include "cuboid/multipoly.hpp"
#include "cuboid/parallel.hpp"
#include "cuboid/resultant.hpp"
#include "cuboid/sweep.hpp"
#include "cuboid/unipoly.hpp"

#endif  // CUBOID_CUBOID_HPP
