// Copyright 2026 The qsd Authors
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

#ifndef QSD_QSD_HPP
#define QSD_QSD_HPP

#include "qsd/circulant.hpp"
#include "qsd/classifier.hpp"
#include "qsd/constructions.hpp"
#include "qsd/equivalence.hpp"
#include "qsd/gf4.hpp"
#include "qsd/gleason.hpp"
#include "qsd/known_codes.hpp"
#include "qsd/linear_code.hpp"
#include "qsd/quantum.hpp"
#include "qsd/reproduce.hpp"
#include "qsd/weight_tools.hpp"

#endif  // QSD_QSD_HPP
