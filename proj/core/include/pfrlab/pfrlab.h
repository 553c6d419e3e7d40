/*
 * Copyright 2026 The pfrlab Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PFRLAB_PFRLAB_H_
#define PFRLAB_PFRLAB_H_

#include "pfrlab/access.h"
#include "pfrlab/bitmat.h"
#include "pfrlab/bitvec.h"
#include "pfrlab/error.h"
#include "pfrlab/func_table.h"
#include "pfrlab/homo.h"
#include "pfrlab/io.h"
#include "pfrlab/linear_map.h"
#include "pfrlab/pfr.h"
#include "pfrlab/planted.h"
#include "pfrlab/point_set.h"
#include "pfrlab/quadfit.h"
#include "pfrlab/quadpoly.h"
#include "pfrlab/rng.h"
#include "pfrlab/setops.h"
#include "pfrlab/subspace.h"
#include "pfrlab/wht.h"

#endif  // PFRLAB_PFRLAB_H_
