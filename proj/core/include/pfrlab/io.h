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

#ifndef PFRLAB_IO_H_
#define PFRLAB_IO_H_

#include <iosfwd>
#include <string>

#include "pfrlab/func_table.h"
#include "pfrlab/point_set.h"

namespace pfrlab {

// Set files: a header line `n=<int> count=<int>` followed by `count` lines,
// each one element as a big-endian bit string of length n. Blank trailing
// lines are ignored. Parse failures throw ParseError naming the line.
PointSet ParseSet(std::istream& in);
void WriteSet(std::ostream& out, const PointSet& set);
PointSet ReadSetFile(const std::string& path);
void WriteSetFile(const std::string& path, const PointSet& set);

// Function tables: a header line `m=<int> n=<int>` followed by 2^m lines,
// line i holding f(i) as an n-bit big-endian string.
FuncTable ParseTable(std::istream& in);
void WriteTable(std::ostream& out, const FuncTable& f);
FuncTable ReadTableFile(const std::string& path);
void WriteTableFile(const std::string& path, const FuncTable& f);

}  // namespace pfrlab

#endif  // PFRLAB_IO_H_
