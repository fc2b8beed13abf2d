// Copyright 2026 The Stablegraphs Authors
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

// Line-oriented text format for finite descent data.
//
//   # intro example: two charts glued by a twist
//   m 4
//   group (1 2),(3 4)
//   base x
//   fiber x: p1 p2 p3 p4
//   cover s1 -> x
//   cover s2 -> x
//   sigma s1: p1 p2 p3 p4
//   sigma s2: p2 p1 p4 p3
//
// A morphism document holds two such blocks under the headers [source] and
// [target], followed by a [morphism] block of lines
//
//   map x -> y
//   fibermap x: p1->q2 p2->q1 p3->q4 p4->q3
//
// Errors are reported as InputError with a "line N: " prefix.

#ifndef STABLEGRAPHS_DESCENT_IO_H_
#define STABLEGRAPHS_DESCENT_IO_H_

#include <string>
#include <string_view>

#include "stablegraphs/descent.h"

namespace stablegraphs {

struct MorphismDocument {
  ChartedMarking source;
  ChartedMarking target;
  FiberMorphism morphism;
};

ChartedMarking ReadChartedMarking(std::string_view text,
                                  const Bounds& bounds = Bounds{});
MorphismDocument ReadMorphismDocument(std::string_view text,
                                      const Bounds& bounds = Bounds{});
std::string WriteChartedMarking(const ChartedMarking& marking);
std::string WriteMorphismDocument(const MorphismDocument& doc);

}  // namespace stablegraphs

#endif  // STABLEGRAPHS_DESCENT_IO_H_
