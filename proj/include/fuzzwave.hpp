/* Copyright 2026 The fuzzwave Authors.
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
#ifndef FUZZWAVE_HPP
#define FUZZWAVE_HPP

#include "fuzzwave/error.hpp"
#include "fuzzwave/fuzzy_regression.hpp"
#include "fuzzwave/hybrid.hpp"
#include "fuzzwave/simplex.hpp"
#include "fuzzwave/timeseries.hpp"
#include "fuzzwave/wavelet.hpp"

#endif // FUZZWAVE_HPP
