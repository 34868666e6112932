/*
 * Copyright 2026 The dyadic authors
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
#pragma once

#include <dyadic/chebyshev_odd.hpp>
#include <dyadic/core/eval_context.hpp>
#include <dyadic/core/fold.hpp>
#include <dyadic/core/numbers.hpp>
#include <dyadic/core/polynomial.hpp>
#include <dyadic/core/scaled_matrix.hpp>
#include <dyadic/even_power.hpp>
#include <dyadic/minpoly.hpp>
#include <dyadic/negative_power.hpp>
#include <dyadic/odd_power.hpp>
#include <dyadic/power_matrix.hpp>
#include <dyadic/series.hpp>
#include <dyadic/zeta.hpp>
