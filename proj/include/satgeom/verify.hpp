/**************************************************************************
 * verify.hpp
 *
 * Copyright 2026 The satgeom Authors
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
 **************************************************************************/

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "satgeom/gftower.hpp"
#include "satgeom/projgeom.hpp"

namespace satgeom::vf {

using BigInt = boost::multiprecision::cpp_int;
using gf::Field;
using pg::Point;
using pg::Subspace;

struct SaturationCertificate {
    int radius = -1;
    // A point outside every span of radius points of S; empty when radius = 0.
    std::optional<Point> witness;
    // covered[t]: points in the span of some t + 1 points of S.
    std::vector<std::uint64_t> covered;
    std::uint64_t total = 0;
    std::size_t set_size = 0;
};

// Like saturation_radius, but reports failure as radius = -1 with the
// witness taken from the last level examined.
SaturationCertificate certify(const std::vector<Point> &s, std::size_t n, const Field &f,
                              std::optional<std::size_t> max_rho = std::nullopt);

// Smallest rho <= max_rho (default n) such that S is rho-saturating.
// Throws NotSaturating, SizeLimit or BadParams.
SaturationCertificate saturation_radius(const std::vector<Point> &s, std::size_t n, const Field &f,
                                        std::optional<std::size_t> max_rho = std::nullopt);

// Whether every point outside `excluded` is in a span of at most rho + 1
// points of S.
bool saturates_outside(const std::vector<Point> &s, const Subspace &excluded, std::size_t rho, std::size_t n,
                       const Field &f);

double lower_bound(std::size_t n, std::size_t rho, std::uint64_t q);

// Exact size evaluators. Throw BadParams unless 0 < rho < n and
// 1 <= j <= rho + 1.
BigInt size_pj(std::size_t n, std::size_t rho, std::uint64_t q_sub, std::size_t j);
BigInt size_total(std::size_t n, std::size_t rho, std::uint64_t q_sub);
BigInt size_p1_prime(std::size_t n, std::size_t rho, std::uint64_t q_sub);

// Coefficients of the main bound. All are integers.
BigInt a_tilde(std::size_t rho, std::size_t j);
BigInt a_bar(std::size_t n, std::size_t rho, std::size_t j);

BigInt main_bound(std::size_t n, std::size_t rho, std::uint64_t q_sub);
// Requires 1 < rho < n.
BigInt simple_bound(std::size_t n, std::size_t rho, std::uint64_t q_sub);
// (rho + 1) theta_k(q); throws NotDivisible unless rho + 1 divides n + 1.
BigInt trivial_bound(std::size_t n, std::size_t rho, std::uint64_t q);

}  // namespace satgeom::vf
