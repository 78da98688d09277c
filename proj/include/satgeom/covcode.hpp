/**************************************************************************
 * covcode.hpp
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
#include <iosfwd>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "satgeom/gftower.hpp"
#include "satgeom/projgeom.hpp"
#include "satgeom/saturate.hpp"

namespace satgeom::cc {

using Rational = boost::multiprecision::cpp_rational;
using gf::Elem;
using gf::Field;
using pg::Matrix;

// [n, n - r]_q code given by an r x n parity check matrix.
struct LinearCodeSpec {
    Field field;
    std::size_t n = 0;
    std::size_t r = 0;
    Matrix h;  // r rows of length n
    std::optional<int> claimed_r;

    std::vector<std::vector<Elem>> columns() const;
};

// Throws RankDeficient unless h has full row rank, BadParams on zero or
// ragged columns.
LinearCodeSpec make_code(const Field &f, const Matrix &h, std::optional<int> claimed_r = std::nullopt);

// Columns are the points of S in construction order; r = N + 1 and the
// claimed radius is rho + 1.
LinearCodeSpec parity_check_matrix(const sat::SaturatingSet &s);

// Exact covering radius by syndrome exhaustion. Throws SizeLimit when q^r
// exceeds the syndrome cap.
int covering_radius(const LinearCodeSpec &c);

// q^-r sum_{i <= R} (q - 1)^i C(n, i).
Rational covering_density(std::size_t n, std::size_t r, std::size_t radius, std::uint64_t q);

// ((R - 1) R)^R / R! (sum_{i < R} q'^-i)^R. Throws BadParams unless R > 2.
double density_bound(std::size_t radius, std::uint64_t q_sub);
// (e (R - 1) (q - 1) / (q - q'^(R - 1)))^R with q = q'^R.
double density_bound_euler(std::size_t radius, std::uint64_t q_sub);

// Text format: "p e n r", then r lines of n entries. Each entry lists the
// element's base-p coefficients, lowest first, as digits 0-9a-z; for
// p > 36 the coefficients are decimal and joined by '.'.
void write_parity_check(std::ostream &os, const LinearCodeSpec &c);
// Uses the shipped modulus for GF(p^e). Throws Parse.
LinearCodeSpec read_parity_check(std::istream &is);

}  // namespace satgeom::cc
