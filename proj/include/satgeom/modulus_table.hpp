/**************************************************************************
 * modulus_table.hpp
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
#include <array>
#include <span>

namespace satgeom::gf {

struct ModulusEntry {
    std::uint32_t p;
    std::uint32_t degree;
    std::array<std::uint16_t, 21> coeffs;  // little-endian, monic, zero padded
};

// First primitive polynomial per (p, e), p < 1024, p^e <= 2^20.
std::span<const ModulusEntry> modulus_table();

}  // namespace satgeom::gf
