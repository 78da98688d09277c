/**************************************************************************
 * error.hpp
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
#include <stdexcept>
#include <string>

namespace satgeom {

enum class Errc {
    NotPrime,
    NoModulus,
    SizeLimit,
    WrongCount,
    NotAFrame,
    NotASubfieldPower,
    BadConfiguration,
    BadIncidence,
    PointOnHyperplane,
    BadDirection,
    ConfigMismatch,
    NotConcurrent,
    DegenerateConfig,
    OutOfDomain,
    BadParams,
    SelectionFailed,
    NotDivisible,
    NotSaturating,
    RankDeficient,
    Overflow,
    Parse,
    Io,
};

const char *errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Cap on enumerated point counts and syndrome spaces. SATGEOM_SIZE_CAP
// overrides both defaults when set.
std::uint64_t point_cap();
std::uint64_t syndrome_cap();

}  // namespace satgeom
