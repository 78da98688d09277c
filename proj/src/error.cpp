/**************************************************************************
 * error.cpp
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

#include "satgeom/error.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>

namespace satgeom {

const char *errc_name(Errc c) noexcept {
    switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NoModulus: return "NoModulus";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::WrongCount: return "WrongCount";
    case Errc::NotAFrame: return "NotAFrame";
    case Errc::NotASubfieldPower: return "NotASubfieldPower";
    case Errc::BadConfiguration: return "BadConfiguration";
    case Errc::BadIncidence: return "BadIncidence";
    case Errc::PointOnHyperplane: return "PointOnHyperplane";
    case Errc::BadDirection: return "BadDirection";
    case Errc::ConfigMismatch: return "ConfigMismatch";
    case Errc::NotConcurrent: return "NotConcurrent";
    case Errc::DegenerateConfig: return "DegenerateConfig";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::BadParams: return "BadParams";
    case Errc::SelectionFailed: return "SelectionFailed";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NotSaturating: return "NotSaturating";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::Overflow: return "Overflow";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
    }
    return "Unknown";
}

namespace {

std::uint64_t env_cap(std::uint64_t fallback) {
    const char *s = std::getenv("SATGEOM_SIZE_CAP");
    if (!s || !*s)
        return fallback;
    try {
        return std::stoull(s);
    } catch (const std::exception &) {
        return fallback;
    }
}

}  // namespace

std::uint64_t point_cap() { return env_cap(10'000'000ULL); }

std::uint64_t syndrome_cap() { return env_cap(1ULL << 24); }

}  // namespace satgeom
