/**************************************************************************
 * kernels.hpp
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
#include <vector>

#include "satgeom/gftower.hpp"
#include "satgeom/projgeom.hpp"

// Exhaustive kernels. serial:: is the reference, omp:: must agree with it
// exactly for any thread count.
namespace satgeom::kern {

using gf::Field;
using pg::Point;

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::uint64_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::uint64_t size() const { return bits_; }
    void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    std::uint64_t count() const;
    // Lowest clear bit, or size() if all are set.
    std::uint64_t first_clear() const;
    Bitset &operator|=(const Bitset &o);
    bool operator==(const Bitset &) const = default;

private:
    std::uint64_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Marks, by enumeration rank, every point of PG(n, q) lying in the span of
// some subset of `size` points of pts.
namespace serial {
Bitset coverage_mark(const Field &f, std::size_t n, const std::vector<Point> &pts, std::size_t size);
}
namespace omp {
Bitset coverage_mark(const Field &f, std::size_t n, const std::vector<Point> &pts, std::size_t size);
}

// Syndromes of length r are indexed by sum_i s_i q^i. Entry s of the result
// is the least number of scaled columns summing to s, or kUnreached.
inline constexpr std::uint8_t kUnreached = 0xff;

namespace serial {
std::vector<std::uint8_t> syndrome_bfs(const Field &f, const std::vector<std::vector<gf::Elem>> &columns);
}
namespace omp {
std::vector<std::uint8_t> syndrome_bfs(const Field &f, const std::vector<std::vector<gf::Elem>> &columns);
}

int max_threads();
void set_threads(int k);

}  // namespace satgeom::kern
