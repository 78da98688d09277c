/**************************************************************************
 * support.hpp
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
#include <functional>
#include <random>
#include <vector>

#include "satgeom/error.hpp"
#include "satgeom/gftower.hpp"

namespace testsupport {

// Code of the satgeom::Error thrown by fn, or nullopt-like sentinel -1.
inline int errc_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const satgeom::Error &e) {
        return static_cast<int>(e.code());
    }
    return -1;
}

inline int code(satgeom::Errc c) { return static_cast<int>(c); }

// Schoolbook polynomial arithmetic modulo the field's modulus.
struct NaiveField {
    std::uint32_t p, e;
    std::vector<std::uint32_t> mod;

    explicit NaiveField(const satgeom::gf::FieldSpec &s) : p(s.p), e(s.degree), mod(s.modulus) {}

    std::vector<std::uint32_t> digits(std::uint32_t a) const {
        std::vector<std::uint32_t> d(e);
        for (auto &x : d) {
            x = a % p;
            a /= p;
        }
        return d;
    }
    std::uint32_t pack(const std::vector<std::uint32_t> &d) const {
        std::uint32_t a = 0;
        for (std::size_t i = e; i-- > 0;)
            a = a * p + d[i];
        return a;
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        auto x = digits(a), y = digits(b);
        for (std::uint32_t i = 0; i < e; ++i)
            x[i] = (x[i] + y[i]) % p;
        return pack(x);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        auto x = digits(a), y = digits(b);
        std::vector<std::uint64_t> prod(2 * e, 0);
        for (std::uint32_t i = 0; i < e; ++i)
            for (std::uint32_t j = 0; j < e; ++j)
                prod[i + j] = (prod[i + j] + std::uint64_t(x[i]) * y[j]) % p;
        for (std::size_t d = 2 * e; d-- > e;) {
            std::uint64_t c = prod[d];
            if (!c)
                continue;
            for (std::uint32_t i = 0; i <= e; ++i)
                prod[d - e + i] = (prod[d - e + i] + (p - c) * mod[i]) % p;
        }
        std::vector<std::uint32_t> r(e);
        for (std::uint32_t i = 0; i < e; ++i)
            r[i] = static_cast<std::uint32_t>(prod[i]);
        return pack(r);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t n) const {
        std::uint32_t r = 1;
        while (n--)
            r = mul(r, a);
        return r;
    }
};

inline std::mt19937_64 &rng() {
    static std::mt19937_64 g(20261015);
    return g;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

}  // namespace testsupport
