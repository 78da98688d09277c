#!/usr/bin/env python3
# Copyright 2026 The satgeom Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates src/modulus_table.cpp.

For every prime p < 1024 and every degree e with p**e <= 2**20 the table
holds the first monic polynomial of degree e (ordered by the integer whose
little-endian base-p digits are its low coefficients) for which x has
multiplicative order p**e - 1. Such a polynomial is irreducible and x is a
primitive element of the quotient field.

Usage: python3 tools/gen_modulus_table.py > src/modulus_table.cpp
"""

import sys

HEADER = """\
/**************************************************************************
 * modulus_table.cpp
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

"""

MAX_ORDER = 1 << 20
MAX_PRIME = 1024


def primes_below(n):
    sieve = bytearray([1]) * n
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(n) if sieve[i]]


def prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def polymulmod(a, b, mod, p):
    e = len(mod) - 1
    prod = [0] * (2 * e - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            for t in range(e + 1):
                prod[k - e + t] = (prod[k - e + t] - c * mod[t]) % p
    return prod[:e]


def x_pow(n, mod, p):
    e = len(mod) - 1
    result = [1] + [0] * (e - 1)
    if e == 1:
        base = [(-mod[0]) % p]
    else:
        base = [0, 1] + [0] * (e - 2)
    while n:
        if n & 1:
            result = polymulmod(result, base, mod, p)
        base = polymulmod(base, base, mod, p)
        n >>= 1
    return result


def is_primitive(mod, p):
    e = len(mod) - 1
    order = p ** e - 1
    one = [1] + [0] * (e - 1)
    if mod[0] == 0:
        return False
    if x_pow(order, mod, p) != one:
        return False
    return all(x_pow(order // r, mod, p) != one for r in prime_factors(order))


def first_primitive(p, e):
    for low in range(p ** e):
        coeffs = []
        v = low
        for _ in range(e):
            coeffs.append(v % p)
            v //= p
        mod = coeffs + [1]
        if is_primitive(mod, p):
            return mod
    raise RuntimeError(f"no primitive polynomial for p={p} e={e}")


def main():
    rows = []
    for p in primes_below(MAX_PRIME):
        e = 1
        while p ** e <= MAX_ORDER:
            rows.append((p, e, first_primitive(p, e)))
            e += 1
    w = sys.stdout.write
    w(HEADER)
    w("// Generated by tools/gen_modulus_table.py. Do not edit.\n\n")
    w('#include "satgeom/modulus_table.hpp"\n\n')
    w("namespace satgeom::gf {\n\nnamespace {\n\n")
    w("constexpr ModulusEntry kEntries[] = {\n")
    for p, e, mod in rows:
        coeffs = ", ".join(str(c) for c in mod)
        w(f"    {{{p}, {e}, {{{coeffs}}}}},\n")
    w("};\n\n}  // namespace\n\n")
    w("std::span<const ModulusEntry> modulus_table() { return kEntries; }\n\n")
    w("}  // namespace satgeom::gf\n")


if __name__ == "__main__":
    main()
