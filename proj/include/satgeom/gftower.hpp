/**************************************************************************
 * gftower.hpp
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
#include <span>
#include <utility>
#include <vector>

namespace satgeom::gf {

// An element is the integer whose base-p digits are its little-endian
// polynomial coefficients.
using Elem = std::uint32_t;

struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t degree = 0;
    std::vector<std::uint32_t> modulus;  // length degree + 1, little-endian, monic

    bool operator==(const FieldSpec &) const = default;
};

bool is_prime(std::uint64_t n);

// Shipped modulus for GF(p^e). Throws NotPrime or NoModulus.
FieldSpec lookup_modulus(std::uint32_t p, std::uint32_t degree);

class Field {
public:
    Field() = default;
    // Throws BadParams unless the modulus is monic with x of order p^e - 1.
    explicit Field(FieldSpec spec);

    const FieldSpec &spec() const { return spec_; }
    std::uint32_t p() const { return spec_.p; }
    std::uint32_t degree() const { return spec_.degree; }
    std::uint32_t order() const { return q_; }

    Elem alpha() const { return alpha_; }
    Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
    std::uint32_t log(Elem a) const { return log_[a]; }

    Elem add(Elem a, Elem b) const {
        if (spec_.p == 2)
            return a ^ b;
        if (!add_.empty())
            return add_[a * q_ + b];
        return add_digits(a, b);
    }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0)
            return 0;
        std::uint32_t s = log_[a] + log_[b];
        return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t n) const;

    std::vector<std::uint32_t> coeffs(Elem a) const;
    Elem from_coeffs(std::span<const std::uint32_t> c) const;

private:
    Elem add_digits(Elem a, Elem b) const;

    FieldSpec spec_;
    std::uint32_t q_ = 0;
    Elem alpha_ = 0;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> neg_;
    std::vector<Elem> add_;
};

// GF(q) over its subfield GF(q'), q = q'^k.
class FieldTower {
public:
    FieldTower() = default;
    FieldTower(Field big, std::uint32_t sub_degree);

    const Field &big() const { return big_; }
    std::uint32_t sub_degree() const { return sub_degree_; }
    std::uint32_t ext_degree() const { return k_; }
    std::uint32_t q_sub() const { return static_cast<std::uint32_t>(subfield_.size()); }
    Elem alpha() const { return big_.alpha(); }
    Elem gamma() const { return gamma_; }

    // Subfield elements in increasing integer order; [0] = 0, [1] = 1.
    const std::vector<Elem> &subfield() const { return subfield_; }
    bool is_in_subfield(Elem x) const { return sub_index_[x] >= 0; }
    // Position in subfield(), or -1.
    int sub_index(Elem x) const { return sub_index_[x]; }

    std::vector<Elem> decompose(Elem x) const;
    Elem recompose(std::span<const Elem> parts) const;

private:
    Field big_;
    std::uint32_t sub_degree_ = 0;
    std::uint32_t k_ = 0;
    Elem gamma_ = 0;
    std::vector<Elem> subfield_;
    std::vector<int> sub_index_;
    std::vector<Elem> alpha_pow_;                 // alpha^0 .. alpha^(k-1)
    std::vector<std::vector<std::uint32_t>> solve_;  // GF(p) inverse of the product basis
};

FieldTower build_tower(std::uint32_t p, std::uint32_t e_sub, std::uint32_t k);

// (p, e) with q = p^e. Throws BadParams unless q is a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);
// GF(q_sub^k) over GF(q_sub).
FieldTower tower_over(std::uint64_t q_sub, std::uint32_t k);

// Field isomorphism between the subfields of two towers over the same q'.
// Returns, for each index into a.subfield(), the matching element of
// b.subfield().
std::vector<Elem> subfield_isomorphism(const FieldTower &a, const FieldTower &b);

}  // namespace satgeom::gf
