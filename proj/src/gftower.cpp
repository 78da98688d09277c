/**************************************************************************
 * gftower.cpp
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

#include "satgeom/gftower.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "satgeom/error.hpp"
#include "satgeom/modulus_table.hpp"

namespace satgeom::gf {

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 20;

std::string pe(std::uint32_t p, std::uint32_t e) {
    return "p=" + std::to_string(p) + " e=" + std::to_string(e);
}

// Gauss-Jordan inverse over GF(p).
std::vector<std::vector<std::uint32_t>> invert_mod_p(std::vector<std::vector<std::uint32_t>> a,
                                                     std::uint32_t p) {
    const std::size_t n = a.size();
    std::vector<std::vector<std::uint32_t>> inv(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    auto inv_scalar = [p](std::uint64_t x) {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1)
                r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    };
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0)
            ++piv;
        if (piv == n)
            throw Error(Errc::RankDeficient, "subfield basis is singular");
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        std::uint64_t s = inv_scalar(a[c][c]);
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] = static_cast<std::uint32_t>(a[c][j] * s % p);
            inv[c][j] = static_cast<std::uint32_t>(inv[c][j] * s % p);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            std::uint64_t f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] = static_cast<std::uint32_t>((a[r][j] + (p - f) * a[c][j]) % p);
                inv[r][j] = static_cast<std::uint32_t>((inv[r][j] + (p - f) * inv[c][j]) % p);
            }
        }
    }
    return inv;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec lookup_modulus(std::uint32_t p, std::uint32_t degree) {
    if (!is_prime(p))
        throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    for (const auto &e : modulus_table()) {
        if (e.p == p && e.degree == degree) {
            FieldSpec s{p, degree, {}};
            s.modulus.assign(e.coeffs.begin(), e.coeffs.begin() + degree + 1);
            return s;
        }
    }
    throw Error(Errc::NoModulus, "no shipped modulus for " + pe(p, degree));
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    const std::uint32_t p = spec_.p, e = spec_.degree;
    if (!is_prime(p))
        throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (e == 0 || spec_.modulus.size() != e + 1 || spec_.modulus[e] != 1)
        throw Error(Errc::BadParams, "modulus must be monic of degree " + std::to_string(e));
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw Error(Errc::BadParams, "field order exceeds 2^20 for " + pe(p, e));
    }
    for (auto c : spec_.modulus)
        if (c >= p)
            throw Error(Errc::BadParams, "modulus coefficient out of range");
    q_ = static_cast<std::uint32_t>(q);

    std::vector<std::uint32_t> pw(e, 1);
    for (std::uint32_t i = 1; i < e; ++i)
        pw[i] = pw[i - 1] * p;
    auto mulx = [&](Elem v) {
        std::vector<std::uint32_t> d(e);
        for (std::uint32_t i = 0; i < e; ++i) {
            d[i] = v % p;
            v /= p;
        }
        std::uint32_t top = d[e - 1];
        for (std::uint32_t i = e - 1; i > 0; --i)
            d[i] = d[i - 1];
        d[0] = 0;
        Elem out = 0;
        for (std::uint32_t i = 0; i < e; ++i) {
            std::uint32_t c = (d[i] + (p - top) * spec_.modulus[i]) % p;
            out += c * pw[i];
        }
        return out;
    };

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    Elem v = 1;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
        if (k > 0 && v == 1)
            throw Error(Errc::BadParams, "x is not primitive modulo the given polynomial");
        exp_[k] = v;
        log_[v] = k;
        v = mulx(v);
    }
    if (v != 1)
        throw Error(Errc::BadParams, "modulus is not irreducible");
    alpha_ = mulx(1);

    neg_.assign(q_, 0);
    for (Elem a = 0; a < q_; ++a) {
        Elem x = a, out = 0;
        for (std::uint32_t i = 0; i < e; ++i) {
            out += ((p - x % p) % p) * pw[i];
            x /= p;
        }
        neg_[a] = out;
    }
    if (p != 2 && q_ <= 512) {
        add_.assign(static_cast<std::size_t>(q_) * q_, 0);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b < q_; ++b)
                add_[a * q_ + b] = add_digits(a, b);
    }
}

Elem Field::add_digits(Elem a, Elem b) const {
    const std::uint32_t p = spec_.p;
    Elem out = 0, w = 1;
    while (a || b) {
        out += ((a % p + b % p) % p) * w;
        a /= p;
        b /= p;
        w *= p;
    }
    return out;
}

Elem Field::inv(Elem a) const {
    if (a == 0)
        throw Error(Errc::BadParams, "inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t n) const {
    if (n == 0)
        return 1;
    if (a == 0)
        return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (n % (q_ - 1))) % (q_ - 1)];
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
    std::vector<std::uint32_t> c(spec_.degree);
    for (auto &x : c) {
        x = a % spec_.p;
        a /= spec_.p;
    }
    return c;
}

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() != spec_.degree)
        throw Error(Errc::BadParams, "coefficient vector has wrong length");
    Elem out = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= spec_.p)
            throw Error(Errc::BadParams, "coefficient out of range");
        out = out * spec_.p + c[i];
    }
    return out;
}

FieldTower::FieldTower(Field big, std::uint32_t sub_degree) : big_(std::move(big)), sub_degree_(sub_degree) {
    const std::uint32_t e = big_.degree();
    if (sub_degree == 0 || e % sub_degree != 0)
        throw Error(Errc::NotASubfieldPower,
                    "degree " + std::to_string(sub_degree) + " does not divide " + std::to_string(e));
    k_ = e / sub_degree;
    const std::uint32_t q = big_.order();
    std::uint32_t qs = 1;
    for (std::uint32_t i = 0; i < sub_degree; ++i)
        qs *= big_.p();
    gamma_ = big_.exp((q - 1) / (qs - 1));

    subfield_.push_back(0);
    Elem g = 1;
    for (std::uint32_t i = 0; i + 1 < qs; ++i) {
        subfield_.push_back(g);
        g = big_.mul(g, gamma_);
    }
    std::sort(subfield_.begin(), subfield_.end());
    sub_index_.assign(q, -1);
    for (std::size_t i = 0; i < subfield_.size(); ++i)
        sub_index_[subfield_[i]] = static_cast<int>(i);

    alpha_pow_.resize(k_);
    for (std::uint32_t j = 0; j < k_; ++j)
        alpha_pow_[j] = big_.exp(j);

    // Columns gamma^b alpha^j, indexed j * e' + b.
    std::vector<std::vector<std::uint32_t>> m(e, std::vector<std::uint32_t>(e));
    for (std::uint32_t j = 0; j < k_; ++j) {
        for (std::uint32_t b = 0; b < sub_degree; ++b) {
            auto c = big_.coeffs(big_.mul(big_.pow(gamma_, b), alpha_pow_[j]));
            for (std::uint32_t r = 0; r < e; ++r)
                m[r][j * sub_degree + b] = c[r];
        }
    }
    solve_ = invert_mod_p(std::move(m), big_.p());
}

std::vector<Elem> FieldTower::decompose(Elem x) const {
    const std::uint32_t e = big_.degree(), p = big_.p();
    auto cx = big_.coeffs(x);
    std::vector<Elem> out(k_, 0);
    for (std::uint32_t j = 0; j < k_; ++j) {
        Elem acc = 0;
        Elem gb = 1;
        for (std::uint32_t b = 0; b < sub_degree_; ++b) {
            std::uint64_t c = 0;
            const auto &row = solve_[j * sub_degree_ + b];
            for (std::uint32_t r = 0; r < e; ++r)
                c += static_cast<std::uint64_t>(row[r]) * cx[r];
            c %= p;
            acc = big_.add(acc, big_.mul(static_cast<Elem>(c), gb));
            gb = big_.mul(gb, gamma_);
        }
        out[j] = acc;
    }
    return out;
}

Elem FieldTower::recompose(std::span<const Elem> parts) const {
    if (parts.size() != k_)
        throw Error(Errc::BadParams, "wrong number of components");
    Elem acc = 0;
    for (std::uint32_t j = 0; j < k_; ++j)
        acc = big_.add(acc, big_.mul(parts[j], alpha_pow_[j]));
    return acc;
}

FieldTower build_tower(std::uint32_t p, std::uint32_t e_sub, std::uint32_t k) {
    if (!is_prime(p))
        throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (e_sub == 0 || k == 0)
        throw Error(Errc::BadParams, "degrees must be positive");
    return FieldTower(Field(lookup_modulus(p, e_sub * k)), e_sub);
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
    if (q < 2)
        throw Error(Errc::BadParams, std::to_string(q) + " is not a prime power");
    std::uint64_t p = 2;
    while (q % p)
        ++p;
    std::uint32_t e = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1)
        throw Error(Errc::BadParams, std::to_string(q) + " is not a prime power");
    return {static_cast<std::uint32_t>(p), e};
}

FieldTower tower_over(std::uint64_t q_sub, std::uint32_t k) {
    auto [p, e] = prime_power(q_sub);
    return build_tower(p, e, k);
}

std::vector<Elem> subfield_isomorphism(const FieldTower &a, const FieldTower &b) {
    if (a.big().p() != b.big().p() || a.q_sub() != b.q_sub())
        throw Error(Errc::BadParams, "subfields differ in order");
    const std::uint32_t qs = a.q_sub();
    if (qs == 2)
        return {0, 1};
    const Field &fa = a.big(), &fb = b.big();
    const std::uint32_t la = fa.log(a.gamma());
    for (std::uint32_t t = 1; t < qs - 1; ++t) {
        if (std::gcd(t, qs - 1) != 1)
            continue;
        std::vector<Elem> map(qs, 0);
        for (std::uint32_t i = 1; i < qs; ++i) {
            Elem x = a.subfield()[i];
            std::uint64_t k = fa.log(x) / la;  // x = gamma_a^k
            map[i] = fb.pow(b.gamma(), k * t);
        }
        bool ok = true;
        for (std::uint32_t i = 0; i < qs && ok; ++i) {
            Elem x1 = fa.add(a.subfield()[i], 1);
            ok = map[a.sub_index(x1)] == fb.add(map[i], 1);
        }
        if (ok)
            return map;
    }
    throw Error(Errc::SelectionFailed, "no subfield isomorphism found");
}

}  // namespace satgeom::gf
