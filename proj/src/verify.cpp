/**************************************************************************
 * verify.cpp
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

#include "satgeom/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "satgeom/error.hpp"
#include "satgeom/kernels.hpp"

namespace satgeom::vf {

namespace {

BigInt ipow(std::uint64_t b, std::size_t e) { return boost::multiprecision::pow(BigInt(b), static_cast<unsigned>(e)); }

BigInt theta_big(std::size_t k, std::uint64_t q) {
    BigInt s = 0;
    for (std::size_t i = 0; i <= k; ++i)
        s += ipow(q, i);
    return s;
}

void check_params(std::size_t n, std::size_t rho, std::uint64_t q_sub) {
    if (rho == 0 || rho >= n)
        throw Error(Errc::BadParams, "need 0 < rho < n, got n=" + std::to_string(n) + " rho=" + std::to_string(rho));
    gf::prime_power(q_sub);
}

using I = long long;

}  // namespace

SaturationCertificate certify(const std::vector<Point> &s, std::size_t n, const Field &f,
                              std::optional<std::size_t> max_rho) {
    if (s.empty())
        throw Error(Errc::BadParams, "empty point set");
    std::vector<Point> pts;
    pts.reserve(s.size());
    for (const auto &x : s) {
        if (x.coords.size() != n + 1)
            throw Error(Errc::BadParams, "point of the wrong length");
        pts.push_back(pg::make_point(f, x.coords));
    }
    const std::size_t limit = max_rho.value_or(n);
    SaturationCertificate cert;
    cert.set_size = pts.size();
    kern::Bitset prev;
    for (std::size_t t = 0; t <= limit; ++t) {
        kern::Bitset cov = kern::omp::coverage_mark(f, n, pts, std::min(t + 1, pts.size()));
        cert.total = cov.size();
        cert.covered.push_back(cov.count());
        if (cert.covered.back() == cert.total) {
            cert.radius = static_cast<int>(t);
            if (t > 0)
                cert.witness = pg::point_unrank(f, n, prev.first_clear());
            return cert;
        }
        prev = std::move(cov);
        if (t + 1 >= pts.size())
            break;
    }
    cert.witness = pg::point_unrank(f, n, prev.first_clear());
    return cert;
}

SaturationCertificate saturation_radius(const std::vector<Point> &s, std::size_t n, const Field &f,
                                        std::optional<std::size_t> max_rho) {
    SaturationCertificate cert = certify(s, n, f, max_rho);
    if (cert.radius < 0)
        throw Error(Errc::NotSaturating, "not " + std::to_string(max_rho.value_or(n)) + "-saturating: " +
                                             std::to_string(cert.covered.back()) + " of " +
                                             std::to_string(cert.total) + " points covered");
    return cert;
}

bool saturates_outside(const std::vector<Point> &s, const Subspace &excluded, std::size_t rho, std::size_t n,
                       const Field &f) {
    if (s.empty())
        return excluded.rank() == n + 1;
    std::vector<Point> pts;
    for (const auto &x : s)
        pts.push_back(pg::make_point(f, x.coords));
    kern::Bitset cov = kern::omp::coverage_mark(f, n, pts, std::min(rho + 1, pts.size()));
    for (std::uint64_t r = 0; r < cov.size(); ++r)
        if (!cov.test(r) && !excluded.contains(f, pg::point_unrank(f, n, r)))
            return false;
    return true;
}

double lower_bound(std::size_t n, std::size_t rho, std::uint64_t q) {
    const double r1 = static_cast<double>(rho + 1);
    const double ex = (static_cast<double>(n) - static_cast<double>(rho)) / r1;
    return r1 / std::numbers::e * std::pow(static_cast<double>(q), ex) + static_cast<double>(rho) / 2.0;
}

BigInt size_pj(std::size_t n, std::size_t rho, std::uint64_t q_sub, std::size_t j) {
    check_params(n, rho, q_sub);
    if (j < 1 || j > rho + 1)
        throw Error(Errc::BadParams, "petal index out of range");
    const I N = static_cast<I>(n), R = static_cast<I>(rho), J = static_cast<I>(j);
    const I lambda = std::min(R, N - R);
    if (J <= R + 1 - lambda)
        return J * ipow(q_sub, n - rho) - (J - 1);
    BigInt s = J * ipow(q_sub, n - rho);
    for (I k = 1; k <= R + 1 - J; ++k)
        s += (J - 1 + k) * ipow(q_sub, static_cast<std::size_t>(N - R - k));
    for (I k = R + 2 - J; k <= lambda - 1; ++k)
        s += (R - k) * ipow(q_sub, static_cast<std::size_t>(N - R - k));
    return s - lambda * (2 * R - lambda + 1) / 2;
}

BigInt size_total(std::size_t n, std::size_t rho, std::uint64_t q_sub) {
    check_params(n, rho, q_sub);
    const I N = static_cast<I>(n), R = static_cast<I>(rho);
    const I lambda = std::min(R, N - R);
    BigInt s = (R + 1) * (R + 2) / 2 * ipow(q_sub, n - rho);
    for (I j = 1; j <= lambda - 1; ++j) {
        const I a = (lambda * (2 * R - lambda + 2 * j + 1) - j * (3 * j + 1)) / 2;
        s += a * ipow(q_sub, static_cast<std::size_t>(N - R - j));
    }
    return s - (R * (R + 1) + lambda * (lambda - 1) * (2 * R - lambda + 1)) / 2;
}

BigInt size_p1_prime(std::size_t n, std::size_t rho, std::uint64_t q_sub) {
    check_params(n, rho, q_sub);
    if (q_sub != 2)
        return 0;
    const std::size_t lambda = std::min(rho, n - rho);
    return (ipow(2, lambda - 1) - 1) * ipow(2, n - rho - lambda + 1);
}

BigInt a_tilde(std::size_t rho, std::size_t j) {
    const I R = static_cast<I>(rho), J = static_cast<I>(j);
    return BigInt((R * (R + 2 * J + 1) - J * (3 * J + 1)) / 2);
}

BigInt a_bar(std::size_t n, std::size_t rho, std::size_t j) {
    const I l = static_cast<I>(n % (rho + 1)) + 1, R = static_cast<I>(rho), J = static_cast<I>(j);
    return BigInt((l * (2 * R - l + 2 * J + 1) - J * (3 * J + 1)) / 2);
}

BigInt main_bound(std::size_t n, std::size_t rho, std::uint64_t q_sub) {
    check_params(n, rho, q_sub);
    if ((n + 1) % (rho + 1) == 0)
        return trivial_bound(n, rho, static_cast<std::uint64_t>(ipow(q_sub, rho + 1)));
    const I N = static_cast<I>(n), R = static_cast<I>(rho);
    const I k = N / (R + 1);  // ceil((N - R) / (R + 1))
    const I l = N + 1 - k * (R + 1);
    BigInt s = 0;
    for (I i = 1; i <= k; ++i)
        s += (R + 1) * (R + 2) / 2 * ipow(q_sub, static_cast<std::size_t>(N + 1 - i * (R + 1)));
    for (I i = 1; i <= k - 1; ++i)
        for (I j = 1; j <= R - 1; ++j)
            s += a_tilde(rho, static_cast<std::size_t>(j)) *
                 ipow(q_sub, static_cast<std::size_t>(N + 1 - i * (R + 1) - j));
    for (I j = 1; j <= l - 1; ++j)
        s += a_bar(n, rho, static_cast<std::size_t>(j)) * ipow(q_sub, static_cast<std::size_t>(l - j));
    s -= (k - 1) * R * R * (R + 1) / 2;
    s -= (R * (R + 1) + l * (l - 1) * (2 * R - l + 1)) / 2;
    if (q_sub == 2) {
        BigInt inner = 0;
        for (I i = 1; i <= k - 1; ++i)
            inner += ipow(2, static_cast<std::size_t>(N - R + 2 - i * (R + 1)));
        s += (ipow(2, rho - 1) - 1) * inner + ipow(2, static_cast<std::size_t>(l)) - 2;
    }
    return s;
}

BigInt simple_bound(std::size_t n, std::size_t rho, std::uint64_t q_sub) {
    check_params(n, rho, q_sub);
    if (rho < 2)
        throw Error(Errc::BadParams, "simple bound needs rho > 1");
    const BigInt top = ipow(q_sub, n - rho);
    const BigInt r = static_cast<I>(rho);
    return (r + 1) * (r + 2) / 2 * top + r * (r + 1) * ((top - 1) / (q_sub - 1));
}

BigInt trivial_bound(std::size_t n, std::size_t rho, std::uint64_t q) {
    if ((n + 1) % (rho + 1) != 0)
        throw Error(Errc::NotDivisible, "rho + 1 does not divide n + 1");
    return BigInt(static_cast<I>(rho + 1)) * theta_big((n + 1) / (rho + 1) - 1, q);
}

}  // namespace satgeom::vf
