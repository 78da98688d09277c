/**************************************************************************
 * cli.cpp
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

#include "satgeom/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "satgeom/covcode.hpp"
#include "satgeom/error.hpp"
#include "satgeom/kernels.hpp"
#include "satgeom/saturate.hpp"
#include "satgeom/setfile.hpp"
#include "satgeom/verify.hpp"
#include "satgeom/ylines.hpp"

namespace satgeom {

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;

struct Options {
    std::size_t n = 0, rho = 0, m = 0;
    std::uint32_t qprime = 0;
    bool trivial = false;
    std::string set_path, out_path, matrix_path;
    std::optional<int> expect_rho;
    std::optional<std::size_t> max_rho;
};

std::uint64_t full_order(std::uint32_t q_sub, std::size_t rho) {
    std::uint64_t q = 1;
    for (std::size_t i = 0; i <= rho; ++i) {
        if (q > (std::uint64_t{1} << 32) / q_sub)
            throw Error(Errc::BadParams, "field order too large");
        q *= q_sub;
    }
    return q;
}

int cmd_construct(const Options &o, std::ostream &out) {
    sat::SaturatingSet s;
    vf::BigInt bound;
    if (o.trivial) {
        gf::FieldTower t = gf::tower_over(o.qprime, static_cast<std::uint32_t>(o.rho + 1));
        s = sat::build_trivial_set(o.n, o.rho, t);
        bound = vf::trivial_bound(o.n, o.rho, t.big().order());
    } else {
        s = sat::build_saturating_set(o.n, o.rho, o.qprime);
        bound = vf::main_bound(o.n, o.rho, o.qprime);
    }
    if (!o.out_path.empty())
        io::write_set_file(o.out_path, s);
    out << "size=" << s.size() << " bound=" << bound << "\n";
    return kOk;
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &err) {
    sat::SaturatingSet s = io::read_set_file(o.set_path);
    const gf::Field &f = s.tower.big();
    vf::SaturationCertificate cert = vf::certify(s.points, s.n, f, o.max_rho);
    out << io::dump_certificate(cert, f);
    if (cert.radius < 0) {
        err << "not saturating up to rho=" << o.max_rho.value_or(s.n) << "\n";
        return kFail;
    }
    if (o.expect_rho && *o.expect_rho != cert.radius) {
        err << "radius " << cert.radius << " differs from expected " << *o.expect_rho << "\n";
        return kFail;
    }
    return kOk;
}

int cmd_export(const Options &o, std::ostream &out) {
    cc::LinearCodeSpec code = cc::parity_check_matrix(io::read_set_file(o.set_path));
    std::ostringstream text;
    cc::write_parity_check(text, code);
    if (o.out_path.empty())
        out << text.str();
    else
        io::write_text_file(o.out_path, text.str());
    return kOk;
}

int cmd_radius(const Options &o, std::ostream &out) {
    std::istringstream in(io::read_text_file(o.matrix_path));
    cc::LinearCodeSpec code = cc::read_parity_check(in);
    out << "R=" << cc::covering_radius(code) << "\n";
    return kOk;
}

int cmd_bounds(const Options &o, std::ostream &out) {
    const std::uint64_t q = full_order(o.qprime, o.rho);
    const vf::BigInt main = vf::main_bound(o.n, o.rho, o.qprime);
    char lower[64];
    std::snprintf(lower, sizeof lower, "%.2f", vf::lower_bound(o.n, o.rho, q));
    out << "lower≈" << lower << " main=" << main << " simple=";
    if (o.rho > 1)
        out << vf::simple_bound(o.n, o.rho, o.qprime);
    else
        out << "—";
    out << " trivial=";
    if ((o.n + 1) % (o.rho + 1) == 0)
        out << vf::trivial_bound(o.n, o.rho, q);
    else
        out << "—";
    out << "\n";
    const auto len = static_cast<std::size_t>(main);
    const cc::Rational mu = cc::covering_density(len, o.n + 1, o.rho + 1, q);
    char approx[64];
    std::snprintf(approx, sizeof approx, "%.6g", static_cast<double>(mu));
    out << "density=" << mu << " (≈" << approx << ") for [" << len << "," << len - (o.n + 1) << "]_" << q
        << " R=" << o.rho + 1 << "\n";
    return kOk;
}

int cmd_isocheck(const Options &o, std::ostream &out) {
    yl::IsoReport r = yl::iso_check(o.rho, o.m, o.qprime);
    auto verdict = [](bool ok) { return ok ? "ok" : "FAIL"; };
    out << "phi bijection: " << verdict(r.bijection) << " (" << r.points << " points); lines: " << verdict(r.lines_ok)
        << " (" << r.lines << "); parallel classes: " << verdict(r.classes_ok) << " (" << r.classes << ")\n";
    return r.ok() ? kOk : kFail;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Saturating sets in projective spaces over finite fields"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP threads for the verifiers")->check(CLI::PositiveNumber);
    Options o;

    auto *construct = app.add_subcommand("construct", "Build a saturating set");
    construct->add_option("--n", o.n, "Projective dimension")->required();
    construct->add_option("--rho", o.rho, "Saturation radius")->required();
    construct->add_option("--qprime", o.qprime, "Subfield order q'")->required();
    construct->add_option("--out", o.out_path, "Write the set as JSON");
    construct->add_flag("--trivial", o.trivial, "Use the direct-sum baseline");

    auto *verify = app.add_subcommand("verify", "Certify the saturation radius of a set");
    verify->add_option("--set", o.set_path, "Set JSON")->required();
    verify->add_option("--expect-rho", o.expect_rho, "Fail unless the radius equals this");
    verify->add_option("--max-rho", o.max_rho, "Largest radius to try");

    auto *exp = app.add_subcommand("export", "Write the parity check matrix of a set");
    exp->add_option("--set", o.set_path, "Set JSON")->required();
    exp->add_option("--out", o.out_path, "Output file (default stdout)");

    auto *radius = app.add_subcommand("radius", "Covering radius of a parity check matrix");
    radius->add_option("--matrix", o.matrix_path, "Matrix text file")->required();

    auto *bounds = app.add_subcommand("bounds", "Evaluate size bounds");
    bounds->add_option("--n", o.n)->required();
    bounds->add_option("--rho", o.rho)->required();
    bounds->add_option("--qprime", o.qprime)->required();

    auto *iso = app.add_subcommand("isocheck", "Exhaustive check of the linear representation isomorphism");
    iso->add_option("--rho", o.rho)->required();
    iso->add_option("--m", o.m)->required();
    iso->add_option("--qprime", o.qprime)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        return kBadInput;
    }

    try {
        if (threads > 0)
            kern::set_threads(threads);
        if (construct->parsed())
            return cmd_construct(o, out);
        if (verify->parsed())
            return cmd_verify(o, out, err);
        if (exp->parsed())
            return cmd_export(o, out);
        if (radius->parsed())
            return cmd_radius(o, out);
        if (bounds->parsed())
            return cmd_bounds(o, out);
        if (iso->parsed())
            return cmd_isocheck(o, out);
    } catch (const Error &e) {
        err << e.what() << "\n";
        return e.code() == Errc::NotSaturating ? kFail : kBadInput;
    } catch (const std::exception &e) {
        err << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}

}  // namespace satgeom
