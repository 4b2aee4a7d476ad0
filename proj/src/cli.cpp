#include "powersum/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "powersum/constructions.hpp"
#include "powersum/figurate.hpp"
#include "powersum/pyramid.hpp"
#include "powersum/render.hpp"
#include "powersum/verify.hpp"

namespace powersum::cli {

namespace {

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BadInput("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw BadInput("cannot write " + path);
}

std::string cell_text(const pyramid::Cell& c, int d) {
    std::string s;
    for (int i = 0; i < d; ++i) s += (i ? "," : "") + std::to_string(c.coords[i]);
    return s;
}

}  // namespace

std::string default_golden_dir() {
#ifdef POWERSUM_GOLDEN_DIR
    return POWERSUM_GOLDEN_DIR;
#else
    return {};
#endif
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sums of powers: identities, pyramid sections, dissection certificates and figures"};
    app.name("powersum");
    app.require_subcommand(1);

    std::string name, path, format = "svg", report, golden = default_golden_dir(), emit;
    long n = 0, m = 0, p = 0, t = 1, upto = 15, max_n = 0, dim = 3;
    int axis = 0, unit_px = 20;
    std::uint64_t mutate_seed = 0;

    auto* identity = app.add_subcommand("identity", "Evaluate one registry identity");
    identity->add_option("name", name, "Identity name, e.g. NICOMACHUS")->required();
    identity->add_option("--n", n, "n")->required();
    identity->add_option("--m", m, "m");
    identity->add_option("--p", p, "p");

    auto* bern = app.add_subcommand("bernoulli", "Print B_0..B_M");
    bern->add_option("--upto", upto, "M")->check(CLI::Range(0L, 1000L));

    auto* faul = app.add_subcommand("faulhaber", "Closed-form S_p(n)");
    faul->add_option("--p", p, "p")->required()->check(CLI::Range(0L, 1000L));
    faul->add_option("--n", n, "n")->required()->check(CLI::NonNegativeNumber);

    auto* sec = app.add_subcommand("sections", "Section sizes of the pyramid P_D(N)");
    sec->add_option("--dim", dim, "D")->required();
    sec->add_option("--n", n, "N")->required();
    sec->add_option("--secondary", axis, "slice along this axis (2..D) instead of the levels");
    sec->add_option("--emit", emit, "'cells' to list every cell")->check(CLI::IsMember({"cells"}));

    auto* cert = app.add_subcommand("certificate", "Write a dissection certificate as JSON");
    cert->add_option("construction", name, "e.g. GAUSS_RECT")->required();
    cert->add_option("--n", n, "n")->required();
    cert->add_option("--out", path, "output file, '-' for stdout")->required();
    cert->add_option("--mutate-seed", mutate_seed, "apply one random placement mutation drawn with this seed");

    auto* check = app.add_subcommand("check", "Check a certificate file");
    check->add_option("path", path, "certificate JSON")->required();

    auto* fig = app.add_subcommand("figure", "Emit a figure");
    fig->add_option("name", name, "e.g. GAUSS")->required();
    fig->add_option("--n", n, "n")->required();
    fig->add_option("--t", t, "section index for FIVE_PYR_SECTION");
    fig->add_option("--format", format, "svg or tikz")->check(CLI::IsMember({"svg", "tikz"}));
    fig->add_option("--unit-px", unit_px, "pixels per unit")->check(CLI::PositiveNumber);
    fig->add_option("--out", path, "output file, '-' for stdout")->required();

    auto* all = app.add_subcommand("verify-all", "Run the acceptance checks");
    all->add_option("--max-n", max_n, "cap on every n range (0: full ranges)")->check(CLI::NonNegativeNumber);
    all->add_option("--report", report, "'json' for a machine-readable report")->check(CLI::IsMember({"json"}));
    all->add_option("--golden", golden, "directory of reference figures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kBadInput;
    }

    try {
        if (*identity) {
            const auto id = figurate::identity_from_name(name);
            if (!id) throw BadInput("unknown identity '" + name + "'");
            figurate::Params params{{"n", n}};
            if (identity->count("--m")) params["m"] = m;
            if (identity->count("--p")) params["p"] = p;
            const auto r = figurate::evaluate_identity(*id, params);
            out << r.to_string() << "\n";
            return r.holds ? kPass : kIdentityMismatch;
        }
        if (*bern) {
            for (long k = 0; k <= upto; ++k)
                out << "B_" << k << " = " << figurate::bernoulli(static_cast<unsigned>(k)).to_string() << "\n";
            return kPass;
        }
        if (*faul) {
            out << figurate::faulhaber(static_cast<unsigned>(p), n).to_string() << "\n";
            return kPass;
        }
        if (*sec) {
            if (n < 1) throw BadInput("--n must be >= 1");
            const auto P = pyramid::build_pyramid(static_cast<int>(dim), static_cast<int>(n));
            const auto parts = axis ? pyramid::secondary_sections(P, axis) : pyramid::main_sections(P);
            if (emit == "cells") {
                for (std::size_t i = 0; i < parts.size(); ++i)
                    for (const auto& c : parts[i]) out << i + 1 << ": " << cell_text(c, P.dimension() - 1) << "\n";
                return kPass;
            }
            const auto sizes = pyramid::section_sizes(parts);
            for (std::size_t i = 0; i < sizes.size(); ++i) out << (i ? " " : "") << sizes[i];
            out << "\n";
            return kPass;
        }
        if (*cert) {
            const auto c = dissect::construction_from_name(name);
            if (!c) throw BadInput("unknown construction '" + name + "'");
            auto certificate = dissect::generate(*c, n);
            if (cert->count("--mutate-seed")) {
                std::mt19937_64 rng(mutate_seed);
                const auto mut = verify::random_mutation(certificate, rng);
                err << "mutated " << certificate.placements[mut.placement].piece_id << "\n";
                certificate = verify::apply(std::move(certificate), mut);
            }
            write_file(path, dissect::to_json(certificate), out);
            return kPass;
        }
        if (*check) {
            const auto certificate = dissect::from_json(read_file(path));
            const auto r = dissect::check_certificate(certificate);
            out << dissect::construction_name(certificate.construction) << "(n=" << certificate.n
                << "): " << r.to_string() << "\n";
            if (r.passed()) return kPass;
            return r.status == dissect::CheckStatus::Malformed ? kBadInput : kCoverFailure;
        }
        if (*fig) {
            render::FigureSpec spec;
            const auto f = render::figure_from_name(name);
            if (!f) throw BadInput("unknown figure '" + name + "'");
            spec.figure = *f;
            spec.n = n;
            spec.t = t;
            spec.format = *render::format_from_name(format);
            spec.unit_px = unit_px;
            write_file(path, render::emit_figure(spec), out);
            return kPass;
        }
        if (*all) {
            verify::Options opts;
            opts.max_n = max_n;
            opts.golden_dir = golden;
            std::vector<verify::Result> results;
            for (int k = 1; k <= verify::kCriteria; ++k) {
                results.push_back(verify::run(k, opts));
                if (report.empty()) out << results.back().to_line() << "\n" << std::flush;
            }
            if (report == "json") out << verify::report_json(results);
            int code = kPass;
            for (const auto& r : results)
                if (!r.passed) {
                    if (r.criterion == 6 || r.criterion == 7) return kCoverFailure;
                    code = kIdentityMismatch;
                }
            return code;
        }
    } catch (const dissect::MalformedCertificate& e) {
        err << "malformed certificate: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}

}  // namespace powersum::cli
