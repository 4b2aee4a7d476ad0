#include "powersum/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "powersum/constructions.hpp"
#include "powersum/figurate.hpp"
#include "powersum/pipeline.hpp"
#include "powersum/pyramid.hpp"
#include "powersum/render.hpp"

namespace powersum::verify {

namespace {

using dissect::Construction;
using exact::BigInt;
using exact::QuadExt;
using exact::Rat;
using figurate::Identity;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(std::string why) {
        if (ok) detail = std::move(why);
        ok = false;
    }
};

long cap(long full, const Options& o) { return o.max_n > 0 ? std::min(full, o.max_n) : full; }

Outcome bernoulli_table(const Options&) {
    const std::vector<Rat> table{Rat(1),         Rat(1, 2),  Rat(1, 6), Rat(0), Rat(-1, 30), Rat(0),
                                 Rat(1, 42),     Rat(0),     Rat(-1, 30), Rat(0), Rat(5, 66), Rat(0),
                                 Rat(-691, 2730), Rat(0),    Rat(7, 6),  Rat(0)};
    Outcome out;
    for (unsigned m = 0; m < table.size(); ++m)
        if (figurate::bernoulli(m) != table[m])
            out.fail("B_" + std::to_string(m) + " = " + figurate::bernoulli(m).to_string() + ", table "
                     + table[m].to_string());
    if (out.ok) out.detail = "B_0..B_15 match";
    return out;
}

Outcome boast(const Options&) {
    const Rat want(BigInt("91409924241424243424241924242500"));
    const Rat got = figurate::faulhaber(10, 1000);
    Outcome out;
    if (got != want) out.fail("faulhaber(10, 1000) = " + got.to_string());
    else out.detail = got.to_string();
    return out;
}

Outcome faulhaber_oracle(const Options& o) {
    const long n_max = cap(200, o);
    Outcome out;
    for (unsigned p = 0; p <= 8 && out.ok; ++p) {
        BigInt running = 0;
        for (long n = 0; n <= n_max; ++n) {
            if (n > 0) running += figurate::sum_powers_range(p, n, n);
            const Rat f = figurate::faulhaber(p, n);
            if (f != Rat(running) || (n % 50 == 0 && Rat(figurate::sum_powers_bruteforce(p, n)) != f)) {
                out.fail("p=" + std::to_string(p) + " n=" + std::to_string(n) + ": " + f.to_string()
                         + " vs " + running.get_str());
                break;
            }
        }
    }
    if (out.ok) out.detail = "p <= 8, n <= " + std::to_string(n_max);
    return out;
}

Outcome registry(const Options& o) {
    const long n_max = cap(100, o);
    Outcome out;
    long evaluated = 0;
    auto eval = [&](Identity id, const figurate::Params& params) {
        const auto r = figurate::evaluate_identity(id, params);
        ++evaluated;
        if (!r.holds) out.fail(r.to_string());
    };
    for (auto id : figurate::all_identities()) {
        const auto& names = figurate::identity_parameters(id);
        const bool has_p = std::count(names.begin(), names.end(), "p") > 0;
        const bool has_m = std::count(names.begin(), names.end(), "m") > 0;
        for (long n = has_m ? 1 : 0; n <= n_max && out.ok; ++n)
            for (long p = 0; p <= (has_p ? 4 : 0); ++p)
                for (long m = 1; m <= (has_m ? n : 1); ++m) {
                    figurate::Params params{{"n", n}};
                    if (has_p) params["p"] = p;
                    if (has_m) params["m"] = m;
                    eval(id, params);
                }
    }
    if (out.ok)
        out.detail = std::to_string(figurate::all_identities().size()) + " identities, "
                   + std::to_string(evaluated) + " evaluations";
    return out;
}

// Every cell of P_d(n) is hit exactly once by each section family.
bool partitions(const pyramid::CellSet& p, const std::vector<pyramid::CellSet>& sections, int axis, int first) {
    std::map<pyramid::Cell, int> hits;
    const int d = p.dimension();
    for (std::size_t i = 0; i < sections.size(); ++i)
        for (const auto& c : sections[i])
            ++hits[pyramid::insert_coordinate(c, d, axis, first + static_cast<int>(i))];
    if (hits.size() != p.size()) return false;
    for (const auto& [cell, count] : hits)
        if (count != 1 || !p.contains(cell)) return false;
    return true;
}

Outcome sections(const Options& o) {
    const long n_max = cap(12, o);
    Outcome out;
    for (int d = 3; d <= 5 && out.ok; ++d)
        for (int n = 1; n <= n_max && out.ok; ++n) {
            const std::string at = "d=" + std::to_string(d) + " n=" + std::to_string(n);
            const auto p = pyramid::build_pyramid(d, n);
            const auto mains = pyramid::main_sections(p);
            for (std::size_t k = 1; k <= mains.size(); ++k)
                if (BigInt(static_cast<unsigned long>(mains[k - 1].size()))
                    != figurate::sum_powers_range(d - 1, static_cast<long>(k), static_cast<long>(k)))
                    out.fail(at + ": main section " + std::to_string(k) + " has "
                             + std::to_string(mains[k - 1].size()) + " cells");
            if (!partitions(p, mains, 1, 1)) out.fail(at + ": main sections do not partition P");
            for (int axis = 2; axis <= d; ++axis) {
                const auto secs = pyramid::secondary_sections(p, axis);
                for (std::size_t m = 1; m <= secs.size(); ++m)
                    if (BigInt(static_cast<unsigned long>(secs[m - 1].size()))
                        != figurate::sum_powers_range(d - 2, static_cast<long>(m), n))
                        out.fail(at + " axis " + std::to_string(axis) + ": secondary section "
                                 + std::to_string(m) + " has " + std::to_string(secs[m - 1].size()) + " cells");
                if (!partitions(p, secs, axis, 0))
                    out.fail(at + " axis " + std::to_string(axis) + ": secondary sections do not partition P");
            }
        }
    if (out.ok) out.detail = "d = 3..5, n <= " + std::to_string(n_max);
    return out;
}

Outcome certificates(const Options& o) {
    Outcome out;
    auto sweep = [&](Construction c, long full, const std::function<QuadExt(long)>& total) {
        const long n_max = cap(full, o);
        for (long n = 1; n <= n_max && out.ok; ++n) {
            const auto cert = dissect::generate(c, n);
            const auto r = dissect::check_certificate(cert);
            const std::string at = std::string(dissect::construction_name(c)) + " n=" + std::to_string(n);
            if (!r.passed()) out.fail(at + ": " + r.to_string());
            else if (cert.target_area() != total(n))
                out.fail(at + ": total " + cert.target_area().to_string() + ", expected " + total(n).to_string());
        }
    };
    auto S = [](unsigned p, long n) { return QuadExt(Rat(figurate::sum_powers_bruteforce(p, n))); };
    sweep(Construction::GaussRect, 100, [&](long n) { return QuadExt(2) * S(1, n); });
    sweep(Construction::ThreePyr2D, 50, [&](long n) { return QuadExt(3) * S(2, n); });
    sweep(Construction::Nicomachus4D2D, 20, [](long n) { return QuadExt(n * n * (n + 1) * (n + 1)); });
    const long n_max = cap(10, o);
    for (long n = 1; n <= n_max && out.ok; ++n) {
        try {
            const auto r = dissect::full_theorem_report(n);
            if (!r.holds || r.lhs != QuadExt(5) * S(4, n)) out.fail(r.to_string());
        } catch (const dissect::PipelineFailure& e) {
            out.fail("pipeline n=" + std::to_string(n) + ": " + e.what());
        }
    }
    if (out.ok) out.detail = "all certificates pass; totals match";
    return out;
}

Outcome mutations(const Options& o) {
    Outcome out;
    std::mt19937_64 rng(o.seed);
    int caught = 0;
    for (auto c : dissect::all_constructions()) {
        const auto cert = dissect::generate(c, 2);
        if (!dissect::check_certificate(cert).passed()) {
            out.fail(std::string(dissect::construction_name(c)) + " n=2 fails before mutation");
            break;
        }
        for (int i = 0; i < o.mutations; ++i) {
            const auto m = random_mutation(cert, rng);
            if (dissect::check_certificate(apply(cert, m)).passed()) {
                out.fail(std::string(dissect::construction_name(c)) + ": mutation of "
                         + cert.placements[m.placement].piece_id + " still passes");
                break;
            }
            ++caught;
        }
    }
    if (out.ok) out.detail = std::to_string(caught) + " mutations rejected";
    return out;
}

Outcome quadratic_field(const Options&) {
    Outcome out;
    const QuadExt& x = exact::strip_root();
    const QuadExt third(Rat(1, 3));
    if (x * x + x - third != QuadExt()) out.fail("x^2 + x - 1/3 = " + (x * x + x - third).to_string());
    if (x.sign() <= 0) out.fail("strip root not positive");
    for (long n = 1; n <= 100; ++n) {
        const QuadExt N(n);
        const QuadExt lhs = (N - x) * (N + QuadExt(1) + x);
        if (lhs != N * N + N - third) out.fail("n=" + std::to_string(n) + ": " + lhs.to_string());
    }
    for (long n = 1; n <= 2; ++n)
        for (const auto& l : dissect::step3_scissor(n).leftovers)
            if (l.region.area() != third) out.fail(l.layer + " area " + l.region.area().to_string());
    if (out.ok) out.detail = "x = " + x.to_string();
    return out;
}

Outcome final_assembly(const Options& o) {
    Outcome out;
    const long n_cert = cap(10, o);
    for (long n = 1; n <= n_cert && out.ok; ++n) {
        try {
            const auto r = dissect::full_theorem_report(n);
            if (!r.holds) out.fail(r.to_string());
        } catch (const dissect::PipelineFailure& e) {
            out.fail("n=" + std::to_string(n) + ": " + e.what());
        }
    }
    const long n_max = cap(10000, o);
    const QuadExt& x = exact::strip_root();
    const Rat half(1, 2), third(1, 3);
    BigInt s4 = 0;
    for (long n = 1; n <= n_max && out.ok; ++n) {
        const BigInt k = n;
        s4 += k * k * k * k;
        const Rat N(n);
        const Rat product = N * (N + Rat(1)) * (N + half) * (N * N + N - third);
        const QuadExt scissor = QuadExt(N + half) * QuadExt(N * (N + Rat(1))) * (QuadExt(N) - x)
                              * (QuadExt(N + Rat(1)) + x);
        const Rat lhs = Rat(5) * Rat(s4);
        if (lhs != product || QuadExt(lhs) != scissor)
            out.fail("n=" + std::to_string(n) + ": 5 S_4 = " + lhs.to_string() + ", product " + product.to_string()
                     + ", scissor form " + scissor.to_string());
    }
    if (out.ok)
        out.detail = "certificates n <= " + std::to_string(n_cert) + ", arithmetic n <= " + std::to_string(n_max);
    return out;
}

Outcome rendering(const Options& o) {
    Outcome out;
    if (o.golden_dir.empty()) {
        out.fail("no golden directory");
        return out;
    }
    for (const auto& g : golden_figures()) {
        render::FigureSpec spec;
        spec.figure = *render::figure_from_name(g.figure);
        spec.n = g.n;
        spec.format = *render::format_from_name(g.format);
        const std::string first = render::emit_figure(spec);
        const std::string second = render::emit_figure(spec);
        if (first != second) {
            out.fail(g.file + ": two runs differ");
            continue;
        }
        std::ifstream in(o.golden_dir + "/" + g.file, std::ios::binary);
        if (!in) {
            out.fail(g.file + ": missing golden file");
            continue;
        }
        std::ostringstream stored;
        stored << in.rdbuf();
        if (stored.str() != first) out.fail(g.file + ": differs from golden file");
    }
    if (out.ok) out.detail = std::to_string(golden_figures().size()) + " figures match";
    return out;
}

struct Criterion {
    const char* name;
    double limit;
    Outcome (*body)(const Options&);
};

const Criterion kTable[kCriteria] = {
    {"bernoulli-table", 1, bernoulli_table},
    {"bernoulli-boast", 1, boast},
    {"faulhaber-vs-oracle", 10, faulhaber_oracle},
    {"identity-registry", 30, registry},
    {"section-partitions", 60, sections},
    {"certificate-suite", 300, certificates},
    {"mutation-sensitivity", 60, mutations},
    {"quadratic-field", 1, quadratic_field},
    {"final-assembly", 120, final_assembly},
    {"rendering-determinism", 10, rendering},
};

}  // namespace

std::string Result::to_line() const {
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s / %g s", seconds, limit_seconds);
    return std::string(passed ? "PASS" : "FAIL") + " [" + std::to_string(criterion) + "] " + name + " (" + timing
         + "): " + detail;
}

Result run(int criterion, const Options& opts) {
    if (criterion < 1 || criterion > kCriteria) throw std::out_of_range("criterion must be 1.." + std::to_string(kCriteria));
    const auto& c = kTable[criterion - 1];
    Result r;
    r.criterion = criterion;
    r.name = c.name;
    r.limit_seconds = c.limit;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = c.body(opts);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = out.ok && r.seconds <= r.limit_seconds;
    r.detail = out.detail;
    if (out.ok && !r.passed) r.detail += "; over the time limit";
    return r;
}

std::vector<Result> run_all(const Options& opts) {
    std::vector<Result> out;
    for (int k = 1; k <= kCriteria; ++k) out.push_back(run(k, opts));
    return out;
}

std::string report_json(const std::vector<Result>& results) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        rows.push_back({{"criterion", r.criterion},
                        {"name", r.name},
                        {"passed", r.passed},
                        {"seconds", r.seconds},
                        {"limit_seconds", r.limit_seconds},
                        {"detail", r.detail}});
    }
    nlohmann::ordered_json doc{{"passed", all}, {"checks", rows}};
    return doc.dump(2) + "\n";
}

Mutation random_mutation(const dissect::DissectionCertificate& c, std::mt19937_64& rng) {
    if (c.placements.empty()) throw std::invalid_argument("certificate has no placements");
    std::uniform_int_distribution<std::size_t> pick(0, c.placements.size() - 1);
    std::uniform_int_distribution<int> kind(0, 5);
    Mutation m;
    m.placement = pick(rng);
    switch (kind(rng)) {
    case 0: m.dx = 1; break;
    case 1: m.dx = -1; break;
    case 2: m.dy = 1; break;
    case 3: m.dy = -1; break;
    case 4: m.kind = MutationKind::QuarterTurn; break;
    default: m.kind = MutationKind::Reflect; break;
    }
    return m;
}

dissect::DissectionCertificate apply(dissect::DissectionCertificate c, const Mutation& m) {
    auto& t = c.placements.at(m.placement).transform;
    switch (m.kind) {
    case MutationKind::Translate:
        t.dx += QuadExt(m.dx);
        t.dy += QuadExt(m.dy);
        break;
    case MutationKind::QuarterTurn: t.quarter_turns = (t.quarter_turns + 1) % 4; break;
    case MutationKind::Reflect: t.reflect = !t.reflect; break;
    }
    return c;
}

const std::vector<GoldenFigure>& golden_figures() {
    static const std::vector<GoldenFigure> figures{
        {"gauss_n4.svg", "GAUSS", 4, "svg"},
        {"main_sections_n4.tex", "MAIN_SECTIONS", 4, "tikz"},
        {"nicomachus_grid_diy_n3.svg", "NICOMACHUS_GRID_DIY", 3, "svg"},
        {"step3_scissor_n2.svg", "STEP3_SCISSOR", 2, "svg"},
        {"two_copies_n3.svg", "TWO_COPIES", 3, "svg"},
    };
    return figures;
}

}  // namespace powersum::verify
