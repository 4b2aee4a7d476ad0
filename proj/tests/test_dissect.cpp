#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "powersum/constructions.hpp"
#include "powersum/pipeline.hpp"
#include "powersum/verify.hpp"

using namespace powersum::dissect;
using powersum::exact::strip_root;
using powersum::figurate::sum_powers_bruteforce;

namespace {

QuadExt S(unsigned p, long n) { return QuadExt(Rat(sum_powers_bruteforce(p, n))); }

QuadExt area_of(const DissectionCertificate& c, const std::string& layer) {
    for (const auto* list : {&c.targets, &c.leftovers})
        for (const auto& t : *list)
            if (t.layer == layer) return t.region.area();
    FAIL("no layer " << layer);
    return {};
}

std::size_t count_prefix(const std::vector<LayerRegion>& v, const std::string& prefix) {
    std::size_t k = 0;
    for (const auto& t : v) k += t.layer.compare(0, prefix.size(), prefix) == 0;
    return k;
}

void require_pass(const DissectionCertificate& c) {
    const auto r = check_certificate(c);
    INFO(construction_name(c.construction) << " n=" << c.n << ": " << r.to_string());
    REQUIRE(r.passed());
    CHECK(c.source_area() == c.target_area() + c.leftover_area());
}

RigidTransform random_transform(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> q(0, 3), b(0, 1), d(-5, 5);
    return {q(rng), b(rng) == 1, QuadExt(Rat(d(rng), 2)), QuadExt(Rat(d(rng)), Rat(d(rng), 3))};
}

}  // namespace

TEST_CASE("rigid motions") {
    const RigidTransform turn{1, false, QuadExt(0), QuadExt(0)};
    CHECK(turn.apply(RigidTransform::Point{QuadExt(1), QuadExt(0)})
          == RigidTransform::Point{QuadExt(0), QuadExt(1)});
    const RigidTransform mirror{0, true, QuadExt(0), QuadExt(0)};
    CHECK(mirror.apply(Rect{QuadExt(1), QuadExt(0), QuadExt(2), QuadExt(3)})
          == Rect{QuadExt(-3), QuadExt(0), QuadExt(2), QuadExt(3)});
    CHECK(turn.apply(Rect{QuadExt(0), QuadExt(0), QuadExt(2), QuadExt(1)})
          == Rect{QuadExt(-1), QuadExt(0), QuadExt(1), QuadExt(2)});

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int i = 0; i < 300; ++i) {
        const auto a = random_transform(rng), b = random_transform(rng);
        const RigidTransform::Point p{QuadExt(d(rng)), QuadExt(Rat(d(rng), 5))};
        CHECK(compose(a, b).apply(p) == a.apply(b.apply(p)));
        const Rect r{QuadExt(d(rng)), QuadExt(d(rng)), QuadExt(Rat(1, 2)) + strip_root(), QuadExt(3)};
        CHECK(a.apply(r).area() == r.area());
        CHECK(compose(a, b).apply(r) == a.apply(b.apply(r)));
    }
}

TEST_CASE("staircases and unit cells") {
    const auto s = staircase(4, 2, "blue");
    CHECK(s.rects.size() == 3);
    CHECK(s.area() == QuadExt(4 + 3 + 2));
    CHECK(s.rects[0] == Rect{QuadExt(0), QuadExt(0), QuadExt(4), QuadExt(1)});
    CHECK(unit_cells(s).size() == 9);
    CHECK(unit_cells(Region{{Rect{QuadExt(0), QuadExt(0), QuadExt(Rat(1, 2)), QuadExt(1)}}, ""}).empty());
}

TEST_CASE("checker on the Gauss rectangle") {
    const auto c = gauss_rectangle(5);
    require_pass(c);

    SUBCASE("a piece moved one unit overlaps the other") {
        auto m = c;
        m.placements[0].transform.dx += QuadExt(1);
        const auto r = check_certificate(m);
        CHECK(r.status == CheckStatus::Overlap);
        CHECK(r.layer == "rect");
        REQUIRE(r.interval.has_value());
        CHECK(r.is_cover_failure());
    }
    SUBCASE("an enlarged target leaves a gap") {
        auto m = c;
        m.targets[0].region.rects[0].w += QuadExt(1);
        const auto r = check_certificate(m);
        CHECK(r.status == CheckStatus::Uncovered);
        REQUIRE(r.interval.has_value());
        CHECK(r.interval->x == QuadExt(6));
    }
    SUBCASE("rotations outside 0..3 are malformed") {
        auto m = c;
        m.placements[1].transform.quarter_turns = 4;
        CHECK(check_certificate(m).status == CheckStatus::Malformed);
    }
    SUBCASE("degenerate rects are malformed") {
        auto m = c;
        m.placements[0].source.rects[0].h = QuadExt(0);
        CHECK(check_certificate(m).status == CheckStatus::Malformed);
    }
    SUBCASE("pieces cut twice from one source") {
        auto m = c;
        m.placements[1].source_layer = m.placements[0].source_layer;
        const auto r = check_certificate(m);
        CHECK(r.status == CheckStatus::SourceOverlap);
        CHECK(r.layer == "tri/1");
    }
    SUBCASE("undeclared destination") {
        auto m = c;
        m.placements[0].destination_layer = "elsewhere";
        CHECK(check_certificate(m).status == CheckStatus::OutsideTarget);
    }
    SUBCASE("layer declared twice") {
        auto m = c;
        m.leftovers.push_back(m.targets[0]);
        CHECK(check_certificate(m).status == CheckStatus::Malformed);
    }
}

TEST_CASE("leftover mismatch") {
    auto c = step3_scissor(1);
    require_pass(c);
    c.leftovers[0].region.rects[1].w += QuadExt(1);
    const auto r = check_certificate(c);
    CHECK(r.status == CheckStatus::LeftoverMismatch);
    CHECK(r.layer == "L1/0,0/R");
}

TEST_CASE("cover with irrational cuts") {
    const QuadExt x = strip_root();
    const std::vector<Rect> region{{QuadExt(0), QuadExt(0), QuadExt(1), QuadExt(1)}};
    const std::vector<Rect> pieces{{QuadExt(0), QuadExt(0), x, QuadExt(1)},
                                   {x, QuadExt(0), QuadExt(1) - x, QuadExt(1)}};
    CHECK(check_cover(pieces, region).passed());
    const std::vector<Rect> short_pieces{{QuadExt(0), QuadExt(0), x, QuadExt(1)},
                                         {x, QuadExt(0), QuadExt(Rat(1, 2)), QuadExt(1)}};
    const auto r = check_cover(short_pieces, region);
    CHECK(r.status == CheckStatus::Uncovered);
    CHECK(r.interval->x == x + QuadExt(Rat(1, 2)));
    CHECK(interior_disjoint(pieces));
    CHECK_FALSE(interior_disjoint({pieces[0], pieces[0]}));
}

TEST_CASE("Gauss rectangle") {
    auto c = gauss_rectangle(1);
    require_pass(c);
    CHECK(c.placements.size() == 2);
    CHECK(c.targets[0].region.rects[0] == Rect{QuadExt(0), QuadExt(0), QuadExt(2), QuadExt(1)});
    CHECK(gauss_rectangle(4).target_area() == QuadExt(20));
    c = gauss_rectangle(50);
    require_pass(c);
    CHECK(c.target_area() == QuadExt(2550));
    CHECK(c.leftovers.empty());
    CHECK(c.placements[1].transform.quarter_turns == 2);
}

TEST_CASE("three pyramids") {
    auto c = three_pyramids_2d(1);
    require_pass(c);
    REQUIRE(c.targets.size() == 1);
    CHECK(c.targets[0].region.rects[0] == Rect{QuadExt(0), QuadExt(0), QuadExt(2), QuadExt(Rat(3, 2))});
    c = three_pyramids_2d(4);
    require_pass(c);
    CHECK(c.targets.size() == 4);
    for (const auto& t : c.targets) CHECK(t.region.area() == QuadExt(Rat(45, 2)));
    CHECK(c.target_area() == QuadExt(90));
    c = three_pyramids_2d(7);
    require_pass(c);
    CHECK(c.target_area() == QuadExt(420));
    for (long n = 1; n <= 20; ++n) {
        c = three_pyramids_2d(n);
        require_pass(c);
        CHECK(c.target_area() == QuadExt(3) * S(2, n));
    }
}

TEST_CASE("Nicomachus in 2D") {
    auto c = nicomachus_4d_2d(1);
    require_pass(c);
    CHECK(c.target_area() == QuadExt(4));
    c = nicomachus_4d_2d(2);
    require_pass(c);
    CHECK(c.targets.size() == 4);
    for (const auto& t : c.targets) CHECK(t.region.area() == QuadExt(9));
    c = nicomachus_4d_2d(4);
    require_pass(c);
    CHECK(c.targets.size() == 16);
    CHECK(c.target_area() == QuadExt(400));
    CHECK(c.target_area() == QuadExt(4) * S(3, 4));
}

TEST_CASE("five pyramids in sections") {
    auto c = five_pyramids_layers(1);
    require_pass(c);
    CHECK(count_prefix(c.targets, "L1/") == 1);
    CHECK(area_of(c, "excess") == QuadExt(1));
    c = five_pyramids_layers(2);
    require_pass(c);
    CHECK(count_prefix(c.targets, "L1/") == 4);
    CHECK(count_prefix(c.targets, "L2/") == 4);
    CHECK(area_of(c, "excess") == QuadExt(13));
    CHECK(c.target_area() == QuadExt(85));
    c = five_pyramids_layers(4);
    require_pass(c);
    CHECK(c.source_area() == QuadExt(1770));
}

TEST_CASE("reshape into n by n+1 rectangles") {
    auto c = step2_reshape(1);
    require_pass(c);
    CHECK(c.targets.size() == 2);
    CHECK(c.targets[0].region.rects[0] == Rect{QuadExt(0), QuadExt(0), QuadExt(2), QuadExt(1)});
    c = step2_reshape(2);
    require_pass(c);
    CHECK(count_prefix(c.targets, "L1/") == 6);
    CHECK(c.target_area() == QuadExt(2 * 36));
    c = step2_reshape(3);
    require_pass(c);
    CHECK(count_prefix(c.targets, "L1/") == 12);
    CHECK(c.target_area() == QuadExt(3 * 144));
}

TEST_CASE("scissor cut") {
    const QuadExt x = strip_root();
    auto c = step3_scissor(1);
    require_pass(c);
    CHECK(area_of(c, "L1/0,0") == QuadExt(Rat(5, 3)));
    CHECK(c.targets[0].region.rects[0].w == QuadExt(2) + x);
    CHECK(c.targets[0].region.rects[0].h == QuadExt(1) - x);
    c = step3_scissor(2);
    require_pass(c);
    CHECK(area_of(c, "L1/0,0") == QuadExt(Rat(17, 3)));
    CHECK(c.leftovers.size() == 2 * 2 * 3);
    for (long n = 1; n <= 4; ++n) {
        c = step3_scissor(n);
        require_pass(c);
        for (const auto& l : c.leftovers) CHECK(l.region.area() == QuadExt(Rat(1, 3)));
        for (const auto& t : c.targets) {
            const auto& r = t.region.rects[0];
            CHECK(r.w * r.h == QuadExt(n * n + n) - QuadExt(Rat(1, 3)));
        }
        CHECK(c.target_area().is_rational());
    }
}

TEST_CASE("top layer") {
    auto r = step4_top_layer(1);
    require_pass(r.certificate);
    CHECK(area_of(r.certificate, "double") == QuadExt(4));
    CHECK(r.balance.holds);

    r = step4_top_layer(2);
    require_pass(r.certificate);
    CHECK(area_of(r.certificate, "double") == QuadExt(36));
    QuadExt copies, squares;
    for (const auto& p : r.certificate.placements) {
        if (p.source_layer == "copyA" || p.source_layer == "copyB") copies += p.source.area();
        if (p.source_layer == "squaresA" || p.source_layer == "squaresB") squares += p.source.area();
    }
    CHECK(copies == QuadExt(26));
    CHECK(squares == QuadExt(10));

    // Corner of 3x3 squares against the 3x3 array of corners.
    r = step4_top_layer(3);
    require_pass(r.certificate);
    CHECK(area_of(r.certificate, "dual/3") == QuadExt(45));
    QuadExt corner;
    for (const auto& p : r.certificate.placements)
        if (p.destination_layer == "dual/3") corner += p.source.area();
    CHECK(corner == QuadExt(45));
}

TEST_CASE("corner and square arrangements match cell for cell") {
    for (long n = 1; n <= 12; ++n) {
        const auto c = step4_top_layer(n).certificate;
        for (long k = 1; k <= n; ++k) {
            const std::string layer = "dual/" + std::to_string(k);
            std::set<std::pair<QuadExt, QuadExt>> from, to;
            for (const auto& p : c.placements) {
                if (p.destination_layer != layer) continue;
                CHECK(p.source.rects.size() == 1);
                const auto& s = p.source.rects[0];
                const auto img = p.image().rects[0];
                CHECK(s.w == QuadExt(1));
                CHECK(img.w == QuadExt(1));
                CHECK(from.emplace(s.x, s.y).second);
                CHECK(to.emplace(img.x, img.y).second);
            }
            CHECK(from.size() == static_cast<std::size_t>(k * k * (2 * k - 1)));
            CHECK(to.size() == from.size());
        }
    }
}

TEST_CASE("unsupported n") {
    for (auto c : all_constructions()) {
        CHECK_THROWS_AS(generate(c, 0), UnsupportedN);
        CHECK_THROWS_AS(generate(c, max_supported_n(c) + 1), UnsupportedN);
    }
}

TEST_CASE("full theorem") {
    std::vector<StageResult> stages;
    auto r = full_theorem_report(1, &stages);
    CHECK(r.holds);
    CHECK(r.lhs == QuadExt(5));
    CHECK(stages.size() == 4);
    for (const auto& s : stages) CHECK(s.check.passed());
    const QuadExt x = strip_root();
    CHECK(r.rhs == QuadExt(1 * 2) * (QuadExt(1) - x) * (QuadExt(2) + x) * QuadExt(Rat(3, 2)));
    CHECK((QuadExt(1) - x) * (QuadExt(2) + x) == QuadExt(Rat(5, 3)));
    r = full_theorem_report(2);
    CHECK(r.lhs == QuadExt(85));
    CHECK(r.rhs == QuadExt(6) * QuadExt(Rat(17, 3)) * QuadExt(Rat(5, 2)));
    r = full_theorem_report(10);
    CHECK(r.lhs == QuadExt(5 * 25333));
    CHECK(r.rhs == QuadExt(110) * (QuadExt(110) - QuadExt(Rat(1, 3))) * QuadExt(Rat(21, 2)));
    CHECK_THROWS_AS(full_theorem_report(11), UnsupportedN);
}

TEST_CASE("pipeline failures name the stage") {
    CheckReport bad;
    bad.status = CheckStatus::Overlap;
    bad.layer = "L1/0,0";
    const PipelineFailure e("STEP3_SCISSOR", bad);
    CHECK(e.stage() == "STEP3_SCISSOR");
    CHECK(std::string(e.what()).find("STEP3_SCISSOR: FAIL overlap in layer L1/0,0") == 0);
}

TEST_CASE("every certificate passes and every mutation is caught") {
    std::mt19937_64 rng(99);
    for (auto c : all_constructions())
        for (long n = 1; n <= 3; ++n) {
            const auto cert = generate(c, n);
            require_pass(cert);
            for (int i = 0; i < 25; ++i) {
                const auto m = powersum::verify::random_mutation(cert, rng);
                const auto r = check_certificate(powersum::verify::apply(cert, m));
                INFO(construction_name(c) << " n=" << n << " piece " << cert.placements[m.placement].piece_id);
                CHECK_FALSE(r.passed());
            }
        }
}

TEST_CASE("piece ids are unique and well formed") {
    for (auto c : all_constructions()) {
        const auto cert = generate(c, 3);
        std::set<std::string> ids;
        const std::string prefix = std::string(construction_name(c)) + "/";
        for (const auto& p : cert.placements) {
            CHECK(ids.insert(p.piece_id).second);
            CHECK(p.piece_id.compare(0, prefix.size(), prefix) == 0);
        }
    }
}

TEST_CASE("JSON round trip") {
    for (auto c : all_constructions()) {
        const auto cert = generate(c, 2);
        const std::string text = to_json(cert);
        const auto back = from_json(text);
        CHECK(to_json(back) == text);
        CHECK(back.placements.size() == cert.placements.size());
        CHECK(check_certificate(back).passed());
    }
    const std::string s3 = to_json(step3_scissor(1));
    CHECK(s3.find("\"-1/2+1/6*sqrt21\"") != std::string::npos);
}

TEST_CASE("malformed JSON") {
    const std::string good = to_json(gauss_rectangle(2));
    CHECK_THROWS_AS(from_json("{"), MalformedCertificate);
    CHECK_THROWS_AS(from_json("[]"), MalformedCertificate);
    CHECK_THROWS_AS(from_json(R"({"construction":"NOPE","n":1,"placements":[],"targets":[],"leftovers":[]})"),
                    MalformedCertificate);
    auto replace = [&](const std::string& from, const std::string& to) {
        std::string s = good;
        const auto at = s.find(from);
        REQUIRE(at != std::string::npos);
        return s.replace(at, from.size(), to);
    };
    CHECK_THROWS_AS(from_json(replace("\"x\": \"0\"", "\"x\": \"zero\"")), MalformedCertificate);
    CHECK_THROWS_AS(from_json(replace("\"x\": \"0\"", "\"x\": 0")), MalformedCertificate);
    CHECK_THROWS_AS(from_json(replace("\"quarter_turns\": 2", "\"quarter_turns\": 7")), MalformedCertificate);
    CHECK_THROWS_AS(from_json(replace("\"reflect\": false", "\"reflect\": 0")), MalformedCertificate);
    CHECK_THROWS_AS(from_json(replace("\"n\": 2", "\"n\": \"2\"")), MalformedCertificate);
    CHECK_THROWS_AS(from_json(replace("\"leftovers\"", "\"rest\"")), MalformedCertificate);
}
