#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "eiko/field_io.hpp"
#include "eiko/generators.hpp"
#include "eiko/weak.hpp"
#include "oracles.hpp"

using namespace eiko;
namespace fs = std::filesystem;

namespace {

GridField2 make_vortex(int n, double L) {
    GeneratorParams p;
    p.center = {0, 0};
    p.alpha = 1.0;
    return generate(GeneratorKind::Vortex, p, oracles::centered_grid(n, L));
}

GridField2 make_jump(int n, double L) {
    GeneratorParams p;
    p.direction = {1, 0};
    return generate(GeneratorKind::Jump, p, oracles::centered_grid(n, L));
}

} // namespace

TEST_CASE("vortex generator matches the closed form and half-shifts off the center") {
    GridField2 u = make_vortex(65, 1.0);
    // the unshifted grid has a node at the center; origin must have moved
    CHECK(u.spec.x0 != doctest::Approx(-1.0).epsilon(1e-15));
    // closed form at a node: locate the node nearest (1, 0)
    int i = int(std::lround((1.0 - u.spec.x0) / u.spec.h));
    int j = int(std::lround((0.0 - u.spec.y0) / u.spec.h));
    Vec2 x = u.spec.node(i, j);
    CHECK((u.at(i, j) - oracles::vortex_value(x)).norm() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(u.unit_defect() <= 1e-12);
}

TEST_CASE("vortex at (1,0) with P=0, alpha=+1 gives (0,1)") {
    GeneratorParams p;
    p.center = {0, 0};
    p.alpha = 1.0;
    GridSpec g{3, 3, 0.5, -0.5, 0.5};
    GridField2 u = generate(GeneratorKind::Vortex, p, g);
    int i = int(std::lround((1.0 - u.spec.x0) / u.spec.h));
    int j = int(std::lround((0.0 - u.spec.y0) / u.spec.h));
    Vec2 v = u.at(i, j);
    Vec2 x = u.spec.node(i, j);
    Vec2 expect = oracles::vortex_value(x);
    CHECK(v.x() == doctest::Approx(expect.x()));
    CHECK(v.y() == doctest::Approx(expect.y()));
    // and exactly (0,1) when the node is exactly (1,0)
    if ((x - Vec2{1, 0}).norm() < 1e-14) {
        CHECK(v.x() == doctest::Approx(0.0));
        CHECK(v.y() == doctest::Approx(1.0));
    }
}

TEST_CASE("constant generator fills the grid and unit flag follows the vector") {
    GeneratorParams p;
    p.direction = {1, 0};
    GridField2 u = generate(GeneratorKind::Constant, p, oracles::centered_grid(17, 1.0));
    CHECK(u.unit);
    CHECK(u.at(3, 5).x() == 1.0);
    CHECK(u.at(3, 5).y() == 0.0);

    p.direction = {2, 0};
    GridField2 w = generate(GeneratorKind::Constant, p, oracles::centered_grid(17, 1.0));
    CHECK_FALSE(w.unit);
}

TEST_CASE("all unit generators satisfy the unit-length invariant to 1e-12") {
    CHECK(make_vortex(33, 1.0).unit_defect() <= 1e-12);
    CHECK(make_jump(33, 1.0).unit_defect() <= 1e-12);

    GeneratorParams pd;
    pd.target.points.push_back({0, 0});
    CHECK(generate(GeneratorKind::Distance, pd, oracles::centered_grid(33, 1.0)).unit_defect() <=
          1e-12);

    GeneratorParams pl;
    GridSpec strip = oracles::centered_grid(33, 0.45);
    CHECK(generate(GeneratorKind::LogLog, pl, strip).unit_defect() <= 1e-12);
}

TEST_CASE("divergence_weak: constant field vanishes to quadrature tolerance") {
    GeneratorParams p;
    p.direction = {0.6, 0.8};
    TestBump z{{0.1, -0.2}, 0.4, 1.0};
    GridField2 u = generate(GeneratorKind::Constant, p, oracles::centered_grid(65, 1.0));
    CHECK(std::abs(divergence_weak(u, z)) <= 1e-4);
    GridField2 uf = generate(GeneratorKind::Constant, p, oracles::centered_grid(257, 1.0));
    CHECK(std::abs(divergence_weak(uf, z)) <= 1e-6);
}

TEST_CASE("divergence_weak: vortex decays at second order under refinement") {
    TestBump z{{0.35, 0.35}, 0.25, 1.0};
    double v1 = std::abs(divergence_weak(make_vortex(65, 1.0), z));
    double v2 = std::abs(divergence_weak(make_vortex(129, 1.0), z));
    double v3 = std::abs(divergence_weak(make_vortex(257, 1.0), z));
    CHECK(v2 < v1);
    CHECK(v3 < v2);
    // observed order >= 1.5 between the two finest levels
    CHECK(std::log2(v2 / v3) >= 1.5);
    CHECK(v3 <= 1e-4);
}

TEST_CASE("divergence_weak: jump field is weakly divergence-free across the line") {
    TestBump z{{0.0, 0.0}, 0.35, 1.0};
    double v1 = std::abs(divergence_weak(make_jump(65, 1.0), z));
    double v2 = std::abs(divergence_weak(make_jump(129, 1.0), z));
    CHECK(v1 <= 1e-3);
    CHECK(v2 <= v1 + 1e-12);
}

TEST_CASE("divergence_weak: loglog field has residual bounded away from zero") {
    GeneratorParams p;
    TestBump z{{0.07, 0.0}, 0.22, 1.0};  // asymmetric straddle of x1 = 0
    double v1 = 0, v2 = 0;
    {
        GridSpec g = oracles::centered_grid(129, 0.45);
        v1 = divergence_weak(generate(GeneratorKind::LogLog, p, g), z);
    }
    {
        GridSpec g = oracles::centered_grid(257, 0.45);
        v2 = divergence_weak(generate(GeneratorKind::LogLog, p, g), z);
    }
    // independent oracle: -int cos(phi(x1)) g(x1) dx1 with g = int d1 zeta dx2
    double ref = oracles::simpson(
        [&](double x) {
            double ym = std::sqrt(std::max(0.0, z.radius * z.radius - (x - 0.07) * (x - 0.07)));
            if (ym <= 0) return 0.0;
            double gx = oracles::simpson(
                [&](double y) { return z.gradient({x, y}).x(); }, -ym, ym, 400);
            double phi = std::log(std::abs(std::log(std::abs(x))));
            return -std::cos(phi) * gx;
        },
        0.07 - z.radius, 0.07 + z.radius, 2000);
    CHECK(std::abs(v1 - ref) <= 0.01);
    CHECK(std::abs(v2 - ref) <= 0.005);
    CHECK(std::abs(v1) >= 0.02);
    CHECK(std::abs(v2) >= 0.02);
}

TEST_CASE("gradient_from_stream: psi = x1 gives u = (0,1) in the interior") {
    GridSpec g = oracles::centered_grid(17, 1.0);
    GridScalar psi = sample_scalar(g, [](const Vec2& x) { return x.x(); });
    GridField2 u = gradient_from_stream(psi);
    CHECK(u.at(8, 8).x() == doctest::Approx(0.0));
    CHECK(u.at(8, 8).y() == doctest::Approx(1.0));
}

TEST_CASE("gradient_from_stream: psi = dist(., origin) reproduces the vortex at O(h^2)") {
    GridSpec g0 = oracles::centered_grid(129, 1.0);
    g0.x0 += g0.h / 2;  // keep nodes off the cone point
    g0.y0 += g0.h / 2;
    GridScalar psi = sample_scalar(g0, [](const Vec2& x) { return x.norm(); });
    GridField2 u = gradient_from_stream(psi);
    double worst = 0;
    for (int j = 2; j < g0.ny - 2; ++j)
        for (int i = 2; i < g0.nx - 2; ++i) {
            Vec2 x = g0.node(i, j);
            if (x.norm() < 0.3) continue;  // smooth region only
            worst = std::max(worst, (u.at(i, j) - oracles::vortex_value(x)).norm());
        }
    CHECK(worst <= 4.0 * g0.h * g0.h);
}

TEST_CASE("gradient_from_stream: constant psi gives the zero field, which is not unit") {
    GridSpec g = oracles::centered_grid(9, 1.0);
    GridScalar psi = sample_scalar(g, [](const Vec2&) { return 3.5; });
    GridField2 u = gradient_from_stream(psi);
    CHECK(u.values.abs().maxCoeff() == 0.0);
    CHECK(u.unit_defect() == doctest::Approx(1.0));
    CHECK_THROWS_AS(u.enforce_unit(1e-12), ContractError);
}

TEST_CASE("distance field to a rectangle: unit length and straight characteristics off axis") {
    GeneratorParams p;
    p.target.polygons.push_back({{-0.5, -0.25}, {0.5, -0.25}, {0.5, 0.25}, {-0.5, 0.25}});
    GridField2 u = generate(GeneratorKind::Distance, p, oracles::centered_grid(129, 1.0));
    CHECK(u.unit_defect() <= 1e-12);
    // outside the rectangle below the bottom edge the field is exactly (1, 0)
    int i = int(std::lround((0.0 - u.spec.x0) / u.spec.h));
    int j = int(std::lround((-0.6 - u.spec.y0) / u.spec.h));
    CHECK((u.at(i, j) - Vec2{1, 0}).norm() <= 1e-14);
}

TEST_CASE("field file round-trip is bitwise exact") {
    GridField2 u = make_vortex(17, 1.0);
    u.values(5, 0) = 0x1.fffffffffffffp-3;  // awkward mantissa on purpose
    fs::path tmp = fs::temp_directory_path() / "eiko_roundtrip.fld";
    write_field(u, tmp.string());
    GridField2 v = read_field(tmp.string());
    REQUIRE(v.values.rows() == u.values.rows());
    for (std::int64_t n = 0; n < u.values.rows(); ++n) {
        CHECK(std::memcmp(&u.values(n, 0), &v.values(n, 0), sizeof(double)) == 0);
        CHECK(std::memcmp(&u.values(n, 1), &v.values(n, 1), sizeof(double)) == 0);
    }
    CHECK(v.spec == u.spec);
    fs::remove(tmp);
}

TEST_CASE("field file: 2x2 header parses, truncated body rejected") {
    fs::path tmp = fs::temp_directory_path() / "eiko_small.fld";
    {
        std::ofstream os(tmp);
        os << "EIKO1 2 2 0 0 0.5\n1 0\n0 1\n-1 0\n0 -1\n";
    }
    GridField2 u = read_field(tmp.string());
    CHECK(u.spec.nx == 2);
    CHECK(u.spec.h == 0.5);
    CHECK(u.at(1, 1).y() == -1.0);
    {
        std::ofstream os(tmp);
        os << "EIKO1 2 2 0 0 0.5\n1 0\n0 1\n";
    }
    CHECK_THROWS_WITH_AS(read_field(tmp.string()),
                         doctest::Contains("value count mismatch"), ValidationError);
    {
        std::ofstream os(tmp);
        os << "EIKO1 2 nonsense\n";
    }
    CHECK_THROWS_AS(read_field(tmp.string()), ValidationError);
    fs::remove(tmp);
}

TEST_CASE("scalar file round-trip") {
    GridSpec g = oracles::centered_grid(9, 1.0);
    GridScalar s = sample_scalar(g, [](const Vec2& x) { return std::sin(x.x()) * x.y(); });
    fs::path tmp = fs::temp_directory_path() / "eiko_roundtrip.sca";
    write_scalar(s, tmp.string());
    GridScalar r = read_scalar(tmp.string());
    CHECK((r.values - s.values).abs().maxCoeff() == 0.0);
    CHECK(field_file_tag(tmp.string()) == "EIKS1");
    fs::remove(tmp);
}

TEST_CASE("bump support checks reject overflow") {
    GridSpec g = oracles::centered_grid(33, 1.0);
    TestBump z{{0.9, 0.0}, 0.3, 1.0};
    GridField2 u = make_vortex(33, 1.0);
    CHECK_THROWS_AS(divergence_weak(u, z), ValidationError);
}

TEST_CASE("generator validation errors") {
    GeneratorParams p;
    CHECK_THROWS_AS(generate(GeneratorKind::Distance, p, oracles::centered_grid(9, 1.0)),
                    ValidationError);
    CHECK_THROWS_AS(parse_generator_kind("spiral"), ValidationError);
    GridSpec bad{1, 5, 0, 0, 0.1};
    CHECK_THROWS_AS(generate(GeneratorKind::Constant, p, bad), ValidationError);
}
