#include <doctest.h>

#include <filesystem>
#include <random>

#include "certitrack/diagnostics.hpp"
#include "certitrack/errors.hpp"
#include "certitrack/io.hpp"
#include "certitrack/tracker.hpp"

using namespace certitrack;
using nlohmann::json;

namespace {

std::mt19937_64 rng(474101);

mpq_class rnd_q(long span = 99) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

GaussianRational rnd_g() { return {rnd_q(), rnd_q()}; }

MonomialTerm term(std::vector<unsigned> exp, GaussianRational c) {
    return MonomialTerm{std::move(exp), std::move(c)};
}

// dense random system of n degree-d polynomials in n+1 variables
PolySystem rnd_system(unsigned n, unsigned d) {
    std::vector<HomogeneousPolynomial> polys;
    for (unsigned k = 0; k < n; ++k) {
        std::vector<MonomialTerm> ts;
        // enumerate all exponent tuples of total degree d over n+1 variables
        std::vector<unsigned> exp(n + 1, 0);
        exp[0] = d;
        while (true) {
            ts.push_back(term(exp, rnd_g()));
            // next tuple in colex-ish order: move one unit rightward
            unsigned i = 0;
            while (i < n && exp[i] == 0) ++i;
            if (i == n) break;
            unsigned head = exp[i] - 1;
            exp[i] = 0;
            exp[0] = head;
            ++exp[i + 1];
        }
        polys.emplace_back(d, n + 1, std::move(ts));
    }
    return PolySystem(std::move(polys));
}

QVector rnd_vec(std::size_t len) {
    QVector v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = rnd_g();
    return v;
}

json toy_system_json() {
    return json::parse(R"({
      "n": 1, "vars": 2,
      "polys": [
        { "degree": 2,
          "terms": [
            { "exp": [2, 0], "re": "-11", "im": "0" },
            { "exp": [0, 2], "re": "1", "im": "0" }
          ] }
      ]
    })");
}

std::filesystem::path tmp_path(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("system JSON round-trips exactly") {
    PolySystem toy = system_from_json(toy_system_json());
    CHECK(toy.n() == 1);
    CHECK(toy.nvars() == 2);
    CHECK(toy.degrees() == std::vector<unsigned>{2});
    CHECK(system_from_json(system_to_json(toy)) == toy);

    for (int rep = 0; rep < 20; ++rep) {
        unsigned n = 1 + static_cast<unsigned>(rep % 3);
        unsigned d = 1 + static_cast<unsigned>(rep % 4);
        PolySystem sys = rnd_system(n, d);
        json j = system_to_json(sys);
        CHECK(system_from_json(j) == sys);
        // serialization itself is stable
        CHECK(j.dump(2) == system_to_json(sys).dump(2));
    }
}

TEST_CASE("system parser rejects malformed input") {
    CHECK_THROWS_AS(system_from_json(json::array()), ParseError);
    CHECK_THROWS_AS(system_from_json(json::parse("\"x\"")), ParseError);

    json base = toy_system_json();

    {
        json j = base;
        j.erase("n");
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j["n"] = -1;
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j["n"] = "1";
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j["vars"] = 3; // must equal n+1
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j.erase("polys");
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j["polys"] = json::object();
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j["polys"].push_back(j["polys"][0]); // two polys but n = 1
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j["polys"][0].erase("degree");
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j["polys"][0].erase("terms");
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j["polys"][0]["terms"][0].erase("exp");
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j["polys"][0]["terms"][0]["exp"] = {2}; // arity 1, vars = 2
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j["polys"][0]["terms"][0]["exp"] = {2, -1};
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j["polys"][0]["terms"][0]["exp"] = {2, 0.5};
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j["polys"][0]["terms"][0].erase("im");
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j["polys"][0]["terms"][0]["re"] = 11; // numbers must be strings
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j["polys"][0]["terms"][0]["re"] = "1.5";
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j["polys"][0]["terms"][0]["re"] = "3/0";
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j["polys"][0]["terms"][0]["exp"] = {1, 0}; // total degree 1 in a degree-2 poly
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
    {
        json j = base;
        j["polys"][0]["degree"] = 0;
        j["polys"][0]["terms"] = json::array();
        CHECK_THROWS_AS(system_from_json(j), ParseError);
    }
}

TEST_CASE("point JSON round-trips and validates") {
    for (int rep = 0; rep < 25; ++rep) {
        QVector v = rnd_vec(1 + rep % 5);
        CHECK(vector_from_json(vector_to_json(v)) == v);
    }

    CHECK_THROWS_AS(vector_from_json(json::array()), ParseError);
    CHECK_THROWS_AS(vector_from_json(json::object()), ParseError);
    CHECK_THROWS_AS(vector_from_json(json::parse(R"({"z": []})")), ParseError);
    CHECK_THROWS_AS(vector_from_json(json::parse(R"({"z": 3})")), ParseError);
    CHECK_THROWS_AS(vector_from_json(json::parse(R"({"z": [{"re": "1"}]})")), ParseError);
    CHECK_THROWS_AS(vector_from_json(json::parse(R"({"z": [{"re": "1", "im": 0}]})")), ParseError);
    CHECK_THROWS_AS(vector_from_json(json::parse(R"({"z": [{"re": "x", "im": "0"}]})")), ParseError);
}

TEST_CASE("tracking results serialize with exact rationals and stable bytes") {
    ToyFamily fam{mpq_class(10)};
    TrackerConfig cfg;
    cfg.trace_level = TraceLevel::Full;
    TrackResult res = track_segment(fam.f(), fam.g(), fam.z0(), cfg);
    REQUIRE(res.status == TrackStatus::Certified);

    json j = result_to_json(res);
    CHECK(j["status"] == "Certified");
    CHECK(j["steps"] == 184);
    CHECK(!j.contains("message"));
    REQUIRE(j["z_star"].size() == 2);
    CHECK(j["z_star"][0]["re"] == "330");
    CHECK(j["z_star"][0]["im"] == "0");
    CHECK(j["z_star"][1]["re"] == "1095");
    REQUIRE(j["trace"].size() == 184);

    const json& r0 = j["trace"][0];
    CHECK(r0["i"] == 0);
    CHECK(r0["s"] == "1/1024");
    CHECK(r0["t"] == "1/1024");
    CHECK(r0["a"] == "2");
    CHECK(r0["b"] == "5/4");
    CHECK(r0["W"] == "17/1000000");
    CHECK(r0["eps"] == "77316849/3673156236304");
    CHECK(r0["z_bits"] == 10);
    CHECK(r0["lu_depth"] == 9);
    REQUIRE(r0.contains("z")); // Full trace carries the iterate
    CHECK(r0["z"][0]["re"] == "515");
    CHECK(r0["z"][1]["re"] == "518");

    // byte determinism across runs
    TrackResult res2 = track_segment(fam.f(), fam.g(), fam.z0(), cfg);
    CHECK(result_to_json(res2).dump(2) == j.dump(2));

    // Summary trace drops the iterates
    cfg.trace_level = TraceLevel::Summary;
    json js = result_to_json(track_segment(fam.f(), fam.g(), fam.z0(), cfg));
    REQUIRE(js["trace"].size() == 184);
    CHECK(!js["trace"][0].contains("z"));

    // non-certified outcomes carry a message
    cfg.max_steps = 5;
    json jm = result_to_json(track_segment(fam.f(), fam.g(), fam.z0(), cfg));
    CHECK(jm["status"] == "MaxStepsExceeded");
    CHECK(jm.contains("message"));
}

TEST_CASE("bounds rows serialize field by field") {
    BoundsRow row;
    row.m = mpq_class(10);
    row.c0 = 1.25;
    row.lb = 31;
    row.lb_text = 89;
    row.ub = 358;
    row.observed_steps = 184;
    row.ratio_ub_over_steps = 358.0 / 184.0;

    json j = bounds_to_json({row});
    REQUIRE(j["rows"].size() == 1);
    const json& r = j["rows"][0];
    CHECK(r["m"] == "10");
    CHECK(r["c0"] == 1.25);
    CHECK(r["lb"] == 31);
    CHECK(r["lb_text"] == 89);
    CHECK(r["ub"] == 358);
    CHECK(r["observed_steps"] == 184);
    CHECK(r["ratio_ub_over_steps"] == 358.0 / 184.0);

    CHECK(bounds_to_json({})["rows"].empty());
}

TEST_CASE("file loading surfaces missing files and malformed JSON as parse errors") {
    CHECK_THROWS_AS(load_system_file("/nonexistent/certitrack.json"), ParseError);
    CHECK_THROWS_AS(load_vector_file("/nonexistent/certitrack.json"), ParseError);

    auto bad = tmp_path("certitrack_io_bad.json");
    write_text_file(bad.string(), "{ not json");
    CHECK_THROWS_AS(load_system_file(bad.string()), ParseError);
    CHECK_THROWS_AS(load_vector_file(bad.string()), ParseError);

    auto sys_path = tmp_path("certitrack_io_sys.json");
    write_text_file(sys_path.string(), toy_system_json().dump(2));
    PolySystem toy = load_system_file(sys_path.string());
    CHECK(toy == system_from_json(toy_system_json()));

    auto vec_path = tmp_path("certitrack_io_vec.json");
    QVector v = rnd_vec(3);
    write_text_file(vec_path.string(), vector_to_json(v).dump(2));
    CHECK(load_vector_file(vec_path.string()) == v);

    CHECK_THROWS_AS(write_text_file("/nonexistent/dir/out.json", "x"), Error);

    std::filesystem::remove(bad);
    std::filesystem::remove(sys_path);
    std::filesystem::remove(vec_path);
}
