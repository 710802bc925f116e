#include <doctest.h>

#include "restrikt/report.hpp"

using namespace restrikt;

TEST_CASE("report carries the full E1 pipeline") {
    AnalysisReport r = build_report("x2^2 - 2 x1^2 x2 + x1^4 + x1^5");
    std::string j = report_to_json(r);
    CHECK(j.find("\"h\": \"10/7\"") != std::string::npos);
    CHECK(j.find("\"d\": \"4/3\"") != std::string::npos);
    CHECK(j.find("\"kind\": \"A4\"") != std::string::npos);
    size_t at = j.find("\"critical_exponent\": [");
    CHECK(at != std::string::npos);
    CHECK(j.find("\"1/6\"", at) < j.find("\"1/4\"", at));
    CHECK(j.find("\"psi\": \"x1^2\"") != std::string::npos);
}

TEST_CASE("identical runs produce byte-identical JSON") {
    for (const char* text : {"x2^2 - 2 x1^2 x2 + x1^4 + x1^5", "x1^2 + x2^2"}) {
        std::string a = report_to_json(build_report(text));
        std::string b = report_to_json(build_report(text));
        CHECK(a == b);
    }
}

TEST_CASE("validation failures carry machine-readable codes") {
    CHECK_THROWS_AS(build_report("x1 + x2^2"), ValidationError);
    try {
        build_report("x1 + x2^2");
    } catch (const ValidationError& e) {
        CHECK(e.code == "NonzeroGradient");
    }
    // the same phase passes with gradient normalization; the leftover x2^2
    // has its principal face on the unbounded horizontal edge, so h = 2
    AnalysisReport r = build_report("x1 + x2^2", true);
    CHECK(r.analysis.phi == parse_polynomial("x2^2"));
    CHECK(r.analysis.heights.h == Rational(2));
    CHECK(r.analysis.adapted);
}

TEST_CASE("csv emitters") {
    AnalysisReport e1 = build_report("x2^2 - 2 x1^2 x2 + x1^4 + x1^5");
    std::string pcsv = polygon_to_csv(e1.polygon);
    // header plus one row per distinct vertex
    CHECK(std::count(pcsv.begin(), pcsv.end(), '\n') == 5);
    REQUIRE(e1.analysis.kfun.has_value());
    std::string kcsv = kfunction_to_csv(*e1.analysis.kfun);
    CHECK(std::count(kcsv.begin(), kcsv.end(), '\n') == 3);  // header + 2 breakpoints

    AnalysisReport ad = build_report("x1^2 + x2^2");
    std::string acsv = polygon_to_csv(ad.polygon);
    CHECK(std::count(acsv.begin(), acsv.end(), '\n') == 4);  // header + 3 vertices
}

TEST_CASE("rationals serialize as num/den strings") {
    CHECK(to_fraction_string(Rational(10, 7)) == "10/7");
    CHECK(to_fraction_string(Rational(7)) == "7/1");
    CHECK(to_fraction_string(Rational(-1, 2)) == "-1/2");
    CHECK(ExtRational::infinity().str() == "inf");
    CHECK(parse_rational("1/6") == Rational(1, 6));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("5") == Rational(5));
}

TEST_CASE("augmented polyhedron csv") {
    AnalysisReport e1 = build_report("x2^2 - 2 x1^2 x2 + x1^4 + x1^5");
    REQUIRE(e1.analysis.aug.has_value());
    std::string csv = augmented_to_csv(*e1.analysis.aug);
    // header + ray point + vertices (0,2),(5,0) + horizontal tail
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    CHECK(csv.find("ray") != std::string::npos);
    CHECK(csv.find("0,2,vertex") != std::string::npos);
    CHECK(csv.find("5,0,vertex") != std::string::npos);
    CHECK(csv.find("7,0,horizontal") != std::string::npos);
}

TEST_CASE("decay csv emitter") {
    std::vector<DecaySample> s = {{1024.0, {1e-3, -2e-3}, 1e-9}};
    std::string csv = decay_to_csv(s);
    CHECK(csv.rfind("lambda,re,im,abs,err_est\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}
