// Uses only the public C header.
#include <doctest.h>

#include <string>

#include "skewkit/skewkit.h"

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { skk_string_free(p); }
    std::string s() const { return p ? p : ""; }
};

struct Dia {
    skk_diagram* p = nullptr;
    ~Dia() { skk_diagram_free(p); }
};

}  // namespace

TEST_CASE("diagram handles") {
    Dia d;
    REQUIRE(skk_diagram_from_json(R"({"lambda":[3,2,2,1],"mu":[2,1]})", &d.p) == SKK_OK);
    size_t n = 0;
    CHECK(skk_diagram_size(d.p, &n) == SKK_OK);
    CHECK(n == 5);
    Str j, r, e;
    CHECK(skk_diagram_to_json(d.p, &j.p) == SKK_OK);
    CHECK(j.s().find("\"lambda\"") != std::string::npos);
    CHECK(skk_render(d.p, &r.p) == SKK_OK);
    CHECK(!r.s().empty());
    CHECK(skk_expand(d.p, &e.p) == SKK_OK);
    CHECK(e.s().find("\"coeff\"") != std::string::npos);
}

TEST_CASE("invalid input") {
    Dia d;
    CHECK(skk_diagram_from_json("{not json", &d.p) == SKK_INVALID_INPUT);
    CHECK(std::string(skk_last_error()).size() > 0);
    CHECK(skk_diagram_from_json(R"({"lambda":[1,2]})", &d.p) == SKK_INVALID_INPUT);
    CHECK(skk_diagram_from_json(nullptr, &d.p) == SKK_INVALID_INPUT);
    CHECK(skk_expand(nullptr, nullptr) == SKK_INVALID_INPUT);
    CHECK(skk_classes(0, 1, nullptr) == SKK_INVALID_INPUT);
    CHECK(skk_verify_suite("nope", nullptr) == SKK_INVALID_INPUT);
    CHECK(skk_sylvester("[[1,2],[3]]", nullptr, nullptr) == SKK_INVALID_INPUT);
}

TEST_CASE("equality") {
    Dia a, b, c;
    REQUIRE(skk_diagram_from_json(R"({"lambda":[2,2],"mu":[1]})", &a.p) == SKK_OK);
    REQUIRE(skk_diagram_from_json(R"({"lambda":[2,1]})", &b.p) == SKK_OK);
    REQUIRE(skk_diagram_from_json(R"({"lambda":[3]})", &c.p) == SKK_OK);
    Str r1, r2;
    CHECK(skk_equal(a.p, b.p, &r1.p) == SKK_OK);
    CHECK(r1.s().find("fingerprint") != std::string::npos);
    CHECK(skk_equal(a.p, c.p, &r2.p) == SKK_PROPERTY_FAILS);
    CHECK(r2.s().find("first_difference") != std::string::npos);
}

TEST_CASE("compose with verification") {
    Dia d, e, f;
    REQUIRE(skk_diagram_from_json(R"({"lambda":[2,1]})", &d.p) == SKK_OK);
    REQUIRE(skk_diagram_from_json(R"({"lambda":[2,1]})", &e.p) == SKK_OK);
    Str rep;
    CHECK(skk_compose(d.p, e.p, R"({"lambda":[1]})", 1, &f.p, &rep.p) == SKK_OK);
    CHECK(rep.s().find("\"holds\":true") != std::string::npos);
    size_t n = 0;
    skk_diagram_size(f.p, &n);
    CHECK(n > 3);
    Str rep0;
    CHECK(skk_compose(d.p, e.p, nullptr, 0, nullptr, &rep0.p) == SKK_OK);
}

TEST_CASE("hypotheses, decompositions, Sylvester") {
    Dia e;
    REQUIRE(skk_diagram_from_json(R"({"lambda":[4,4,2,2],"mu":[2,1]})", &e.p) == SKK_OK);
    Str h;
    CHECK(skk_hypotheses(e.p, nullptr, &h.p) == SKK_OK);
    Str hg;
    CHECK(skk_hamel_goulden(e.p, "se", 1, &hg.p) == SKK_OK);
    CHECK(hg.s().find("\"det_equals_s_D\":true") != std::string::npos);
    Str bad;
    CHECK(skk_hamel_goulden(e.p, "zz", 0, &bad.p) == SKK_INVALID_INPUT);
    Str sy;
    CHECK(skk_sylvester("[[2,1,0],[1,3,1],[0,1,4]]", "[0]", &sy.p) == SKK_OK);
    CHECK(sy.s().find("\"holds\":true") != std::string::npos);
}

TEST_CASE("classes and suites") {
    Str c;
    CHECK(skk_classes(6, 1, &c.p) == SKK_OK);
    CHECK(c.s().find("\"findings\":[]") != std::string::npos);
    CHECK(std::string(skk_version()).size() > 0);
}
