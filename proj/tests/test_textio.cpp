// Serialization: canonical text round-trips, parser error reporting, display
// form, and JSON records.

#include <string>

#include "doctest.h"
#include "gaudin/golden.hpp"
#include "gaudin/textio.hpp"
#include "json.hpp"

namespace {

using namespace gaudin;

Gen Iz(int a, int p, int n) { return make_current(a, p, n, Point::Z); }
Gen Iw(int a, int p, int n) { return make_current(a, p, n, Point::W); }

State ws(const Word& w, const Scalar& c = Scalar(QExt(1))) {
    State v;
    v.add(w, c);
    return v;
}

}  // namespace

TEST_CASE("print/parse round-trips") {
    CHECK(roundtrip_ok(State()));  // zero state prints as "0"
    CHECK(print_state(State()) == "0");
    CHECK(parse_state("0").is_zero());

    State v = ws({Iz(1, 0, -1)});
    CHECK(roundtrip_ok(v));
    CHECK(roundtrip_ok(ws({Iw(2, 3, -2)}, Scalar(QExt(rat(-7, 3)), -1, 2))));
    CHECK(roundtrip_ok(ws({}, Scalar(QExt::s()))));
    CHECK(roundtrip_ok(ws({Iz(1, 0, -1), make_central(1, Point::W)},
                          Scalar(QExt(rat(1, 2), rat(3, 4)), 2, 1))));
    State sum = ws({Iz(1, 0, -1)}) + ws({Iz(2, 0, -2)}, Scalar(QExt(5), 0, 1)) +
                ws({make_central(0, Point::Z)}, Scalar(-QExt::s()));
    CHECK(roundtrip_ok(sum));
}

TEST_CASE("every frozen reference state round-trips") {
    for (const auto& tag : golden_tags()) CHECK(roundtrip_ok(golden_state(tag)));
}

TEST_CASE("printing is deterministic") {
    State v = golden_state("sigma3");
    CHECK(print_state(v) == print_state(v));
    State rebuilt = parse_state(print_state(v));
    CHECK(print_state(rebuilt) == print_state(v));
}

TEST_CASE("parser accepts explicit grammar samples") {
    State expected = ws({Iz(1, 0, -1)}, Scalar(QExt(rat(3, 2))));
    CHECK(parse_state("3/2 * I[a=1,p=0,n=-1,pt=z] * vac") == expected);

    // s factor and u/h powers
    State full = ws({Iw(2, 1, -2)}, Scalar(QExt(rat(0), rat(1)), -1, 2));
    CHECK(parse_state("1 * s * u^-1 * h^2 * I[a=2,p=1,n=-2,pt=w] * vac") == full);

    // centrals
    CHECK(parse_state("1 * k[p=1,pt=z] * vac") == ws({make_central(1, Point::Z)}));

    // non-canonical input is normal ordered
    State no = parse_state("1 * I[a=1,p=0,n=1,pt=z] * I[a=1,p=0,n=-1,pt=z] * vac");
    CHECK(no == ws({make_central(1, Point::Z)}, Scalar(QExt(-1))));

    // sums
    State two = parse_state("1 * I[a=1,p=0,n=-1,pt=z] * vac + 2 * I[a=2,p=0,n=-1,pt=z] * vac");
    CHECK(two == ws({Iz(1, 0, -1)}) + ws({Iz(2, 0, -1)}, Scalar(QExt(2))));
}

TEST_CASE("parser reports positions on malformed input") {
    CHECK_THROWS_AS(parse_state("xyz"), parse_error);
    CHECK_THROWS_AS(parse_state("1 *"), parse_error);
    CHECK_THROWS_AS(parse_state("1 * I[a=1,p=0,n=-1,pt=q] * vac"), parse_error);
    CHECK_THROWS_AS(parse_state("1 * vac extra"), parse_error);
    try {
        parse_state("1 * I[a=1 * vac");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position > 0);
    }
}

TEST_CASE("display form mentions the expected pieces") {
    std::string d = display_state(ws({Iz(1, 1, -2)}, Scalar(QExt(1), -1, 1)));
    CHECK(d.find("(z)") != std::string::npos);
    CHECK(d.find("-2") != std::string::npos);
    CHECK(display_state(State()) == "  0\n");
}

TEST_CASE("state_record emits tag and canonical expression") {
    State v = ws({Iz(3, 0, -1)}, Scalar(QExt(rat(1, 3))));
    nlohmann::json j = nlohmann::json::parse(state_record("probe", v));
    CHECK(j.at("tag").get<std::string>() == "probe");
    CHECK(j.at("expr").get<std::string>() == print_state(v));
    CHECK(parse_state(j.at("expr").get<std::string>()) == v);
}
