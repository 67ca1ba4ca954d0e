// Frozen reference data: tag inventory, self-consistency of the quartic
// coordinate tables, and drift detection against the serialized snapshot.

#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "gaudin/golden.hpp"
#include "gaudin/linalg.hpp"
#include "gaudin/textio.hpp"
#include "json.hpp"

namespace {

using namespace gaudin;

Gen Iz(int a, int p, int n) { return make_current(a, p, n, Point::Z); }

State ws(const Word& w, const Scalar& c = Scalar(QExt(1))) {
    State v;
    v.add(w, c);
    return v;
}

}  // namespace

TEST_CASE("golden tag inventory") {
    const auto& tags = golden_tags();
    CHECK(tags.size() == 4 + 5 + 3 + 3 + 4 + 14);
    for (const auto& tag : tags) CHECK_FALSE(golden_state(tag).is_zero());
    CHECK_THROWS_AS(golden_state("no_such_tag"), argument_error);
}

TEST_CASE("quadratic density and witnesses") {
    State sigma1;
    for (int a = 1; a <= 3; ++a) sigma1 += ws({Iz(a, 0, -1), Iz(a, 0, -1)});
    CHECK(golden_state("sigma1") == sigma1);
    for (int r = 1; r <= 3; ++r)
        CHECK(golden_state("witness_quadratic_r" + std::to_string(r)) ==
              ws({Iz(r, 0, -1)}, Scalar(QExt(-4))));
}

TEST_CASE("quartic basis is independent and graded") {
    std::vector<State> basis;
    for (int i = 1; i <= 14; ++i) {
        State b = quartic_basis_state(i);
        CHECK_FALSE(b.is_zero());
        for (const auto& [w, c] : b.terms()) {
            CHECK(word_depth(w) == 4);
            CHECK(word_weight(w) == 4);
        }
        basis.push_back(b);
    }
    CHECK(state_rank(basis) == 14);
    CHECK_THROWS_AS(quartic_basis_state(0), argument_error);
    CHECK_THROWS_AS(quartic_basis_state(15), argument_error);
}

TEST_CASE("from_quartic_coordinates matches manual combination") {
    std::array<QExt, 14> xi{};
    xi[0] = QExt(2);
    xi[5] = QExt(rat(-1, 3));
    State v = from_quartic_coordinates(xi);
    CHECK(v == quartic_basis_state(1).scaled(QExt(2)) +
                   quartic_basis_state(6).scaled(QExt(rat(-1, 3))));
}

TEST_CASE("coordinate relations hold for both stored densities") {
    for (auto coords : {sigma3_coordinates(), quartic_alt_coordinates()}) {
        for (const auto& [dep, form] : quartic_coordinate_relations()) {
            QExt expect;
            for (const auto& [idx, coef] : form) expect += coords[idx - 1] * QExt(coef);
            CHECK(coords[dep - 1] == expect);
        }
    }
}

TEST_CASE("free coordinates extend uniquely") {
    const auto& free_idx = quartic_free_indices();
    CHECK_FALSE(free_idx.empty());
    CHECK(free_idx.size() + quartic_coordinate_relations().size() == 14);

    auto coords = sigma3_coordinates();
    std::map<int, QExt> free_vals;
    for (int i : free_idx) free_vals[i] = coords[i - 1];
    auto extended = quartic_coordinates_from_free(free_vals);
    for (int i = 0; i < 14; ++i) CHECK(extended[i] == coords[i]);

    // dependent keys are rejected
    int dep = quartic_coordinate_relations().front().first;
    CHECK_THROWS_AS(quartic_coordinates_from_free({{dep, QExt(1)}}), argument_error);
}

TEST_CASE("witness states are linear in rho") {
    std::array<QExt, 8> rho{};
    rho[0] = QExt(1);
    auto base = quartic_witness_states(rho);
    bool any = false;
    for (const auto& g : base)
        if (!g.is_zero()) any = true;
    CHECK(any);
    std::array<QExt, 8> rho2{};
    rho2[0] = QExt(3);
    auto scaled = quartic_witness_states(rho2);
    for (int r = 0; r < 3; ++r) CHECK(scaled[r] == base[r].scaled(QExt(3)));
}

TEST_CASE("golden JSON payload is well-formed and matches the states") {
    nlohmann::json j = nlohmann::json::parse(golden_json());
    CHECK(j.at("version").get<int>() == 1);
    const auto& tags = golden_tags();
    REQUIRE(j.at("states").size() == tags.size());
    for (const auto& entry : j.at("states")) {
        std::string tag = entry.at("tag").get<std::string>();
        State v = parse_state(entry.at("expr").get<std::string>());
        CHECK(v == golden_state(tag));
    }
}

TEST_CASE("serialized snapshot has not drifted") {
    std::ifstream in(GAUDIN_SOURCE_DIR "/data/golden.json");
    REQUIRE_MESSAGE(in.good(), "data/golden.json missing; regenerate with make_golden");
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == golden_json());
}
