#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "stringy/json_io.hpp"
#include "support/generators.hpp"

using namespace stringy;

namespace {

bool message_mentions(const std::exception& error, const std::string& needle) {
    return std::string(error.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("epoly serialization") {
    const EPolynomial poly = EPolynomial::term(1, 1, 3) + EPolynomial::term(2, 0, 1);
    CHECK(epoly_to_json(poly).dump() == R"([[1,1,"3"],[2,0,"1"]])");
    CHECK(epoly_to_json(EPolynomial::zero()).dump() == "[]");
    CHECK(epoly_from_json(epoly_to_json(poly)) == poly);

    // coefficients beyond 64 bits survive as decimal strings
    const Int huge("1000000000000000000000000000000");
    const EPolynomial big = EPolynomial::term(1, 2, huge) - EPolynomial::term(0, 0, huge);
    const Json encoded = epoly_to_json(big);
    CHECK(encoded.dump() ==
          R"([[0,0,"-1000000000000000000000000000000"],[1,2,"1000000000000000000000000000000"]])");
    CHECK(epoly_from_json(encoded) == big);

    // plain JSON integers are accepted on input
    CHECK(epoly_from_json(Json::parse(R"([[1,1,3]])")) == EPolynomial::term(1, 1, 3));

    CHECK_THROWS_AS(epoly_from_json(Json::parse("{}")), std::invalid_argument);
    CHECK_THROWS_AS(epoly_from_json(Json::parse(R"([[1,1]])")), std::invalid_argument);
    CHECK_THROWS_AS(epoly_from_json(Json::parse(R"([[1,1,true]])")), std::invalid_argument);
}

TEST_CASE("epoly round trips are byte-stable") {
    std::mt19937_64 rng(8128);
    for (int round = 0; round < 50; ++round) {
        const EPolynomial poly = testing::random_epoly(rng);
        const std::string first = dump_json(epoly_to_json(poly));
        const EPolynomial back = epoly_from_json(Json::parse(first));
        CHECK(back == poly);
        CHECK(dump_json(epoly_to_json(back)) == first);
    }
}

TEST_CASE("presentation serialization fixes the key order") {
    const GammaGroup group(2, 1);
    std::map<GammaCharacter, EPolynomial> isotypic;
    isotypic.emplace(GammaCharacter::trivial(group), EPolynomial::one());
    const OrbifoldPresentation presentation(
        group, {Sector(GammaElement::identity(group), 0, std::move(isotypic))});
    CHECK(presentation_to_json(presentation).dump() ==
          R"({"n":2,"g":1,"sectors":[{"gamma":[0,0],"shift":0,)"
          R"("isotypic":[{"character":[0,0],"epoly":[[0,0,"1"]]}]}]})");
}

TEST_CASE("presentation round trips are byte-stable and behavior-preserving") {
    std::mt19937_64 rng(65537);
    for (int round = 0; round < 20; ++round) {
        const OrbifoldPresentation presentation = testing::random_presentation(rng);
        const std::string first = dump_json(presentation_to_json(presentation));
        const OrbifoldPresentation back = presentation_from_json(Json::parse(first));
        CHECK(dump_json(presentation_to_json(back)) == first);
        CHECK(stringy_e(back) == stringy_e(presentation));
        const TorsionClass rho = standard_rho(presentation.group());
        CHECK(twisted_stringy_e(back, rho, 1) == twisted_stringy_e(presentation, rho, 1));
    }
}

TEST_CASE("presentation parse errors name the missing key") {
    const Json incomplete = Json::parse(R"({"n":2,"g":1})");
    CHECK_THROWS_AS(presentation_from_json(incomplete), std::exception);
    try {
        presentation_from_json(incomplete);
        FAIL("expected a missing-key error");
    } catch (const std::exception& error) {
        CHECK(message_mentions(error, "sectors"));
    }

    const Json duplicated = Json::parse(
        R"({"n":2,"g":1,"sectors":[{"gamma":[1,0],"shift":1,"isotypic":[)"
        R"({"character":[0,0],"epoly":[]},{"character":[0,0],"epoly":[]}]}]})");
    CHECK_THROWS_AS(presentation_from_json(duplicated), std::invalid_argument);
}

TEST_CASE("curve setup round trip") {
    const CurveSetup setup(3, 2, 2, 5, -7, true, false);
    const std::string first = dump_json(curve_setup_to_json(setup));
    const CurveSetup back = curve_setup_from_json(Json::parse(first));
    CHECK(back.genus == 3);
    CHECK(back.rank == 2);
    CHECK(back.punctures == 2);
    CHECK(back.sl_degree == 5);
    CHECK(back.mirror_degree == -7);
    CHECK(back.generic_weights);
    CHECK(!back.coprime_case);
    CHECK(dump_json(curve_setup_to_json(back)) == first);
    CHECK(curve_setup_to_json(setup).dump() ==
          R"({"g":3,"n":2,"m":2,"c":5,"d":-7,"generic_weights":true,"coprime_case":false})");

    // validation runs on parse: a coprime-case setup with punctures is rejected
    CHECK_THROWS_AS(
        curve_setup_from_json(Json::parse(
            R"({"g":3,"n":2,"m":2,"c":5,"d":7,"generic_weights":true,"coprime_case":true})")),
        std::invalid_argument);
}

TEST_CASE("lattice serialization") {
    std::mt19937_64 rng(24601);
    for (int round = 0; round < 20; ++round) {
        const PolarizedLatticeTorus torus = random_polarized_lattice(1 + round % 4, rng);
        const std::string first = dump_json(lattice_to_json(torus));
        const PolarizedLatticeTorus back = lattice_from_json(Json::parse(first));
        CHECK(back.pairing() == torus.pairing());
        CHECK(back.divisors() == torus.divisors());
        CHECK(dump_json(lattice_to_json(back)) == first);
    }

    // string and integer entries both parse
    const PolarizedLatticeTorus from_strings =
        lattice_from_json(Json::parse(R"({"pairing":[["0","2"],["-2","0"]]})"));
    CHECK(from_strings.divisors() == std::vector<Int>{Int(2)});

    CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"pairing":[[0,1],[-1]]})")),
                    std::invalid_argument);
    try {
        lattice_from_json(Json::parse("{}"));
        FAIL("expected a missing-key error");
    } catch (const std::exception& error) {
        CHECK(message_mentions(error, "pairing"));
    }
}

TEST_CASE("lattice entries beyond 64 bits refuse to serialize") {
    const Int big = Int("9223372036854775808");  // 2^63
    IntMatrix pairing(2, 2);
    pairing(0, 1) = big;
    pairing(1, 0) = -big;
    const PolarizedLatticeTorus torus(pairing);
    CHECK_THROWS_AS(lattice_to_json(torus), std::out_of_range);
}

TEST_CASE("torsor serialization recomputes the section flag") {
    const TorsorLabel label(principal_polarization(2), 0, FiberSide::PGL);
    Json encoded = torsor_to_json(label);
    CHECK(encoded.at("side") == "PGL");
    CHECK(encoded.at("degree") == 0);
    CHECK(encoded.at("has_lagrangian_section") == true);

    // the stored flag is advisory; degree alone decides on parse
    encoded["has_lagrangian_section"] = false;
    const TorsorLabel back = torsor_from_json(encoded);
    CHECK(back.has_lagrangian_section);
    CHECK(back.side == FiberSide::PGL);
    CHECK(back.base == label.base);

    const std::string first = dump_json(torsor_to_json(label));
    CHECK(dump_json(torsor_to_json(torsor_from_json(Json::parse(first)))) == first);
}

TEST_CASE("rational matrix serialization") {
    RatMatrix matrix(1, 2);
    matrix(0, 0) = Rat(3, 5);
    matrix(0, 1) = Rat(-4, 5);
    CHECK(rat_matrix_to_json(matrix).dump() == R"([["3/5","-4/5"]])");
    CHECK(rat_matrix_from_json(rat_matrix_to_json(matrix)) == matrix);

    // unreduced and integral spellings normalize on input
    const RatMatrix parsed = rat_matrix_from_json(Json::parse(R"([["6/10",2]])"));
    CHECK(parsed(0, 0) == Rat(3, 5));
    CHECK(parsed(0, 1) == Rat(2));

    CHECK_THROWS(rat_matrix_from_json(Json::parse(R"([["3/0"]])")));
    CHECK_THROWS(rat_matrix_from_json(Json::parse(R"([["seven"]])")));
    CHECK_THROWS_AS(rat_matrix_from_json(Json::parse(R"([[1,2],[3]])")), std::invalid_argument);
    CHECK_THROWS_AS(rat_matrix_from_json(Json::parse("[]")), std::invalid_argument);
}

TEST_CASE("model and subspace round trips") {
    const HyperkahlerModel model = HyperkahlerModel::standard(1);
    const std::string first = dump_json(model_to_json(model));
    const HyperkahlerModel back = model_from_json(Json::parse(first));
    CHECK(back.k() == 1);
    CHECK(back.complex_structure(2) == model.complex_structure(2));
    CHECK(back.metric() == model.metric());
    CHECK(dump_json(model_to_json(back)) == first);

    const LinearSubspace plane =
        LinearSubspace::from_vectors({{Rat(3, 5), Rat(4, 5), Rat(0), Rat(0)},
                                      {Rat(0), Rat(0), Rat(3, 5), Rat(-4, 5)}});
    const std::string encoded = dump_json(subspace_to_json(plane));
    const LinearSubspace plane_back = subspace_from_json(Json::parse(encoded));
    CHECK(plane_back.basis() == plane.basis());
    CHECK(dump_json(subspace_to_json(plane_back)) == encoded);

    // validation runs on parse: a dependent basis is rejected
    CHECK_THROWS_AS(subspace_from_json(Json::parse(R"({"basis":[["1","0"],["2","0"]]})")),
                    std::invalid_argument);
}

TEST_CASE("file round trip and framing") {
    CHECK(dump_json(Json::object()) == "{}\n");
    CHECK(dump_json(Json::parse(R"({"a":1})")) == "{\n  \"a\": 1\n}\n");

    const auto path = std::filesystem::temp_directory_path() / "stringy_json_io_test.json";
    const Json document = presentation_to_json(generate_rank2_presentation(1, 1));
    write_json_file(path, document);
    CHECK(load_json_file(path) == document);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(load_json_file("/nonexistent/stringy/file.json"), std::runtime_error);
}
