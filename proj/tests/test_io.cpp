#include <doctest.h>

#include "phik/io.hpp"

using namespace phik;
using phik::io::json;

TEST_CASE("function tables: flat and nested forms") {
    auto spec = io::parse_function_table("flat", R"({"1": 1, "2": "-7", "3": "123456789012345678901234567890"})");
    CHECK(spec.f.is_table());
    CHECK(spec.f(2) == -7);
    CHECK(spec.f(3) == BigInt("123456789012345678901234567890"));
    CHECK(spec.rhs_override.empty());

    spec = io::parse_function_table("nested", R"({"values": {"1": 2}, "rhs": {"2,9": "77"}})");
    CHECK(spec.f(1) == 2);
    REQUIRE(spec.rhs_override.size() == 1);
    CHECK(spec.rhs_override[0].first == std::pair<unsigned, u64>{2, 9});
    CHECK(spec.rhs_override[0].second == 77);
}

TEST_CASE("function tables: malformed input") {
    CHECK_THROWS_AS(io::parse_function_table("x", "[1, 2]"), DomainError);
    CHECK_THROWS_AS(io::parse_function_table("x", "{not json"), DomainError);
    CHECK_THROWS_AS(io::parse_function_table("x", R"({"0": 1})"), DomainError);
    CHECK_THROWS_AS(io::parse_function_table("x", R"({"a": 1})"), DomainError);
    CHECK_THROWS_AS(io::parse_function_table("x", R"({"1": 1.5})"), DomainError);
    CHECK_THROWS_AS(io::parse_function_table("x", R"({"values": {}, "rhs": {"29": 1}})"), DomainError);
}

TEST_CASE("function specs") {
    CHECK(io::parse_function_spec("id").f(7) == 7);
    CHECK(io::parse_function_spec("pow:2").f(7) == 49);
    CHECK(io::parse_function_spec("tau").f(12) == 6);
    CHECK_THROWS_AS(io::parse_function_spec("bogus"), DomainError);
    CHECK_THROWS_AS(io::parse_function_spec("table:/nonexistent/file.json"), DomainError);
}

TEST_CASE("JSON records keep exact integers as strings") {
    const PartialSum s{4, 100000, phik::pow(10, 25) + 1, SumMethod::convolution};
    const json j = io::to_json(s);
    CHECK(j["value"] == "10000000000000000000000001");
    CHECK(j["x"] == "100000");
    CHECK(j["method"] == "convolution");
    CHECK(BigInt(j["value"].get<std::string>()) == s.value);

    const Enclosure e{Rational(1, 3), Rational(1, 2)};
    const json c = io::to_json(e, 2, 1000);
    CHECK(c["k"] == "2");
    CHECK(c["prime_bound"] == "1000");
    CHECK(c["lo"].get<std::string>().rfind("0.333333", 0) == 0);
    CHECK(c["hi"] == "0.500000000000000000000000000000");
    CHECK(c["width"].get<std::string>().back() == '7');
}

TEST_CASE("identity report JSON lists failures") {
    SweepConfig config;
    config.identity = Identity::menon_general;
    config.f = ArithmeticFunction(one());
    config.k_max = 1;
    config.n_max = 5;
    config.rhs_override.push_back({{1, 4}, Rational(0)});
    const json j = io::to_json(verify_identity_sweep(config));
    CHECK(j["ok"] == false);
    CHECK(j["complete"] == true);
    REQUIRE(j["failures"].size() == 1);
    CHECK(j["failures"][0]["n"] == "4");
    CHECK(j["failures"][0]["lhs"] == "2");
    CHECK(j["instances"].size() == 5);
}

TEST_CASE("error table CSV") {
    const Enclosure c{Rational(1, 4), Rational(1, 2)};
    const auto rows = error_term_monitor(2, {10}, c);
    const auto csv = io::error_table_csv(rows);
    CHECK(csv.rfind(std::string(io::kErrorTableHeader) + "\n10,63,83.333333,166.666667,", 0) == 0);
}
