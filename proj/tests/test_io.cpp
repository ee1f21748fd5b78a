#include <gtest/gtest.h>

#include "dendrimag/io.hpp"
#include "dendrimag/suites.hpp"

using namespace dendrimag;

TEST(OdeInput, NestedAndFlatAgree)
{
    const auto nested = parse_ode_input(Json::parse(R"({"n": 2, "degree": 1, "coeffs": [[[1, 2], [3, 4]], [[0, 1], [0, 0]]]})"));
    const auto flat = parse_ode_input(Json::parse(R"({"n": 2, "degree": 1, "coeffs": [[1, 2, 3, 4], [0, 1, 0, 0]]})"));
    EXPECT_EQ(nested.coeff(0), flat.coeff(0));
    EXPECT_EQ(nested.coeff(1), flat.coeff(1));
    EXPECT_EQ(nested.coeff(0)(1, 0), 3.0);
    // round trip through the writer
    const auto again = parse_ode_input(ode_input_json(test_problem(), 2));
    for (std::size_t k = 0; k <= 2; ++k) EXPECT_EQ(again.coeff(k), test_problem().coeff(k));
}

TEST(OdeInput, ErrorsNameTheField)
{
    auto message = [](const char* text) {
        try {
            parse_ode_input(Json::parse(text));
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message(R"({"degree": 0, "coeffs": [[1]]})").find("'n'"), std::string::npos);
    EXPECT_NE(message(R"({"n": 1, "coeffs": [[1]]})").find("'degree'"), std::string::npos);
    EXPECT_NE(message(R"({"n": 1, "degree": 0})").find("'coeffs'"), std::string::npos);
    EXPECT_NE(message(R"({"n": 1, "degree": 1, "coeffs": [[1]]})").find("'coeffs'"), std::string::npos);
    EXPECT_NE(message(R"({"n": 2, "degree": 0, "coeffs": [[1, 2, "x", 4]]})").find("coeffs[0][2]"), std::string::npos);
    EXPECT_NE(message(R"({"n": 2, "degree": 0, "coeffs": [[[1, 2], [3]]]})").find("coeffs[0][1]"), std::string::npos);
    EXPECT_THROW(read_ode_input("/nonexistent/file.json"), ParseError);
}

TEST(Formatting, Terms)
{
    EXPECT_EQ(format_terms({}), "0");
    EXPECT_EQ(format_terms({{"1", "a"}}), "a");
    EXPECT_EQ(format_terms({{"-1/2", "(a>a)"}}), "-1/2 (a>a)");
    EXPECT_EQ(format_terms({{"1/4", "x"}, {"-1", "y"}, {"2", "z"}}), "1/4 x - y + 2 z");
    const auto omega = magnus_free_raw(2);
    EXPECT_EQ(format_terms(terms_of(omega[2])), "-1/2 (a>a)");
    EXPECT_EQ(format_terms(terms_of(eval_rooted(omega[2]))), "-1/2 a[a]");
}

TEST(Suites, DeterministicUnderSeed)
{
    EXPECT_EQ(suite_tridendriform(5, 3).to_text(), suite_tridendriform(5, 3).to_text());
    EXPECT_TRUE(suite_tridendriform(5, 3).passed());
}

TEST(Suites, RegistryNames)
{
    std::vector<std::string> names;
    for (const auto& e : suite_registry()) names.emplace_back(e.name);
    EXPECT_EQ(names, (std::vector<std::string>{"dendriform", "tridendriform", "magnus", "fer", "rb", "spitzer",
                                               "atkinson", "chi", "reduction"}));
}
