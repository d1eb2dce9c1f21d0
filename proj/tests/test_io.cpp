#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "hm/constructions.hpp"
#include "hm/io.hpp"

TEST_CASE("reads the h3 format with comments and blank lines") {
    std::istringstream in(
        "# a comment\n"
        "\n"
        "5 2\n"
        "3 2 1\n"
        "  \n"
        "# another comment\n"
        "2 4 5\n");
    const hm::H3File file = hm::read_h3(in);
    REQUIRE(file.n == 5);
    REQUIRE(file.triples.size() == 2);
    const hm::Hypergraph3 h = file.graph();
    REQUIRE(h.edge_count() == 2);
    REQUIRE(h.edges()[0] == hm::Triple{1, 2, 3});
}

TEST_CASE("writer output is canonical and bit-exact") {
    const hm::Hypergraph3 h(4, {hm::Triple{4, 2, 1}, hm::Triple{1, 2, 3}});
    REQUIRE(hm::to_h3_string(h) == "4 2\n1 2 3\n1 2 4\n");

    std::ostringstream with_cert;
    hm::write_h3(with_cert, h, std::vector<int>{3, 4});
    REQUIRE(with_cert.str() == "4 2\n1 2 3\n1 2 4\n# T: 3 4\n");
}

TEST_CASE("round trip preserves the graph and the certificate line") {
    const auto [h, cert] = hm::build_extremal({.ell = 2, .n = 9, .s = 3});
    std::ostringstream out;
    hm::write_h3(out, h, cert.T.to_vector());

    std::istringstream in(out.str());
    const hm::H3File file = hm::read_h3(in);
    REQUIRE(file.graph().edges() == h.edges());
    REQUIRE(file.t_line == cert.T.to_vector());

    // writing the reread graph reproduces the bytes
    std::ostringstream again;
    hm::write_h3(again, file.graph(), file.t_line);
    REQUIRE(again.str() == out.str());
}

TEST_CASE("parse errors carry line positions") {
    std::istringstream missing("3 2\n1 2 3\n");
    REQUIRE_THROWS_WITH(hm::read_h3(missing), Catch::Matchers::ContainsSubstring("expected 2"));

    std::istringstream garbage("3 1\n1 two 3\n");
    REQUIRE_THROWS_WITH(hm::read_h3(garbage), Catch::Matchers::ContainsSubstring("line 2"));

    std::istringstream empty("");
    REQUIRE_THROWS(hm::read_h3(empty));

    std::istringstream out_of_range("3 1\n1 2 9\n");
    REQUIRE_THROWS_AS(hm::read_h3(out_of_range).graph(), std::out_of_range);

    std::istringstream surplus("3 1\n1 2 3\n1 2 3\n");
    REQUIRE_THROWS_WITH(hm::read_h3(surplus), Catch::Matchers::ContainsSubstring("more edges"));
}
