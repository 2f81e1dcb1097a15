#include <doctest.h>

#include <algorithm>
#include <random>

#include "gossip/combinatorics.hpp"
#include "gossip/constructions.hpp"
#include "gossip/design.hpp"
#include "gossip/fixtures.hpp"

using namespace gossip;

namespace {

// Independent oracle: count blocks containing a given subset with plain loops.
long long count_blocks_containing(const Design& d, const std::vector<int>& subset) {
    long long n = 0;
    for (const auto& b : d.blocks) {
        bool all = true;
        for (int p : subset) {
            bool found = false;
            for (int x : b)
                if (x == p) found = true;
            if (!found) { all = false; break; }
        }
        if (all) ++n;
    }
    return n;
}

long long count_blocks_disjoint(const Design& d, const std::vector<int>& subset) {
    long long n = 0;
    for (const auto& b : d.blocks) {
        bool disjoint = true;
        for (int p : subset)
            for (int x : b)
                if (x == p) disjoint = false;
        if (disjoint) ++n;
    }
    return n;
}

// Exhaustive pair coverage check, independent of verify_design.
bool pairs_covered_once(const Design& d) {
    for (int a = 1; a <= d.v; ++a)
        for (int b = a + 1; b <= d.v; ++b)
            if (count_blocks_containing(d, {a, b}) != d.lambda) return false;
    return true;
}

bool triples_covered_once(const Design& d) {
    for (int a = 1; a <= d.v; ++a)
        for (int b = a + 1; b <= d.v; ++b)
            for (int c = b + 1; c <= d.v; ++c)
                if (count_blocks_containing(d, {a, b, c}) != d.lambda) return false;
    return true;
}

} // namespace

TEST_CASE("combinatorics basics") {
    CHECK(binomial(7, 2) == 21);
    CHECK(binomial(21, 2) == 210);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(82, 3) == 88560);
    CHECK_THROWS_AS(binomial(512, 200), ResourceError);
    CHECK(exact_div(210, 10, "l") == 21);
    CHECK_THROWS_AS(exact_div(211, 10, "l"), ConsistencyError);

    int count = 0;
    std::vector<int> first, last;
    for_each_combination(5, 3, [&](const std::vector<int>& c) {
        if (count == 0) first = c;
        last = c;
        ++count;
    });
    CHECK(count == 10);
    CHECK(first == std::vector<int>{1, 2, 3});
    CHECK(last == std::vector<int>{3, 4, 5});

    CHECK(floor_sqrt_ratio(4, 1) == 2);
    CHECK(floor_sqrt_ratio(2, 1) == 1);
    CHECK(floor_sqrt_ratio(9, 2) == 2);
}

TEST_CASE("verify_design accepts the 7-point reference triple system") {
    const Design fano = fixtures::fano_design();
    const auto rep = verify_design(fano);
    CHECK(rep.valid);
    CHECK(rep.structural_ok);
    CHECK(rep.block_count == 7);
    CHECK(rep.forced_b == 7);
    CHECK(pairs_covered_once(fano));
}

TEST_CASE("verify_design finds the first uncovered pair when a block is removed") {
    Design fano = fixtures::fano_design();
    fano.blocks.pop_back(); // drop {3,4,7}
    const auto rep = verify_design(fano);
    CHECK_FALSE(rep.valid);
    CHECK(rep.structural_ok);
    REQUIRE(rep.witness.has_value());
    CHECK(*rep.witness == std::vector<int>{3, 4});
    CHECK(rep.witness_count == 0);
}

TEST_CASE("verify_design reports structural problems separately") {
    Design d = fixtures::fano_design();
    d.blocks[2] = {1, 1, 6};
    const auto rep = verify_design(d);
    CHECK_FALSE(rep.valid);
    CHECK_FALSE(rep.structural_ok);
    CHECK(rep.error.find("duplicate") != std::string::npos);

    Design out_of_range = fixtures::fano_design();
    out_of_range.blocks[0] = {1, 2, 9};
    CHECK_FALSE(verify_design(out_of_range).structural_ok);

    Design big;
    big.t = 2;
    big.v = 1000;
    big.k = 3;
    big.lambda = 1;
    big.blocks = {{1, 2, 3}};
    CHECK_THROWS_AS(verify_design(big), ResourceError);
}

TEST_CASE("projective plane construction") {
    CHECK_THROWS_AS(projective_plane(4), ParameterError);
    CHECK_THROWS_AS(projective_plane(101), ResourceError);

    const Design p2 = projective_plane(2);
    CHECK(p2.v == 7);
    CHECK(p2.block_count() == 7);
    CHECK(p2.k == 3);
    CHECK(pairs_covered_once(p2));

    const Design p3 = projective_plane(3);
    CHECK(p3.v == 13);
    CHECK(p3.block_count() == 13);
    CHECK(p3.k == 4);
    CHECK(pairs_covered_once(p3));
    CHECK(verify_design(p3).valid);

    const Design p5 = projective_plane(5);
    CHECK(p5.v == 31);
    CHECK(p5.block_count() == 31);
    CHECK(p5.k == 6);
    CHECK(verify_design(p5).valid);
}

TEST_CASE("steiner triple systems via Bose and Skolem") {
    CHECK_THROWS_AS(steiner_triple(8), ParameterError);
    CHECK_THROWS_AS(steiner_triple(5), ParameterError);

    const Design s7 = steiner_triple(7);
    CHECK(s7.block_count() == 7);
    CHECK(pairs_covered_once(s7));

    const Design s9 = steiner_triple(9);
    CHECK(s9.block_count() == 12);
    CHECK(pairs_covered_once(s9));

    const Design s13 = steiner_triple(13);
    CHECK(s13.block_count() == 26);
    CHECK(pairs_covered_once(s13));

    CHECK(verify_design(steiner_triple(15)).valid);
    CHECK(verify_design(steiner_triple(19)).valid);
}

TEST_CASE("cyclic development") {
    const Design appendix = cyclic_design({3, 6, 7, 12, 14}, 21);
    CHECK(appendix.block_count() == 21);
    CHECK(verify_design(appendix).valid);
    // shift structure: block i+1 is block i shifted by +1 mod v
    for (int i = 0; i + 1 < 21; ++i) {
        std::vector<int> shifted;
        for (int p : appendix.dev_blocks[i]) shifted.push_back(p % 21 + 1);
        CHECK(shifted == appendix.dev_blocks[i + 1]);
    }
    CHECK(appendix.dev_blocks[8] == std::vector<int>{11, 14, 15, 20, 1});

    const Design singer = cyclic_design({1, 2, 4}, 7);
    CHECK(verify_design(singer).valid);

    const Design bad = cyclic_design({1, 2, 3}, 7);
    const auto rep = verify_design(bad);
    CHECK_FALSE(rep.valid);
    REQUIRE(rep.witness.has_value());
    CHECK(*rep.witness == std::vector<int>{1, 2});
    CHECK(rep.witness_count == 2);

    CHECK_THROWS_AS(cyclic_design({0, 2}, 7), StructuralError);
    CHECK_THROWS_AS(cyclic_design({2, 2}, 7), StructuralError);
}

TEST_CASE("inversive planes") {
    CHECK_THROWS_AS(inversive_plane(6), ParameterError);

    const Design i2 = inversive_plane(2);
    CHECK(i2.v == 5);
    CHECK(i2.k == 3);
    CHECK(i2.block_count() == 10); // all 3-subsets of 5 points
    CHECK(triples_covered_once(i2));

    const Design i3 = inversive_plane(3);
    CHECK(i3.v == 10);
    CHECK(i3.k == 4);
    CHECK(i3.block_count() == 30);
    CHECK(triples_covered_once(i3));
    CHECK(verify_design(i3).valid);
}

TEST_CASE("block counting functions") {
    const Design fano = fixtures::fano_design();
    CHECK(lambda_s(fano, 1) == 3);
    CHECK(lambda_s(fano, 0) == 7);
    CHECK(lambda_s(fano, 2) == 1);
    CHECK(lambda_bar_s(fano, 2) == 2);
    CHECK(lambda_bar_s(fano, 0) == 7);
    CHECK_THROWS_AS(lambda_s(fano, 3), ParameterError);

    const Design appendix = cyclic_design({3, 6, 7, 12, 14}, 21);
    CHECK(lambda_s(appendix, 1) == 5);
    CHECK(lambda_bar_s(appendix, 2) == 12);
    CHECK(count_blocks_containing(appendix, {1}) == 5);
    CHECK(count_blocks_disjoint(appendix, {1, 2}) == 12);
    CHECK(lambda_s_checked(appendix, {1}) == 5);
    CHECK(lambda_bar_s_checked(appendix, {1, 2}) == 12);
}

TEST_CASE("formula counts match direct counts on every construction") {
    std::mt19937_64 rng(7);
    const std::vector<Design> designs = {fixtures::fano_design(), projective_plane(3), steiner_triple(9),
                                         steiner_triple(13),      inversive_plane(3),  cyclic_design({3, 6, 7, 12, 14}, 21)};
    for (const auto& d : designs) {
        CHECK(static_cast<long long>(d.block_count()) * d.k == static_cast<long long>(d.v) * lambda_s(d, 1));
        for (int s = 0; s <= d.t; ++s) {
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<int> subset;
                while (static_cast<int>(subset.size()) < s) {
                    int p = static_cast<int>(rng() % d.v) + 1;
                    if (std::find(subset.begin(), subset.end(), p) == subset.end()) subset.push_back(p);
                }
                std::sort(subset.begin(), subset.end());
                CHECK(count_blocks_containing(d, subset) == lambda_s(d, s));
                CHECK(count_blocks_disjoint(d, subset) == lambda_bar_s(d, s));
            }
        }
    }
}

TEST_CASE("design file round trip and parse errors") {
    const Design fano = fixtures::fano_design();
    const Design back = load_design_text(save_design_text(fano));
    CHECK(back.blocks == fano.blocks);
    CHECK(back.t == fano.t);

    // block with the wrong point count names the offending line
    const std::string bad =
        "2 7 3 1 7\n1 2 3\n1 4 5\n1 6\n2 4 6\n2 5 7\n3 5 6\n3 4 7\n";
    try {
        load_design_text(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }

    // the hand-written 2-(13,4,1) file loads, verifies and matches the construction
    const Design plane = load_design_text(fixtures::kPlane13Design);
    CHECK(plane.v == 13);
    CHECK(plane.blocks == projective_plane(3).blocks);

    // an invalid design is rejected unless verification is skipped
    const std::string not_a_design = "2 7 3 1 2\n1 2 3\n1 2 4\n";
    CHECK_THROWS_AS(load_design_text(not_a_design), ConsistencyError);
    CHECK(load_design_text(not_a_design, /*verify=*/false).block_count() == 2);
}

TEST_CASE("doubling an STS keeps the original blocks as a prefix") {
    const Design fano = fixtures::fano_design();
    const Design big = embed_sts(fano);
    CHECK(big.v == 15);
    CHECK(big.block_count() == 35);
    CHECK(std::equal(fano.blocks.begin(), fano.blocks.end(), big.blocks.begin()));
    CHECK(pairs_covered_once(big));

    const Design s9 = steiner_triple(9);
    const Design big9 = embed_sts(s9);
    CHECK(big9.v == 19);
    CHECK(big9.block_count() == 57);
    CHECK(std::equal(s9.blocks.begin(), s9.blocks.end(), big9.blocks.begin()));
    CHECK(verify_design(big9).valid);

    Design not_sts = fano;
    not_sts.blocks.pop_back();
    CHECK_THROWS_AS(embed_sts(not_sts), ParameterError);
}
