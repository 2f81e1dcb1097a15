#include <doctest.h>

#include <algorithm>
#include <set>

#include "gossip/combinatorics.hpp"
#include "gossip/constructions.hpp"
#include "gossip/fixtures.hpp"

using namespace gossip;

namespace {

int row_weight(const GossipCode& code, int row) {
    int w = 0;
    for (int s : code.matrix[row]) w += s != 0;
    return w;
}

int hamming(const std::vector<int>& a, const std::vector<int>& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

// Every non-zero symbol appears exactly once per column.
bool gossip_columns_ok(const GossipCode& code) {
    for (int j = 0; j < code.length(); ++j) {
        for (int s = 1; s < code.alphabet; ++s) {
            int hits = 0;
            for (int i = 0; i < code.num_codewords; ++i) hits += code.matrix[i][j] == s;
            if (hits != 1) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("the 7x7 reference code comes out byte-exact") {
    const GossipCode code = from_design(fixtures::fano_design());
    CHECK(code.num_codewords == 7);
    CHECK(code.alphabet == 4);
    CHECK(code.collusion == 2);
    CHECK(code.length() == 7);
    CHECK(render_matrix(code) == fixtures::kExample211Matrix);
    CHECK(code.design_backed);
    CHECK(is_shortest(code));

    Design lambda2 = fixtures::fano_design();
    lambda2.lambda = 2;
    CHECK_THROWS_AS(from_design(lambda2), ParameterError);
}

TEST_CASE("code parameter formulas") {
    const CodeParams p = code_params(7, 4, 2);
    CHECK(p.length == 7);
    CHECK(p.weight == 3);
    CHECK(p.distance == 5);

    CHECK(code_params(82, 11, 3).length == 738);
    CHECK(code_params(21, 6, 2).length == 21);
    CHECK(code_params(13, 5, 2).length == 13);

    // measured against the reference matrix
    const GossipCode code = fixtures::example211_code();
    for (int i = 0; i < 7; ++i) CHECK(row_weight(code, i) == p.weight);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) CHECK(hamming(code.matrix[i], code.matrix[j]) == p.distance);

    CHECK_THROWS_AS(code_params(8, 4, 2), ParameterError);  // C(8,2)/C(3,2) is not integral
    CHECK_THROWS_AS(code_params(4, 7, 2), ParameterError);  // q > M
}

TEST_CASE("full key family code") {
    const GossipCode g43 = full_gossip(4, 3);
    CHECK(g43.length() == 6);
    CHECK(g43.collusion == 2);
    CHECK(find_column_permutation(g43, fixtures::example431_code()).has_value());
    CHECK(is_shortest(g43));

    CHECK(full_gossip(5, 3).length() == 10);

    const GossipCode g74 = full_gossip(7, 4);
    CHECK(g74.length() == 35);
    for (int i = 0; i < 7; ++i) CHECK(row_weight(g74, i) == 15); // C(6,2)
    CHECK(gossip_columns_ok(g74));

    CHECK_THROWS_AS(full_gossip(3, 4), ParameterError);
}

TEST_CASE("square all-symbols code") {
    const GossipCode sq5 = square_gossip(5);
    CHECK(sq5.zero_is_tracing);
    CHECK(sq5.collusion == 4);
    CHECK(find_column_permutation(sq5, fixtures::example411_code()).has_value());

    const GossipCode sq4 = square_gossip(4);
    CHECK(find_column_permutation(sq4, fixtures::example511_code()).has_value());

    // every column of a square code carries each of 0..q-1 exactly once
    for (int q : {3, 4, 5}) {
        const GossipCode sq = square_gossip(q);
        for (int j = 0; j < q; ++j) {
            std::set<int> col;
            for (int i = 0; i < q; ++i) col.insert(sq.matrix[i][j]);
            CHECK(static_cast<int>(col.size()) == q);
        }
    }
    CHECK(is_shortest(sq5));
}

TEST_CASE("shortest-length criterion") {
    CHECK(is_shortest(from_design(projective_plane(3))));
    CHECK(is_shortest(from_design(steiner_triple(9))));
    CHECK(is_shortest(fixtures::appendix_code()));
    CHECK(is_shortest(from_design(inversive_plane(3))));

    // duplicated column: same accusation groups twice
    GossipCode dup = fixtures::example211_code();
    dup.column_keys.push_back(dup.column_keys.front());
    for (auto& row : dup.matrix) row.push_back(row.front());
    CHECK_FALSE(is_shortest(dup));
}

TEST_CASE("accusation groups") {
    const GossipCode code = fixtures::example211_code();
    CHECK(accusation_groups(code, 6) ==
          std::vector<std::vector<int>>{{3, 5}, {3, 6}, {5, 6}});
    CHECK(accusation_groups(code, 1) ==
          std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(accusation_groups(square_gossip(5), 2).size() == 5); // C(5,4)

    // first column of the development-order 21x21 code
    const GossipCode app = fixtures::appendix_code();
    const std::vector<std::vector<int>> expected = {{3, 6},  {3, 7},  {3, 12}, {3, 14}, {6, 7},
                                                    {6, 12}, {6, 14}, {7, 12}, {7, 14}, {12, 14}};
    CHECK(accusation_groups(app, 1) == expected);
}

TEST_CASE("embedding checks") {
    const GossipCode small = fixtures::example211_code();
    CHECK(is_embedded(small, small));
    CHECK(is_embedded_sets(small, small));

    const Design fano = fixtures::fano_design();
    const GossipCode big = from_design(embed_sts(fano));
    CHECK(big.num_codewords == 15);
    CHECK(big.length() == 35);
    CHECK(is_embedded(from_design(fano), big));
    CHECK(is_embedded_sets(from_design(fano), big));

    // transitivity along a second doubling
    const GossipCode bigger = from_design(embed_sts(embed_sts(fano)));
    CHECK(is_embedded_sets(big, bigger));
    CHECK(is_embedded_sets(from_design(fano), bigger));
    CHECK(is_embedded(big, bigger));

    // row subset: matrix-prefix variant
    GossipCode six_rows = small;
    six_rows.num_codewords = 6;
    six_rows.matrix.pop_back();
    CHECK(is_embedded(six_rows, small));

    // block subset: set-system variant
    GossipCode six_cols = small;
    six_cols.column_keys.pop_back();
    for (auto& row : six_cols.matrix) row.pop_back();
    CHECK(is_embedded_sets(six_cols, small));

    GossipCode other_alphabet = square_gossip(5);
    CHECK_THROWS_AS(is_embedded(small, other_alphabet), ParameterError);
}

TEST_CASE("code file round trip") {
    const GossipCode code = fixtures::example211_code();
    const GossipCode back = load_code_text(save_code_text(code));
    CHECK(back.matrix == code.matrix);
    CHECK(back.column_keys == code.column_keys);
    CHECK_FALSE(back.zero_is_tracing);

    const GossipCode sq = square_gossip(4);
    const GossipCode sq_back = load_code_text(save_code_text(sq));
    CHECK(sq_back.zero_is_tracing);
    CHECK(sq_back.matrix == sq.matrix);

    CHECK_THROWS_AS(load_code_text("2 3 1 1\n5\n0\n"), ParseError); // symbol >= q
    CHECK_THROWS_AS(load_code_text("2 3 1 1\n1\n1\n"), ParseError); // symbol repeated in a column

    // the 10-column fragment loads with its dimensions inferred from the header
    const GossipCode frag = load_code_text(std::string("21 6 2 10\n") + fixtures::kAppendixMatrix10);
    CHECK(frag.num_codewords == 21);
    CHECK(frag.alphabet == 6);
    CHECK(frag.length() == 10);
}

TEST_CASE("canonical and development assignments agree up to symbol renaming") {
    const Design cyc = cyclic_design({3, 6, 7, 12, 14}, 21);
    const GossipCode canonical = from_design(cyc); // ascending rows within each key
    const GossipCode development = fixtures::appendix_code();

    CHECK(equal_up_to_symbol_permutation(canonical, development));
    for (int j = 0; j < 21; ++j) CHECK(canonical.key_support(j) == development.key_support(j));

    // keys only wrap past column 8, so the first 8 columns agree byte for byte
    for (int i = 0; i < 21; ++i)
        for (int j = 0; j < 8; ++j) CHECK(canonical.matrix[i][j] == development.matrix[i][j]);
    CHECK(canonical.matrix != development.matrix);
}

TEST_CASE("row weights and distances follow the design counts") {
    for (const Design& d : {projective_plane(2), projective_plane(3), steiner_triple(9)}) {
        const GossipCode code = from_design(d);
        const long long w = lambda_s(d, 1);
        const long long dist = code.length() - lambda_bar_s(d, 2);
        for (int i = 0; i < code.num_codewords; ++i) CHECK(row_weight(code, i) == w);
        for (int i = 0; i < code.num_codewords; ++i)
            for (int j = i + 1; j < code.num_codewords; ++j)
                CHECK(hamming(code.matrix[i], code.matrix[j]) == dist);
        CHECK(gossip_columns_ok(code));
    }
}
