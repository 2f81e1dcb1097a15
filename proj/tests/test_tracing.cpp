#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gossip/combinatorics.hpp"
#include "gossip/constructions.hpp"
#include "gossip/fixtures.hpp"
#include "gossip/tracing.hpp"

using namespace gossip;

namespace {

PirateWord word_of(const std::string& text, int alphabet = 4) { return load_word_text(text, alphabet); }

// All coalitions of the given size, in lexicographic order.
std::vector<Coalition> all_coalitions(int M, int size) {
    std::vector<Coalition> out;
    for_each_combination(M, size, [&](const Coalition& W) { out.push_back(W); });
    return out;
}

} // namespace

TEST_CASE("detected positions") {
    const GossipCode code = fixtures::example211_code();
    CHECK(detected_positions(code, {1, 2}) == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(detected_positions(code, {3}).empty());

    const auto det34 = detected_positions(code, {3, 4});
    std::vector<int> undet;
    for (int j = 1; j <= code.length(); ++j)
        if (!std::count(det34.begin(), det34.end(), j)) undet.push_back(j);
    CHECK(undet == std::vector<int>{3, 5});
}

TEST_CASE("pirate word generation") {
    const GossipCode code = fixtures::example211_code();
    CHECK(word_to_string(make_pirate_word(code, {1, 2}, Strategy::OnlyErasures, 0)) == "e e e e e 0 0");

    const GossipCode g431 = fixtures::example431_code();
    CHECK(word_to_string(make_pirate_word(g431, {3, 4}, Strategy::OnlyErasures, 0)) == "0 e e e e e");

    // a singleton cannot alter anything
    for (int i = 1; i <= 7; ++i) {
        const PirateWord w = make_pirate_word(code, {i}, Strategy::SelectiveErasures, 99);
        CHECK(w.symbols == code.matrix[i - 1]);
    }

    // determinism and the marking assumption
    for (std::uint64_t seed : {1ull, 2ull, 77ull}) {
        const PirateWord a = make_pirate_word(code, {2, 5}, Strategy::SelectiveErasures, seed);
        const PirateWord b = make_pirate_word(code, {2, 5}, Strategy::SelectiveErasures, seed);
        CHECK(a.symbols == b.symbols);
        for (int j = 0; j < code.length(); ++j) {
            if (a.symbols[j] == ERASURE) continue;
            CHECK((a.symbols[j] == code.matrix[1][j] || a.symbols[j] == code.matrix[4][j]));
        }
    }

    CHECK_THROWS_AS(make_pirate_word(code, {1, 2, 3}, Strategy::OnlyErasures, 0), ModelError);
    const PirateWord big = make_pirate_word(code, {1, 2, 3}, Strategy::OnlyErasures, 0, {}, true);
    CHECK(big.out_of_model);

    // first-member policy reproduces the first member's symbols at detected marks
    const PirateWord fm = make_pirate_word(code, {1, 2}, Strategy::NoErasures, 0,
                                           {ChoicePolicy::FirstMember, nullptr});
    CHECK(fm.symbols == code.matrix[0]);

    // adversarial callback: always the largest feasible symbol
    const ChoicePolicy adv{ChoicePolicy::Callback,
                           [](int, const std::vector<int>& feasible) { return feasible.back(); }};
    const PirateWord aw = make_pirate_word(code, {1, 2}, Strategy::NoErasures, 0, adv);
    CHECK(aw.symbols == std::vector<int>{2, 1, 1, 1, 1, 0, 0});

    const ChoicePolicy bad{ChoicePolicy::Callback, [](int, const std::vector<int>&) { return 3; }};
    CHECK_THROWS_AS(make_pirate_word(code, {1, 2}, Strategy::NoErasures, 0, bad), ModelError);
}

TEST_CASE("descendant membership") {
    const GossipCode code = fixtures::example211_code();
    const PirateWord x = word_of("2 0 0 0 0 0 0");
    CHECK(is_descendant(code, {1, 2}, x));
    CHECK(is_descendant(code, {2, 3}, x));
    CHECK_FALSE(is_descendant(code, {1, 3}, x));
    CHECK_FALSE(is_descendant(code, {2}, x)); // w2 has 1s at positions 4 and 5

    for (int i = 1; i <= 7; ++i) {
        PirateWord own;
        own.symbols = code.matrix[i - 1];
        CHECK(is_descendant(code, {i}, own));
    }

    // erasure at an undetected position is infeasible
    PirateWord bad = make_pirate_word(code, {1, 2}, Strategy::OnlyErasures, 0);
    bad.symbols[5] = ERASURE; // position 6 is undetected for {1,2}
    CHECK_FALSE(is_descendant(code, {1, 2}, bad));
}

TEST_CASE("non-zero symbol tracing") {
    const GossipCode code = fixtures::example211_code();
    CHECK(trace_nonzero(code, word_of("2 0 0 0 0 0 0")).accused == std::vector<int>{2});
    CHECK(trace_nonzero(code, word_of("e 1 e 0 e 0 0")).accused == std::vector<int>{1});

    PirateWord w3;
    w3.symbols = code.matrix[2];
    CHECK(trace_nonzero(code, w3).accused == std::vector<int>{3});

    const TraceReport none = trace_nonzero(code, word_of("e e e e e 0 0"));
    CHECK(none.untraceable);
    CHECK(none.accused.empty());

    // corrupt code: symbol 1 appears twice in the first column
    GossipCode broken = code;
    broken.matrix[1][0] = 1;
    CHECK_THROWS_AS(trace_nonzero(broken, word_of("1 0 0 0 0 0 0")), IntegrityError);

    // on a square code the zero symbol traces too
    const GossipCode sq = square_gossip(5);
    PirateWord zeros;
    zeros.symbols = {0, ERASURE, ERASURE, ERASURE, ERASURE};
    const TraceReport rep = trace_nonzero(sq, zeros);
    CHECK(rep.accused == std::vector<int>{1}); // row 1 holds 0 in column 1
}

TEST_CASE("zero-pattern tracing") {
    const GossipCode code = fixtures::example211_code();
    CHECK(trace_only_erasures(code, word_of("e e e e e 0 0")).accused == std::vector<int>{1, 2});

    const GossipCode g431 = fixtures::example431_code();
    CHECK(trace_only_erasures(g431, load_word_text("0 e e e e e", 3)).accused == std::vector<int>{3, 4});

    const GossipCode sq = square_gossip(5);
    PirateWord all_e;
    all_e.symbols.assign(5, ERASURE);
    const TraceReport rep = trace_only_erasures(sq, all_e);
    CHECK(rep.untraceable);
    CHECK(rep.accused.empty());

    // exact recovery across the whole coalition table
    for (const auto& W : all_coalitions(7, 2)) {
        const PirateWord w = make_pirate_word(code, W, Strategy::OnlyErasures, 0);
        CHECK(trace_only_erasures(code, w).accused == W);
    }
}

TEST_CASE("brute-force coalition oracle") {
    const GossipCode code = fixtures::example211_code();

    const TraceReport uniq = brute_force_trace(code, word_of("e e e e e 0 0"), 2);
    CHECK(uniq.coalitions == std::vector<Coalition>{{1, 2}});

    const TraceReport multi = brute_force_trace(code, word_of("2 0 0 0 0 0 0"), 2);
    CHECK(multi.coalitions == std::vector<Coalition>{{1, 2}, {2, 3}});
    CHECK(multi.accused == std::vector<int>{1, 2, 3});

    PirateWord own;
    own.symbols = code.matrix[4];
    const TraceReport self = brute_force_trace(code, own, 2);
    CHECK(std::count(self.coalitions.begin(), self.coalitions.end(), Coalition{5}) == 1);

    CHECK_THROWS_AS(brute_force_trace(code, own, 2, 5), ResourceError);
}

TEST_CASE("only-erasures words are unique per coalition") {
    const GossipCode code = fixtures::example211_code();
    std::set<std::vector<int>> words;
    for (const auto& W : all_coalitions(7, 2))
        words.insert(make_pirate_word(code, W, Strategy::OnlyErasures, 0).symbols);
    CHECK(words.size() == 21);
}

TEST_CASE("undetectable position counts") {
    const GossipCode code = from_design(fixtures::fano_design());
    CHECK(undetectable_count(code, 2) == 2);
    CHECK(undetectable_count(code, 1) == 4); // l - lambda_1 = 7 - 3

    const GossipCode app = fixtures::appendix_code();
    CHECK(undetectable_count(app, 2) == 12);
    CHECK(undetectable_count_checked(app, {1, 2}) == 12);

    for (const auto& W : all_coalitions(7, 2)) CHECK(undetectable_count_checked(code, W) == 2);

    GossipCode anonymous = load_code_text(save_code_text(code));
    CHECK_FALSE(anonymous.design_backed);
    CHECK_THROWS_AS(undetectable_count(anonymous, 2), ParameterError);
}

TEST_CASE("accusation soundness under every strategy") {
    const std::vector<GossipCode> codes = {fixtures::example211_code(), fixtures::appendix_code(),
                                           square_gossip(5), full_gossip(5, 3)};
    for (const auto& code : codes) {
        for (Strategy st : {Strategy::NoErasures, Strategy::SelectiveErasures, Strategy::OnlyErasures}) {
            for (std::uint64_t seed = 0; seed < 200; ++seed) {
                // seeded coalition of size 1..c
                std::mt19937_64 rng(seed * 7919 + 13);
                const int size = 1 + static_cast<int>(rng() % code.collusion);
                Coalition W;
                while (static_cast<int>(W.size()) < size) {
                    int u = 1 + static_cast<int>(rng() % code.num_codewords);
                    if (!std::count(W.begin(), W.end(), u)) W.push_back(u);
                }
                std::sort(W.begin(), W.end());

                const PirateWord word = make_pirate_word(code, W, st, seed);
                CHECK(is_descendant(code, W, word));
                const TraceReport rep = trace_nonzero(code, word);
                for (int u : rep.accused) CHECK(std::count(W.begin(), W.end(), u) == 1);
                if (st == Strategy::OnlyErasures) {
                    const auto zp = trace_only_erasures(code, word);
                    if (!zp.untraceable) {
                        for (int u : W) CHECK(std::count(zp.accused.begin(), zp.accused.end(), u) == 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("square code attributions cover the active members") {
    const GossipCode sq = square_gossip(5);
    const Coalition W{1, 3, 5};
    const PirateWord word = make_pirate_word(sq, W, Strategy::NoErasures, 42);
    const TraceReport rep = trace_nonzero(sq, word);
    CHECK_FALSE(rep.accused.empty());
    for (int u : rep.accused) CHECK(std::count(W.begin(), W.end(), u) == 1);
    // every position is attributed, and to a member holding that symbol there
    CHECK(rep.attributions.size() == static_cast<std::size_t>(sq.length()));
    for (const auto& [pos, user] : rep.attributions) CHECK(sq.matrix[user - 1][pos - 1] == word.symbols[pos - 1]);
}

TEST_CASE("pirate word files") {
    const PirateWord w = load_word_text("e 1 e 0 e 0 0", 4);
    CHECK(w.length() == 7);
    CHECK(w.symbols[0] == ERASURE);
    CHECK(w.symbols[1] == 1);
    CHECK(word_to_string(w) == "e 1 e 0 e 0 0");
    CHECK(word_tuple(w) == "(e, 1, e, 0, e, 0, 0)");

    CHECK_THROWS_AS(load_word_text("0 x 1", 4), ParseError);
    CHECK_THROWS_AS(load_word_text("0 9 1", 4), ParseError);
    CHECK_THROWS_AS(load_word_text("", 4), ParseError);
}
