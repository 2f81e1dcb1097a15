#include "gossip/repro.hpp"

#include <algorithm>
#include <sstream>

#include "gossip/combinatorics.hpp"
#include "gossip/fixtures.hpp"
#include "gossip/tracing.hpp"

namespace gossip {

namespace {

std::string render_set(const std::vector<int>& xs) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
    out << '}';
    return out.str();
}

// "{i, j} -> (e, e, 0, ...)" lines for every coalition of size c, in
// lexicographic order, under the only-erasures strategy.
std::string render_erasure_table(const GossipCode& code, int c) {
    std::ostringstream out;
    std::vector<Coalition> coalitions;
    for_each_combination(code.num_codewords, c, [&](const Coalition& W) { coalitions.push_back(W); });
    for (const auto& W : coalitions) {
        const PirateWord word = make_pirate_word(code, W, Strategy::OnlyErasures, 0);
        out << render_set(W) << " -> " << word_tuple(word) << '\n';
    }
    return out.str();
}

std::string render_scheme_keys(const TraceabilityScheme& ts) {
    std::ostringstream out;
    for (int i = 1; i <= ts.users; ++i) out << "P(" << i << ") = " << render_set(ts.private_keys[i - 1]) << '\n';
    return out.str();
}

std::string render_first_columns(const GossipCode& code, int cols) {
    std::ostringstream out;
    for (const auto& row : code.matrix) {
        for (int j = 0; j < cols; ++j) out << (j ? " " : "") << row[j];
        out << '\n';
    }
    return out.str();
}

ReproResult byte_compare(std::string target, std::string expected, std::string actual, std::string what) {
    ReproResult r;
    r.target = std::move(target);
    r.expected = std::move(expected);
    r.actual = std::move(actual);
    r.ok = r.expected == r.actual;
    r.detail = what + (r.ok ? ": byte-exact match" : ": MISMATCH");
    return r;
}

ReproResult permutation_compare(std::string target, const GossipCode& fixture, const GossipCode& built,
                                std::string what) {
    ReproResult r;
    r.target = std::move(target);
    r.expected = render_matrix(fixture);
    r.actual = render_matrix(built);
    r.ok = find_column_permutation(built, fixture).has_value();
    r.detail = what + (r.ok ? ": match up to column permutation" : ": MISMATCH (no column bijection)");
    return r;
}

ReproResult repro_sec511() {
    const ConcatenatedCode cc = fixtures::example512_ccode();
    std::ostringstream out;
    for (int n = 1; n <= 2; ++n) {
        const char* text = n == 1 ? fixtures::kSec511Word1 : fixtures::kSec511Word2;
        const PirateWord word = load_word_text(text, cc.inner.alphabet);
        auto [outer_word, segs] = segment_and_decode(cc, word);
        out << "word" << n << " outer: " << word_tuple(outer_word) << '\n';
        if (n == 2) {
            std::vector<int> cands = segs[0].candidates;
            out << "word" << n << " segment 1 candidates: " << render_set(cands) << '\n';
        }
        const TraceReport rep = concat_trace(cc, word);
        out << "word" << n << " accused: " << render_set(rep.accused) << " via stage " << rep.stage << '\n';
    }
    // Reorder: the expected fixture lists word1's lines before word2's.
    std::string actual = out.str();
    return byte_compare("sec511", fixtures::kSec511Expected, actual, "two-stage tracing outcomes");
}

} // namespace

std::vector<std::string> repro_targets() {
    return {"example211", "table1",     "table2",     "table3",    "appendix-matrix",
            "sec511",     "example431", "example411", "example511"};
}

ReproResult repro(const std::string& target) {
    if (target == "example211") {
        const GossipCode code = from_design(fixtures::fano_design());
        return byte_compare(target, fixtures::kExample211Matrix, render_matrix(code), "7x7 reference code");
    }
    if (target == "table1") {
        const GossipCode fixture = fixtures::example431_code();
        GossipCode built = full_gossip(4, 3);
        auto sigma = find_column_permutation(fixture, built);
        if (!sigma) {
            ReproResult r;
            r.target = target;
            r.detail = "full_gossip(4,3) is not column-equivalent to the reference code";
            r.expected = render_matrix(fixture);
            r.actual = render_matrix(built);
            return r;
        }
        built = permute_columns(built, *sigma); // adopt the published column order
        return byte_compare(target, fixtures::kTable1, render_erasure_table(built, 2),
                            "6 only-erasures fingerprints");
    }
    if (target == "table2") {
        const GossipCode code = from_design(fixtures::fano_design());
        return byte_compare(target, fixtures::kTable2, render_erasure_table(code, 2),
                            "21 only-erasures fingerprints");
    }
    if (target == "table3") {
        return byte_compare(target, fixtures::kTable3, render_scheme_keys(fixtures::appendix_scheme()),
                            "21 cyclic private keys");
    }
    if (target == "appendix-matrix") {
        const GossipCode code = fixtures::appendix_code();
        ReproResult r = byte_compare(target, fixtures::kAppendixMatrix10, render_first_columns(code, 10),
                                     "first 10 code columns (development order)");
        if (r.ok) {
            // Column keys must also equal the published private keys, all 21.
            const TraceabilityScheme ts = fixtures::appendix_scheme();
            if (code.column_keys != ts.private_keys) {
                r.ok = false;
                r.detail = "column keys do not match the published private keys";
            }
        }
        return r;
    }
    if (target == "sec511") return repro_sec511();
    if (target == "example431")
        return permutation_compare(target, fixtures::example431_code(), full_gossip(4, 3), "2-Gossip(6,4,3)");
    if (target == "example411")
        return permutation_compare(target, fixtures::example411_code(), square_gossip(5), "4-Gossip(5,5,5)");
    if (target == "example511")
        return permutation_compare(target, fixtures::example511_code(), square_gossip(4), "3-Gossip(4,4,4)");
    throw ParameterError("unknown repro target `" + target + "`");
}

std::string unified_diff(const std::string& expected, const std::string& actual) {
    auto split = [](const std::string& s) {
        std::vector<std::string> lines;
        std::istringstream in(s);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
        return lines;
    };
    const auto exp = split(expected), act = split(actual);
    std::ostringstream out;
    out << "--- expected\n+++ actual\n";
    const std::size_t n = std::max(exp.size(), act.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::string* e = i < exp.size() ? &exp[i] : nullptr;
        const std::string* a = i < act.size() ? &act[i] : nullptr;
        if (e && a && *e == *a) {
            out << ' ' << *e << '\n';
        } else {
            if (e) out << '-' << *e << '\n';
            if (a) out << '+' << *a << '\n';
        }
    }
    return out.str();
}

} // namespace gossip
