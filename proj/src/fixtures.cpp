#include "gossip/fixtures.hpp"

#include "gossip/constructions.hpp"

namespace gossip::fixtures {

const char* kFanoDesign =
    "2 7 3 1 7\n"
    "1 2 3\n"
    "1 4 5\n"
    "1 6 7\n"
    "2 4 6\n"
    "2 5 7\n"
    "3 5 6\n"
    "3 4 7\n";

const char* kExample211Matrix =
    "1 1 1 0 0 0 0\n"
    "2 0 0 1 1 0 0\n"
    "3 0 0 0 0 1 1\n"
    "0 2 0 2 0 0 2\n"
    "0 3 0 0 2 2 0\n"
    "0 0 2 3 0 3 0\n"
    "0 0 3 0 3 0 3\n";

const char* kExample431Matrix =
    "1 1 0 0 1 0\n"
    "2 0 1 1 0 0\n"
    "0 2 2 0 0 1\n"
    "0 0 0 2 2 2\n";

const char* kExample411Matrix =
    "0 1 1 1 1\n"
    "1 2 2 2 0\n"
    "2 3 3 0 2\n"
    "3 0 4 3 3\n"
    "4 4 0 4 4\n";

const char* kExample511Matrix =
    "1 1 1 0\n"
    "2 2 0 1\n"
    "3 0 2 2\n"
    "0 3 3 3\n";

const char* kTable1 =
    "{1, 2} -> (e, e, e, e, e, 0)\n"
    "{1, 3} -> (e, e, e, 0, e, e)\n"
    "{1, 4} -> (e, e, 0, e, e, e)\n"
    "{2, 3} -> (e, e, e, e, 0, e)\n"
    "{2, 4} -> (e, 0, e, e, e, e)\n"
    "{3, 4} -> (0, e, e, e, e, e)\n";

const char* kTable2 =
    "{1, 2} -> (e, e, e, e, e, 0, 0)\n"
    "{1, 3} -> (e, e, e, 0, 0, e, e)\n"
    "{1, 4} -> (e, e, e, e, 0, 0, e)\n"
    "{1, 5} -> (e, e, e, 0, e, e, 0)\n"
    "{1, 6} -> (e, e, e, e, 0, e, 0)\n"
    "{1, 7} -> (e, e, e, 0, e, 0, e)\n"
    "{2, 3} -> (e, 0, 0, e, e, e, e)\n"
    "{2, 4} -> (e, e, 0, e, e, 0, e)\n"
    "{2, 5} -> (e, e, 0, e, e, e, 0)\n"
    "{2, 6} -> (e, 0, e, e, e, e, 0)\n"
    "{2, 7} -> (e, 0, e, e, e, 0, e)\n"
    "{3, 4} -> (e, e, 0, e, 0, e, e)\n"
    "{3, 5} -> (e, e, 0, 0, e, e, e)\n"
    "{3, 6} -> (e, 0, e, e, 0, e, e)\n"
    "{3, 7} -> (e, 0, e, 0, e, e, e)\n"
    "{4, 5} -> (0, e, 0, e, e, e, e)\n"
    "{4, 6} -> (0, e, e, e, 0, e, e)\n"
    "{4, 7} -> (0, e, e, e, e, 0, e)\n"
    "{5, 6} -> (0, e, e, e, e, e, 0)\n"
    "{5, 7} -> (0, e, e, 0, e, e, e)\n"
    "{6, 7} -> (0, 0, e, e, e, e, e)\n";

const char* kTable3 =
    "P(1) = {3, 6, 7, 12, 14}\n"
    "P(2) = {4, 7, 8, 13, 15}\n"
    "P(3) = {5, 8, 9, 14, 16}\n"
    "P(4) = {6, 9, 10, 15, 17}\n"
    "P(5) = {7, 10, 11, 16, 18}\n"
    "P(6) = {8, 11, 12, 17, 19}\n"
    "P(7) = {9, 12, 13, 18, 20}\n"
    "P(8) = {10, 13, 14, 19, 21}\n"
    "P(9) = {11, 14, 15, 20, 1}\n"
    "P(10) = {12, 15, 16, 21, 2}\n"
    "P(11) = {13, 16, 17, 1, 3}\n"
    "P(12) = {14, 17, 18, 2, 4}\n"
    "P(13) = {15, 18, 19, 3, 5}\n"
    "P(14) = {16, 19, 20, 4, 6}\n"
    "P(15) = {17, 20, 21, 5, 7}\n"
    "P(16) = {18, 21, 1, 6, 8}\n"
    "P(17) = {19, 1, 2, 7, 9}\n"
    "P(18) = {20, 2, 3, 8, 10}\n"
    "P(19) = {21, 3, 4, 9, 11}\n"
    "P(20) = {1, 4, 5, 10, 12}\n"
    "P(21) = {2, 5, 6, 11, 13}\n";

const char* kAppendixMatrix10 =
    "0 0 0 0 0 0 0 0 5 0\n"
    "0 0 0 0 0 0 0 0 0 5\n"
    "1 0 0 0 0 0 0 0 0 0\n"
    "0 1 0 0 0 0 0 0 0 0\n"
    "0 0 1 0 0 0 0 0 0 0\n"
    "2 0 0 1 0 0 0 0 0 0\n"
    "3 2 0 0 1 0 0 0 0 0\n"
    "0 3 2 0 0 1 0 0 0 0\n"
    "0 0 3 2 0 0 1 0 0 0\n"
    "0 0 0 3 2 0 0 1 0 0\n"
    "0 0 0 0 3 2 0 0 1 0\n"
    "4 0 0 0 0 3 2 0 0 1\n"
    "0 4 0 0 0 0 3 2 0 0\n"
    "5 0 4 0 0 0 0 3 2 0\n"
    "0 5 0 4 0 0 0 0 3 2\n"
    "0 0 5 0 4 0 0 0 0 3\n"
    "0 0 0 5 0 4 0 0 0 0\n"
    "0 0 0 0 5 0 4 0 0 0\n"
    "0 0 0 0 0 5 0 4 0 0\n"
    "0 0 0 0 0 0 5 0 4 0\n"
    "0 0 0 0 0 0 0 5 0 4\n";

const char* kSec511Expected =
    "word1 outer: (e, 1, e, 0, e, 0, 0)\n"
    "word1 accused: {1} via stage 1\n"
    "word2 outer: (e, e, e, 0, e, 0, 0)\n"
    "word2 segment 1 candidates: {1, 2}\n"
    "word2 accused: {1, 2} via stage 2\n";

const char* kSec511Word1 = "2 2 2 2 2 2 0 1 1 1 1 1 1 1 1 0 1 2 1 1 1 1 1 0 1 1 1 0";
const char* kSec511Word2 = "2 2 2 2 1 2 0 0 1 1 0 1 1 1 1 0 1 2 1 1 1 1 1 0 1 1 1 0";
const char* kSec5Word = "0 0 1 0 0 0 0 0 0 0 1 0 0 0 0 1 0 0 1 0 0";

const char* kPlane13Design =
    "2 13 4 1 13\n"
    "2 5 8 11\n"
    "1 5 6 7\n"
    "4 5 10 12\n"
    "3 5 9 13\n"
    "1 2 3 4\n"
    "2 7 10 13\n"
    "2 6 9 12\n"
    "1 11 12 13\n"
    "4 7 9 11\n"
    "3 6 10 11\n"
    "1 8 9 10\n"
    "3 7 8 12\n"
    "4 6 8 13\n";

Design fano_design() { return load_design_text(kFanoDesign); }

GossipCode example211_code() { return load_code_text(std::string("7 4 2 7\n") + kExample211Matrix); }

GossipCode example431_code() { return load_code_text(std::string("4 3 2 6\n") + kExample431Matrix); }

GossipCode example411_code() {
    return load_code_text(std::string("5 5 4 5 zero_tracing\n") + kExample411Matrix);
}

GossipCode example511_code() {
    return load_code_text(std::string("4 4 3 4 zero_tracing\n") + kExample511Matrix);
}

TraceabilityScheme appendix_scheme() { return ts_from_cyclic({3, 6, 7, 12, 14}, 21); }

GossipCode appendix_code() { return ts_to_gossip(appendix_scheme(), 2, SymbolAssign::Development); }

InnerCode builtin_square4() {
    // square_gossip(4) reordered to the published column order (zero rows 4..1)
    GossipCode sq = permute_columns(square_gossip(4), {3, 2, 1, 0});
    return inner_from_gossip(sq);
}

ConcatenatedCode example512_ccode() { return concatenate(builtin_square4(), example211_code()); }

ConcatenatedCode example52_ccode() { return concatenate(builtin_fp_342(), example211_code()); }

} // namespace gossip::fixtures
