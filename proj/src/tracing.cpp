#include "gossip/tracing.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "gossip/combinatorics.hpp"

namespace gossip {

namespace {

void check_coalition(const GossipCode& code, const Coalition& W) {
    if (W.empty()) throw ParameterError("coalition must be non-empty");
    std::set<int> seen;
    for (int w : W) {
        if (w < 1 || w > code.num_codewords)
            throw ParameterError("coalition member " + std::to_string(w) + " out of range");
        if (!seen.insert(w).second) throw ParameterError("coalition repeats member " + std::to_string(w));
    }
}

// Sorted distinct symbols held by W at 0-based column j.
std::vector<int> feasible_symbols(const GossipCode& code, const Coalition& W, int j) {
    std::set<int> s;
    for (int w : W) s.insert(code.matrix[w - 1][j]);
    return {s.begin(), s.end()};
}

void check_word(const GossipCode& code, const PirateWord& word) {
    if (word.length() != code.length())
        throw ParameterError("word length " + std::to_string(word.length()) + " != code length " +
                             std::to_string(code.length()));
    for (int s : word.symbols)
        if (s != ERASURE && (s < 0 || s >= code.alphabet))
            throw ParameterError("word symbol " + std::to_string(s) + " outside alphabet");
}

} // namespace

std::vector<int> detected_positions(const GossipCode& code, const Coalition& W) {
    check_coalition(code, W);
    std::vector<int> out;
    for (int j = 0; j < code.length(); ++j)
        if (feasible_symbols(code, W, j).size() > 1) out.push_back(j + 1);
    return out;
}

PirateWord make_pirate_word(const GossipCode& code, const Coalition& W, Strategy strategy, std::uint64_t seed,
                            const ChoicePolicy& policy, bool allow_oversize) {
    check_coalition(code, W);
    PirateWord word;
    if (static_cast<int>(W.size()) > code.collusion) {
        if (!allow_oversize)
            throw ModelError("coalition of size " + std::to_string(W.size()) + " exceeds c = " +
                             std::to_string(code.collusion));
        word.out_of_model = true;
    }

    std::mt19937_64 rng(seed);
    auto pick = [&](int pos1, const std::vector<int>& feasible) -> int {
        switch (policy.kind) {
            case ChoicePolicy::FirstMember: return code.matrix[W.front() - 1][pos1 - 1];
            case ChoicePolicy::Callback: {
                if (!policy.fn) throw ParameterError("callback policy without a callback");
                int s = policy.fn(pos1, feasible);
                if (!std::binary_search(feasible.begin(), feasible.end(), s))
                    throw ModelError("callback chose symbol " + std::to_string(s) +
                                     " that no member holds at position " + std::to_string(pos1));
                return s;
            }
            case ChoicePolicy::SeededRandom:
            default: return feasible[rng() % feasible.size()];
        }
    };

    word.symbols.reserve(code.length());
    for (int j = 0; j < code.length(); ++j) {
        const auto feasible = feasible_symbols(code, W, j);
        if (feasible.size() == 1) { // undetected: the common symbol is fixed
            word.symbols.push_back(feasible.front());
            continue;
        }
        switch (strategy) {
            case Strategy::OnlyErasures: word.symbols.push_back(ERASURE); break;
            case Strategy::NoErasures: word.symbols.push_back(pick(j + 1, feasible)); break;
            case Strategy::SelectiveErasures:
                if (rng() & 1)
                    word.symbols.push_back(ERASURE);
                else
                    word.symbols.push_back(pick(j + 1, feasible));
                break;
        }
    }
    return word;
}

bool is_descendant(const GossipCode& code, const Coalition& W, const PirateWord& word) {
    check_coalition(code, W);
    check_word(code, word);
    for (int j = 0; j < code.length(); ++j) {
        const auto feasible = feasible_symbols(code, W, j);
        const int s = word.symbols[j];
        if (s == ERASURE) {
            if (feasible.size() < 2) return false; // erasures only at detected marks
        } else if (!std::binary_search(feasible.begin(), feasible.end(), s)) {
            return false;
        }
    }
    return true;
}

TraceReport trace_nonzero(const GossipCode& code, const PirateWord& word) {
    check_word(code, word);
    TraceReport rep;
    rep.rule = TraceRule::NonZero;
    std::set<int> accused;
    for (int j = 0; j < code.length(); ++j) {
        const int s = word.symbols[j];
        if (s == ERASURE) continue;
        if (s == 0 && !code.zero_is_tracing) continue;
        int owner = 0, hits = 0;
        for (int i = 0; i < code.num_codewords; ++i)
            if (code.matrix[i][j] == s) { owner = i + 1; ++hits; }
        if (hits != 1)
            throw IntegrityError("symbol " + std::to_string(s) + " at position " + std::to_string(j + 1) +
                                 " has " + std::to_string(hits) + " owners");
        rep.attributions.emplace_back(j + 1, owner);
        accused.insert(owner);
    }
    rep.accused.assign(accused.begin(), accused.end());
    rep.untraceable = rep.accused.empty();
    return rep;
}

TraceReport trace_only_erasures(const GossipCode& code, const PirateWord& word) {
    check_word(code, word);
    TraceReport rep;
    rep.rule = TraceRule::ZeroPattern;
    std::vector<int> zeros;
    for (int j = 0; j < code.length(); ++j)
        if (word.symbols[j] == 0) zeros.push_back(j);
    if (zeros.empty()) { // the all-erasures word traces nobody
        rep.untraceable = true;
        return rep;
    }
    for (int i = 0; i < code.num_codewords; ++i) {
        bool all_zero = true;
        for (int j : zeros)
            if (code.matrix[i][j] != 0) { all_zero = false; break; }
        if (all_zero) rep.accused.push_back(i + 1);
    }
    return rep;
}

TraceReport brute_force_trace(const GossipCode& code, const PirateWord& word, int c, long long budget) {
    check_word(code, word);
    if (c < 1) throw ParameterError("brute_force_trace: c must be >= 1");
    long long work = 0;
    for (int d = 1; d <= c; ++d) {
        work += binomial(code.num_codewords, d);
        if (work > budget)
            throw ResourceError("brute_force_trace: C(M," + std::to_string(d) +
                                ") exceeds the budget; use the O(M*l) zero-pattern method");
    }
    TraceReport rep;
    rep.rule = TraceRule::BruteForce;
    rep.out_of_model = word.out_of_model;
    std::set<int> members;
    for (int d = 1; d <= c; ++d) {
        for_each_combination(code.num_codewords, d, [&](const Coalition& W) {
            if (is_descendant(code, W, word)) {
                rep.coalitions.push_back(W);
                for (int w : W) members.insert(w);
            }
        });
    }
    rep.accused.assign(members.begin(), members.end());
    rep.untraceable = rep.coalitions.empty();
    return rep;
}

long long undetectable_count(const GossipCode& code, int coalition_size) {
    if (!code.design_backed)
        throw ParameterError("undetectable_count: code has no design provenance");
    if (coalition_size < 1 || coalition_size > code.collusion)
        throw ParameterError("undetectable_count: coalition size must be in 1..c");
    const int M = code.num_codewords, c = code.collusion, k = code.alphabet - 1;
    long long detected = 0;
    for (int i = 1; i <= coalition_size; ++i) {
        const long long li = exact_div(binomial(M - i, c - i), binomial(k - i, c - i), "lambda_i");
        const long long term = binomial(coalition_size, i) * li;
        detected += (i % 2 == 1) ? term : -term;
    }
    return code.length() - detected;
}

long long undetectable_count_checked(const GossipCode& code, const Coalition& W) {
    check_coalition(code, W);
    long long direct = 0;
    for (int j = 0; j < code.length(); ++j) {
        const auto support = code.key_support(j);
        bool disjoint = true;
        for (int w : W)
            if (std::binary_search(support.begin(), support.end(), w)) { disjoint = false; break; }
        if (disjoint) ++direct;
    }
    const long long formula = undetectable_count(code, static_cast<int>(W.size()));
    if (direct != formula)
        throw ConsistencyError("undetectable_count: direct " + std::to_string(direct) + " != formula " +
                               std::to_string(formula));
    return direct;
}

PirateWord load_word(std::istream& in, int alphabet) {
    PirateWord word;
    std::string tok;
    int pos = 0;
    while (in >> tok) {
        ++pos;
        if (tok == "e" || tok == "E") {
            word.symbols.push_back(ERASURE);
            continue;
        }
        try {
            std::size_t used = 0;
            int s = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            if (s < 0 || s >= alphabet)
                throw ParseError(1, "token " + std::to_string(pos) + ": symbol " + tok + " outside alphabet 0.." +
                                        std::to_string(alphabet - 1));
            word.symbols.push_back(s);
        } catch (const std::invalid_argument&) {
            throw ParseError(1, "token " + std::to_string(pos) + ": expected a digit or `e`, got `" + tok + "`");
        }
    }
    if (word.symbols.empty()) throw ParseError(1, "empty pirate word");
    return word;
}

PirateWord load_word_text(const std::string& text, int alphabet) {
    std::istringstream in(text);
    return load_word(in, alphabet);
}

std::string word_to_string(const PirateWord& word) {
    std::ostringstream out;
    for (int j = 0; j < word.length(); ++j) {
        if (j) out << ' ';
        if (word.symbols[j] == ERASURE)
            out << 'e';
        else
            out << word.symbols[j];
    }
    return out.str();
}

std::string word_tuple(const PirateWord& word) {
    std::ostringstream out;
    out << '(';
    for (int j = 0; j < word.length(); ++j) {
        if (j) out << ", ";
        if (word.symbols[j] == ERASURE)
            out << 'e';
        else
            out << word.symbols[j];
    }
    out << ')';
    return out.str();
}

} // namespace gossip
