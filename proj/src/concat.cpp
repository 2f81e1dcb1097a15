#include "gossip/concat.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "gossip/combinatorics.hpp"

namespace gossip {

namespace {

// Feasibility of a segment for a set of inner rows under the erasure model:
// erasures need a detected position, symbols need an owning member.
bool inner_descendant(const InnerCode& inner, const std::vector<int>& rows, const std::vector<int>& segment) {
    for (std::size_t j = 0; j < segment.size(); ++j) {
        std::set<int> feasible;
        for (int r : rows) feasible.insert(inner.matrix[r][j]);
        const int s = segment[j];
        if (s == ERASURE) {
            if (feasible.size() < 2) return false;
        } else if (!feasible.count(s)) {
            return false;
        }
    }
    return true;
}

} // namespace

InnerCode builtin_fp_342() {
    InnerCode inner;
    inner.kind = InnerKind::Frameproof;
    inner.alphabet = 2;
    inner.collusion = 2;
    inner.matrix = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    return inner;
}

InnerCode inner_from_gossip(const GossipCode& code) {
    InnerCode inner;
    inner.kind = InnerKind::Gossip;
    inner.alphabet = code.alphabet;
    inner.collusion = code.collusion;
    inner.matrix = code.matrix;
    return inner;
}

ConcatenatedCode concatenate(const InnerCode& inner, const GossipCode& outer) {
    if (inner.codewords() != outer.alphabet)
        throw ParameterError("concatenate: inner has " + std::to_string(inner.codewords()) +
                             " codewords but the outer alphabet is " + std::to_string(outer.alphabet));
    if (inner.codewords() < 2 || inner.length() < 1) throw StructuralError("concatenate: degenerate inner code");
    for (const auto& row : inner.matrix)
        if (static_cast<int>(row.size()) != inner.length())
            throw StructuralError("concatenate: ragged inner matrix");
    for (int a = 0; a < inner.codewords(); ++a)
        for (int b = a + 1; b < inner.codewords(); ++b)
            if (inner.matrix[a] == inner.matrix[b])
                throw StructuralError("concatenate: inner codewords are not pairwise distinct");

    ConcatenatedCode cc;
    cc.inner = inner;
    cc.outer = outer;
    for (const auto& orow : outer.matrix) {
        std::vector<int> row;
        row.reserve(outer.length() * inner.length());
        for (int s : orow) row.insert(row.end(), inner.matrix[s].begin(), inner.matrix[s].end());
        cc.matrix.push_back(std::move(row));
    }
    return cc;
}

PirateWord make_concat_pirate_word(const ConcatenatedCode& cc, const Coalition& W, Strategy strategy,
                                   std::uint64_t seed) {
    if (W.empty()) throw ParameterError("coalition must be non-empty");
    for (int w : W)
        if (w < 1 || w > cc.outer.num_codewords) throw ParameterError("coalition member out of range");
    if (static_cast<int>(W.size()) > cc.outer.collusion)
        throw ModelError("coalition exceeds the outer collusion size");

    std::mt19937_64 rng(seed);
    PirateWord word;
    word.symbols.reserve(cc.length());
    for (int j = 0; j < cc.length(); ++j) {
        std::set<int> feas;
        for (int w : W) feas.insert(cc.matrix[w - 1][j]);
        if (feas.size() == 1) {
            word.symbols.push_back(*feas.begin());
            continue;
        }
        std::vector<int> feasible(feas.begin(), feas.end());
        switch (strategy) {
            case Strategy::OnlyErasures: word.symbols.push_back(ERASURE); break;
            case Strategy::NoErasures: word.symbols.push_back(feasible[rng() % feasible.size()]); break;
            case Strategy::SelectiveErasures:
                if (rng() & 1)
                    word.symbols.push_back(ERASURE);
                else
                    word.symbols.push_back(feasible[rng() % feasible.size()]);
                break;
        }
    }
    return word;
}

std::pair<PirateWord, std::vector<SegmentDecode>> segment_and_decode(const ConcatenatedCode& cc,
                                                                     const PirateWord& word) {
    const int lin = cc.inner.length();
    const int lout = cc.outer.length();
    if (word.length() != lin * lout)
        throw ParameterError("segment_and_decode: word length " + std::to_string(word.length()) +
                             " != " + std::to_string(lout) + " segments of " + std::to_string(lin));
    for (int s : word.symbols)
        if (s != ERASURE && (s < 0 || s >= cc.inner.alphabet))
            throw ParameterError("segment_and_decode: symbol outside the inner alphabet");

    PirateWord outer_word;
    outer_word.out_of_model = word.out_of_model;
    std::vector<SegmentDecode> segs(lout);
    const int m = cc.inner.codewords();

    for (int p = 0; p < lout; ++p) {
        std::vector<int> segment(word.symbols.begin() + p * lin, word.symbols.begin() + (p + 1) * lin);
        SegmentDecode& sd = segs[p];

        int exact = -1;
        for (int r = 0; r < m; ++r)
            if (segment == cc.inner.matrix[r]) { exact = r; break; }
        if (exact >= 0) {
            sd.outer_symbol = exact;
            sd.candidates = {exact};
            sd.feasible = {{exact}};
            outer_word.symbols.push_back(exact);
            continue;
        }

        // Brute-force feasibility over all inner coalitions up to the inner
        // collusion size; the inner codes in play are tiny.
        const int cap = std::min(cc.inner.collusion, m);
        for (int d = 1; d <= cap; ++d) {
            for_each_combination(m, d, [&](const std::vector<int>& comb) {
                std::vector<int> rows(comb.size());
                for (std::size_t i = 0; i < comb.size(); ++i) rows[i] = comb[i] - 1;
                if (inner_descendant(cc.inner, rows, segment)) sd.feasible.push_back(rows);
            });
        }
        // Forced participants: rows present in every feasible coalition.
        if (!sd.feasible.empty()) {
            std::set<int> forced(sd.feasible.front().begin(), sd.feasible.front().end());
            for (const auto& f : sd.feasible) {
                std::set<int> fs(f.begin(), f.end());
                for (auto it = forced.begin(); it != forced.end();)
                    it = fs.count(*it) ? std::next(it) : forced.erase(it);
            }
            sd.candidates.assign(forced.begin(), forced.end());
        }
        sd.outer_symbol = ERASURE;
        outer_word.symbols.push_back(ERASURE);
    }
    return {outer_word, segs};
}

TraceReport concat_trace(const ConcatenatedCode& cc, const PirateWord& word) {
    auto [outer_word, segs] = segment_and_decode(cc, word);

    // Stage 1: the decoded outer word may already carry traceable symbols.
    TraceReport rep = trace_nonzero(cc.outer, outer_word);
    if (!rep.accused.empty()) {
        rep.stage = 1;
        return rep;
    }

    // Stage 2: every forced inner participant of an erased segment certifies
    // that its outer symbol was used there; a non-zero outer symbol has a
    // unique owner in the column.
    std::set<int> accused;
    std::vector<std::pair<int, int>> attributions;
    for (int p = 0; p < cc.outer.length(); ++p) {
        if (segs[p].outer_symbol != ERASURE) continue;
        for (int row : segs[p].candidates) {
            const int s = row; // inner row index = outer symbol
            if (s == 0 && !cc.outer.zero_is_tracing) continue;
            for (int i = 0; i < cc.outer.num_codewords; ++i) {
                if (cc.outer.matrix[i][p] == s) {
                    accused.insert(i + 1);
                    attributions.emplace_back(p + 1, i + 1);
                    break;
                }
            }
        }
    }
    if (!accused.empty()) {
        TraceReport out;
        out.rule = TraceRule::NonZero;
        out.stage = 2;
        out.accused.assign(accused.begin(), accused.end());
        out.attributions = std::move(attributions);
        return out;
    }

    // Fallback: no symbol evidence anywhere; use the zero pattern.
    TraceReport zp = trace_only_erasures(cc.outer, outer_word);
    zp.stage = 2;
    return zp;
}

void save_ccode(const ConcatenatedCode& cc, std::ostream& out) {
    out << "concat " << (cc.inner.kind == InnerKind::Frameproof ? "frameproof" : "gossip") << ' '
        << cc.inner.codewords() << ' ' << cc.inner.alphabet << ' ' << cc.inner.length() << ' '
        << cc.inner.collusion << '\n';
    for (const auto& row : cc.inner.matrix) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << '\n';
    }
    save_code(cc.outer, out);
}

ConcatenatedCode load_ccode(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
            if (line.find_first_not_of(" \t\r\n") != std::string::npos) { out = line; return true; }
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw ParseError(1, "missing concat header");
    std::istringstream hs(header);
    std::string tag, kind;
    int m = 0, q = 0, l = 0, c = 0;
    if (!(hs >> tag >> kind >> m >> q >> l >> c) || tag != "concat")
        throw ParseError(lineno, "expected header `concat <kind> M q l c`");

    InnerCode inner;
    if (kind == "frameproof")
        inner.kind = InnerKind::Frameproof;
    else if (kind == "gossip")
        inner.kind = InnerKind::Gossip;
    else
        throw ParseError(lineno, "unknown inner kind `" + kind + "`");
    inner.alphabet = q;
    inner.collusion = c;
    for (int i = 0; i < m; ++i) {
        std::string row;
        if (!next_line(row)) throw ParseError(lineno, "expected " + std::to_string(m) + " inner rows");
        std::istringstream rs(row);
        std::vector<int> r;
        int s;
        while (rs >> s) r.push_back(s);
        if (static_cast<int>(r.size()) != l)
            throw ParseError(lineno, "inner row has " + std::to_string(r.size()) + " symbols, expected " +
                                         std::to_string(l));
        inner.matrix.push_back(std::move(r));
    }

    std::ostringstream rest;
    std::string tail;
    while (std::getline(in, tail)) rest << tail << '\n';
    GossipCode outer = load_code_text(rest.str());
    return concatenate(inner, outer);
}

ConcatenatedCode load_ccode_text(const std::string& text) {
    std::istringstream in(text);
    return load_ccode(in);
}

std::string save_ccode_text(const ConcatenatedCode& cc) {
    std::ostringstream out;
    save_ccode(cc, out);
    return out.str();
}

} // namespace gossip
