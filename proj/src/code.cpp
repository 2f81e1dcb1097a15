#include "gossip/code.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gossip/combinatorics.hpp"

namespace gossip {

namespace {

void derive_matrix(GossipCode& code) {
    const int l = code.length();
    code.matrix.assign(code.num_codewords, std::vector<int>(l, 0));
    for (int j = 0; j < l; ++j) {
        const auto& key = code.column_keys[j];
        const int expected = code.zero_is_tracing ? code.alphabet : code.alphabet - 1;
        if (static_cast<int>(key.size()) != expected)
            throw StructuralError("column " + std::to_string(j + 1) + " key has " + std::to_string(key.size()) +
                                  " rows, expected " + std::to_string(expected));
        std::set<int> seen;
        for (std::size_t i = 0; i < key.size(); ++i) {
            const int row = key[i];
            if (row < 1 || row > code.num_codewords)
                throw StructuralError("column " + std::to_string(j + 1) + " key row " + std::to_string(row) +
                                      " out of range");
            if (!seen.insert(row).second)
                throw StructuralError("column " + std::to_string(j + 1) + " repeats row " + std::to_string(row));
            code.matrix[row - 1][j] = code.zero_is_tracing ? static_cast<int>(i) : static_cast<int>(i) + 1;
        }
    }
}

std::vector<int> column_of(const GossipCode& code, int j) {
    std::vector<int> col(code.num_codewords);
    for (int i = 0; i < code.num_codewords; ++i) col[i] = code.matrix[i][j];
    return col;
}

} // namespace

std::vector<int> GossipCode::key_support(int j) const {
    std::vector<int> rows;
    const auto& key = column_keys.at(j);
    if (zero_is_tracing) {
        rows.assign(key.begin() + 1, key.end()); // first listed row holds symbol 0
    } else {
        rows = key;
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

GossipCode from_design(const Design& d, SymbolAssign assign) {
    if (d.lambda != 1)
        throw ParameterError("from_design: requires lambda = 1, got " + std::to_string(d.lambda));
    check_design_structure(d);

    GossipCode code;
    code.num_codewords = d.v;
    code.alphabet = d.k + 1;
    code.collusion = d.t;
    code.design_backed = true;
    const auto& source = assign == SymbolAssign::Development ? d.provenance_blocks() : d.blocks;
    code.column_keys = source;
    if (assign == SymbolAssign::Canonical)
        for (auto& key : code.column_keys) std::sort(key.begin(), key.end());
    derive_matrix(code);
    return code;
}

CodeParams code_params(int M, int q, int c) {
    if (!(c >= 1 && c < q && q <= M))
        throw ParameterError("code_params: need 1 <= c < q <= M");
    CodeParams p;
    try {
        p.length = exact_div(binomial(M, c), binomial(q - 1, c), "code length");
    } catch (const ConsistencyError&) {
        throw ParameterError("code_params: no shortest code with M=" + std::to_string(M) + " q=" +
                             std::to_string(q) + " c=" + std::to_string(c) + " (non-integral length)");
    }
    p.weight = exact_div(binomial(M - 1, c - 1), binomial(q - 2, c - 1), "code weight");
    // distance = l - (blocks disjoint from a fixed pair), per the t-design
    // counting with t = c, v = M, k = q-1, lambda = 1
    const long long lbar2 = exact_div(binomial(M - 2, q - 1), binomial(M - c, q - 1 - c), "code distance");
    p.distance = p.length - lbar2;
    return p;
}

GossipCode full_gossip(int M, int q) {
    if (q < 3 || q > M) throw ParameterError("full_gossip: need 3 <= q <= M");
    GossipCode code;
    code.num_codewords = M;
    code.alphabet = q;
    code.collusion = q - 1;
    code.design_backed = true; // all (q-1)-subsets: the complete (q-1)-(M,q-1,1) family
    for_each_combination(M, q - 1, [&](const std::vector<int>& key) { code.column_keys.push_back(key); });
    derive_matrix(code);
    return code;
}

GossipCode square_gossip(int q) {
    if (q < 3) throw ParameterError("square_gossip: need q >= 3");
    GossipCode code;
    code.num_codewords = q;
    code.alphabet = q;
    code.collusion = q - 1;
    code.zero_is_tracing = true;
    code.design_backed = true;
    for (int j = 1; j <= q; ++j) {
        std::vector<int> key{j}; // symbol 0 at row j
        for (int r = 1; r <= q; ++r)
            if (r != j) key.push_back(r);
        code.column_keys.push_back(std::move(key));
    }
    derive_matrix(code);
    return code;
}

bool is_shortest(const GossipCode& code) {
    const int c = code.collusion;
    if (c < 1) return false;
    long long per_column = binomial(code.alphabet - 1, c);
    if (per_column == 0) return false;
    std::set<std::vector<int>> groups;
    long long total = 0;
    for (int j = 0; j < code.length(); ++j) {
        const auto support = code.key_support(j);
        if (static_cast<int>(support.size()) < c) return false;
        bool dup = false;
        for_each_combination(static_cast<int>(support.size()), c, [&](const std::vector<int>& idx) {
            std::vector<int> g(c);
            for (int i = 0; i < c; ++i) g[i] = support[idx[i] - 1];
            if (!groups.insert(g).second) dup = true;
            ++total;
        });
        if (dup) return false;
    }
    return total == binomial(code.num_codewords, c) &&
           total == static_cast<long long>(code.length()) * per_column;
}

std::vector<std::vector<int>> accusation_groups(const GossipCode& code, int column) {
    if (column < 1 || column > code.length()) throw ParameterError("accusation_groups: bad column index");
    std::vector<int> base = code.column_keys[column - 1];
    std::sort(base.begin(), base.end()); // for square codes this already includes the zero row
    std::vector<std::vector<int>> out;
    for_each_combination(static_cast<int>(base.size()), code.collusion, [&](const std::vector<int>& idx) {
        std::vector<int> g(code.collusion);
        for (int i = 0; i < code.collusion; ++i) g[i] = base[idx[i] - 1];
        out.push_back(std::move(g));
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool is_embedded(const GossipCode& inner, const GossipCode& outer) {
    if (inner.alphabet != outer.alphabet) throw ParameterError("is_embedded: alphabet mismatch");
    if (inner.num_codewords > outer.num_codewords || inner.length() > outer.length()) return false;
    for (const auto& row : inner.matrix) {
        bool found = false;
        for (const auto& orow : outer.matrix) {
            if (std::equal(row.begin(), row.end(), orow.begin())) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

bool is_embedded_sets(const GossipCode& inner, const GossipCode& outer) {
    if (inner.alphabet != outer.alphabet) throw ParameterError("is_embedded_sets: alphabet mismatch");
    if (inner.num_codewords > outer.num_codewords) return false;
    std::set<std::vector<int>> outer_blocks;
    for (int j = 0; j < outer.length(); ++j) outer_blocks.insert(outer.key_support(j));
    for (int j = 0; j < inner.length(); ++j)
        if (!outer_blocks.count(inner.key_support(j))) return false;
    return true;
}

GossipCode permute_columns(const GossipCode& code, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != code.length())
        throw ParameterError("permute_columns: order size mismatch");
    GossipCode out = code;
    out.column_keys.clear();
    for (int src : order) {
        if (src < 0 || src >= code.length()) throw ParameterError("permute_columns: index out of range");
        out.column_keys.push_back(code.column_keys[src]);
    }
    derive_matrix(out);
    return out;
}

std::optional<std::vector<int>> find_column_permutation(const GossipCode& a, const GossipCode& b) {
    if (a.num_codewords != b.num_codewords || a.length() != b.length()) return std::nullopt;
    std::map<std::vector<int>, std::vector<int>> pool; // column content -> b indices
    for (int j = 0; j < b.length(); ++j) pool[column_of(b, j)].push_back(j);
    std::vector<int> sigma(a.length(), -1);
    for (int j = 0; j < a.length(); ++j) {
        auto it = pool.find(column_of(a, j));
        if (it == pool.end() || it->second.empty()) return std::nullopt;
        sigma[j] = it->second.back();
        it->second.pop_back();
    }
    return sigma;
}

bool equal_up_to_symbol_permutation(const GossipCode& a, const GossipCode& b) {
    if (a.num_codewords != b.num_codewords || a.length() != b.length() || a.alphabet != b.alphabet) return false;
    for (int j = 0; j < a.length(); ++j)
        if (a.key_support(j) != b.key_support(j)) return false;
    return true;
}

GossipCode load_code(std::istream& in) {
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

    GossipCode code;
    std::string header;
    if (!next_line(header)) throw ParseError(1, "missing code header");
    int l = 0;
    {
        std::istringstream hs(header);
        if (!(hs >> code.num_codewords >> code.alphabet >> code.collusion >> l))
            throw ParseError(lineno, "expected header `M q c l [zero_tracing]`");
        std::string flag;
        if (hs >> flag) {
            if (flag == "zero_tracing" || flag == "1")
                code.zero_is_tracing = true;
            else if (flag != "0")
                throw ParseError(lineno, "unknown header flag `" + flag + "`");
        }
    }
    if (code.num_codewords < 1 || code.alphabet < 2 || l < 1)
        throw ParseError(lineno, "implausible code header");

    code.matrix.assign(code.num_codewords, {});
    for (int i = 0; i < code.num_codewords; ++i) {
        std::string row;
        if (!next_line(row)) throw ParseError(lineno, "expected " + std::to_string(code.num_codewords) + " rows");
        std::istringstream rs(row);
        int s;
        while (rs >> s) {
            if (s < 0 || s >= code.alphabet)
                throw ParseError(lineno, "symbol " + std::to_string(s) + " outside alphabet 0.." +
                                             std::to_string(code.alphabet - 1));
            code.matrix[i].push_back(s);
        }
        if (static_cast<int>(code.matrix[i].size()) != l)
            throw ParseError(lineno, "row has " + std::to_string(code.matrix[i].size()) + " symbols, expected " +
                                         std::to_string(l));
    }

    // Rebuild the keys and validate the gossip-column property.
    code.column_keys.assign(l, {});
    for (int j = 0; j < l; ++j) {
        const int first = code.zero_is_tracing ? 0 : 1;
        std::vector<int> key;
        for (int s = first; s < code.alphabet; ++s) {
            int owner = 0, hits = 0;
            for (int i = 0; i < code.num_codewords; ++i)
                if (code.matrix[i][j] == s) { owner = i + 1; ++hits; }
            if (hits != 1)
                throw ParseError(lineno, "column " + std::to_string(j + 1) + ": symbol " + std::to_string(s) +
                                             " appears " + std::to_string(hits) + " times");
            key.push_back(owner);
        }
        code.column_keys[j] = std::move(key);
    }
    return code;
}

GossipCode load_code_text(const std::string& text) {
    std::istringstream in(text);
    return load_code(in);
}

void save_code(const GossipCode& code, std::ostream& out) {
    out << code.num_codewords << ' ' << code.alphabet << ' ' << code.collusion << ' ' << code.length();
    if (code.zero_is_tracing) out << " zero_tracing";
    out << '\n' << render_matrix(code);
}

std::string save_code_text(const GossipCode& code) {
    std::ostringstream out;
    save_code(code, out);
    return out.str();
}

std::string render_matrix(const GossipCode& code) {
    std::ostringstream out;
    for (const auto& row : code.matrix) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << '\n';
    }
    return out.str();
}

} // namespace gossip
