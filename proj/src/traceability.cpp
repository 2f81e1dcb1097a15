#include "gossip/traceability.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gossip/combinatorics.hpp"
#include "gossip/constructions.hpp"

namespace gossip {

void check_scheme_structure(const TraceabilityScheme& ts) {
    if (ts.keys_per_user < 1 || ts.users < 1 || ts.base_keys < 1)
        throw StructuralError("scheme parameters must be positive");
    if (static_cast<int>(ts.private_keys.size()) != ts.users)
        throw StructuralError("scheme lists " + std::to_string(ts.private_keys.size()) + " keys for " +
                              std::to_string(ts.users) + " users");
    for (std::size_t i = 0; i < ts.private_keys.size(); ++i) {
        const auto& pk = ts.private_keys[i];
        if (static_cast<int>(pk.size()) != ts.keys_per_user)
            throw StructuralError("private key " + std::to_string(i + 1) + " has " + std::to_string(pk.size()) +
                                  " keys, expected " + std::to_string(ts.keys_per_user));
        std::set<int> seen;
        for (int key : pk) {
            if (key < 1 || key > ts.base_keys)
                throw StructuralError("private key " + std::to_string(i + 1) + " has out-of-range key " +
                                      std::to_string(key));
            if (!seen.insert(key).second)
                throw StructuralError("private key " + std::to_string(i + 1) + " repeats key " +
                                      std::to_string(key));
        }
    }
}

std::vector<int> ts_trace(const TraceabilityScheme& ts, const std::vector<int>& decoder) {
    check_scheme_structure(ts);
    if (decoder.empty()) throw ParameterError("ts_trace: pirate decoder is empty");
    std::set<int> F(decoder.begin(), decoder.end());
    for (int key : F)
        if (key < 1 || key > ts.base_keys)
            throw ParameterError("ts_trace: decoder key " + std::to_string(key) + " out of range");

    std::vector<int> exposed;
    std::size_t best = 0;
    for (int u = 1; u <= ts.users; ++u) {
        std::size_t overlap = 0;
        for (int key : ts.private_keys[u - 1])
            if (F.count(key)) ++overlap;
        if (overlap > best) {
            best = overlap;
            exposed.assign(1, u);
        } else if (overlap == best && best > 0) {
            exposed.push_back(u);
        }
    }
    if (best == 0) exposed.clear(); // decoder shares nothing with anyone
    return exposed;
}

bool check_distinctness(const TraceabilityScheme& ts, int c) {
    check_scheme_structure(ts);
    std::vector<std::set<int>> keys;
    keys.reserve(ts.private_keys.size());
    for (const auto& pk : ts.private_keys) keys.emplace_back(pk.begin(), pk.end());
    for (std::size_t i = 0; i < keys.size(); ++i)
        for (std::size_t j = i + 1; j < keys.size(); ++j) {
            int overlap = 0;
            for (int key : keys[i])
                if (keys[j].count(key)) ++overlap;
            if (overlap >= c) return false;
        }
    return true;
}

GossipCode ts_to_gossip(const TraceabilityScheme& ts, int c, SymbolAssign assign) {
    check_scheme_structure(ts);
    if (c < 1 || c >= ts.keys_per_user + 1)
        throw ParameterError("ts_to_gossip: need 1 <= c <= k");
    const long long required_b = exact_div(binomial(ts.base_keys, c), binomial(ts.keys_per_user, c),
                                           "shortest-code block count");
    if (ts.users != required_b)
        throw ParameterError("ts_to_gossip: not a shortest-code-compatible scheme: b = " +
                             std::to_string(ts.users) + ", need C(v,c)/C(k,c) = " + std::to_string(required_b));
    if (!check_distinctness(ts, c))
        throw ParameterError("ts_to_gossip: some private keys share >= c keys, so accusation groups collide");

    Design d;
    d.t = c;
    d.v = ts.base_keys;
    d.k = ts.keys_per_user;
    d.lambda = 1;
    d.dev_blocks = ts.private_keys;
    d.blocks = ts.private_keys;
    for (auto& b : d.blocks) std::sort(b.begin(), b.end());

    GossipCode code = from_design(d, assign);
    if (!is_shortest(code))
        throw ConsistencyError("ts_to_gossip: resulting code is not shortest"); // unreachable when checks pass
    return code;
}

std::pair<int, TraceabilityScheme> gossip_to_ts(const GossipCode& code) {
    if (code.collusion < 2) throw ParameterError("gossip_to_ts: requires c >= 2");
    if (!is_shortest(code)) throw ParameterError("gossip_to_ts: code does not have the shortest length");
    const int w = floor_sqrt_ratio(code.alphabet - 2, code.collusion - 1);
    TraceabilityScheme ts;
    ts.keys_per_user = code.alphabet - 1;
    ts.users = code.length();
    ts.base_keys = code.num_codewords;
    ts.private_keys = code.column_keys;
    return {w, ts};
}

TraceabilityScheme ts_from_cyclic(const std::vector<int>& base_block, int v) {
    const Design d = cyclic_design(base_block, v);
    TraceabilityScheme ts;
    ts.keys_per_user = d.k;
    ts.users = d.block_count();
    ts.base_keys = d.v;
    ts.private_keys = d.dev_blocks;
    return ts;
}

TraceabilityScheme load_scheme(std::istream& in) {
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

    TraceabilityScheme ts;
    std::string header;
    if (!next_line(header)) throw ParseError(1, "missing scheme header");
    {
        std::istringstream hs(header);
        if (!(hs >> ts.keys_per_user >> ts.users >> ts.base_keys))
            throw ParseError(lineno, "expected header `k b v`");
    }
    for (int i = 0; i < ts.users; ++i) {
        std::string row;
        if (!next_line(row)) throw ParseError(lineno, "expected " + std::to_string(ts.users) + " private keys");
        std::istringstream rs(row);
        std::vector<int> pk;
        int key;
        while (rs >> key) pk.push_back(key);
        if (static_cast<int>(pk.size()) != ts.keys_per_user)
            throw ParseError(lineno, "private key has " + std::to_string(pk.size()) + " keys, expected " +
                                         std::to_string(ts.keys_per_user));
        ts.private_keys.push_back(std::move(pk));
    }
    check_scheme_structure(ts);
    return ts;
}

TraceabilityScheme load_scheme_text(const std::string& text) {
    std::istringstream in(text);
    return load_scheme(in);
}

void save_scheme(const TraceabilityScheme& ts, std::ostream& out) {
    out << ts.keys_per_user << ' ' << ts.users << ' ' << ts.base_keys << '\n';
    for (const auto& pk : ts.private_keys) {
        for (std::size_t i = 0; i < pk.size(); ++i) out << (i ? " " : "") << pk[i];
        out << '\n';
    }
}

std::string save_scheme_text(const TraceabilityScheme& ts) {
    std::ostringstream out;
    save_scheme(ts, out);
    return out.str();
}

} // namespace gossip
