#include "gossip/design.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gossip/combinatorics.hpp"

namespace gossip {

void check_design_structure(const Design& d) {
    if (d.t < 1) throw StructuralError("design strength t must be positive");
    if (d.v < 1) throw StructuralError("design must have at least one point");
    if (d.k < d.t) throw StructuralError("block size k smaller than strength t");
    if (d.lambda < 1) throw StructuralError("lambda must be positive");
    if (d.blocks.empty()) throw StructuralError("design has no blocks");
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const auto& b = d.blocks[i];
        if (static_cast<int>(b.size()) != d.k)
            throw StructuralError("block " + std::to_string(i + 1) + " has " + std::to_string(b.size()) +
                                  " points, expected " + std::to_string(d.k));
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] < 1 || b[j] > d.v)
                throw StructuralError("block " + std::to_string(i + 1) + " has out-of-range point " +
                                      std::to_string(b[j]));
            if (j > 0 && b[j] == b[j - 1])
                throw StructuralError("block " + std::to_string(i + 1) + " has duplicate point " +
                                      std::to_string(b[j]));
        }
        if (!std::is_sorted(b.begin(), b.end()))
            throw StructuralError("block " + std::to_string(i + 1) + " is not sorted");
    }
}

VerifyReport verify_design(const Design& d, int max_points) {
    VerifyReport rep;
    rep.block_count = d.block_count();
    try {
        check_design_structure(d);
    } catch (const StructuralError& e) {
        rep.error = e.what();
        return rep;
    }
    rep.structural_ok = true;
    if (d.v > max_points)
        throw ResourceError("verify_design: v = " + std::to_string(d.v) + " exceeds the ceiling of " +
                            std::to_string(max_points));

    try {
        rep.forced_b = exact_div(static_cast<long long>(d.lambda) * binomial(d.v, d.t), binomial(d.k, d.t),
                                 "forced block count");
    } catch (const ConsistencyError&) {
        rep.forced_b = -1; // parameters admit no design; the scan below will find a witness
    }

    // Count every t-subset once by walking the blocks, then scan all t-subsets
    // lexicographically so the first violation reported is well defined.
    std::map<std::vector<int>, long long> counts;
    for (const auto& b : d.blocks) {
        for_each_combination(d.k, d.t, [&](const std::vector<int>& idx) {
            std::vector<int> sub(d.t);
            for (int i = 0; i < d.t; ++i) sub[i] = b[idx[i] - 1];
            ++counts[sub];
        });
    }
    bool ok = true;
    for_each_combination(d.v, d.t, [&](const std::vector<int>& sub) {
        if (!ok) return;
        auto it = counts.find(sub);
        const long long c = it == counts.end() ? 0 : it->second;
        if (c != d.lambda) {
            ok = false;
            rep.witness = sub;
            rep.witness_count = c;
        }
    });
    rep.valid = ok;
    return rep;
}

long long lambda_s(const Design& d, int s) {
    if (s < 0 || s > d.t)
        throw ParameterError("lambda_s: s must satisfy 0 <= s <= t");
    return exact_div(static_cast<long long>(d.lambda) * binomial(d.v - s, d.t - s), binomial(d.k - s, d.t - s),
                     "lambda_s");
}

long long lambda_bar_s(const Design& d, int s) {
    if (s < 0 || s > d.t)
        throw ParameterError("lambda_bar_s: s must satisfy 0 <= s <= t");
    return exact_div(static_cast<long long>(d.lambda) * binomial(d.v - s, d.k), binomial(d.v - d.t, d.k - d.t),
                     "lambda_bar_s");
}

long long lambda_s_checked(const Design& d, const std::vector<int>& subset) {
    long long direct = 0;
    for (const auto& b : d.blocks)
        if (std::includes(b.begin(), b.end(), subset.begin(), subset.end())) ++direct;
    const long long formula = lambda_s(d, static_cast<int>(subset.size()));
    if (direct != formula)
        throw ConsistencyError("lambda_s: direct count " + std::to_string(direct) + " != formula " +
                               std::to_string(formula));
    return direct;
}

long long lambda_bar_s_checked(const Design& d, const std::vector<int>& subset) {
    long long direct = 0;
    for (const auto& b : d.blocks) {
        bool disjoint = true;
        for (int p : subset)
            if (std::binary_search(b.begin(), b.end(), p)) { disjoint = false; break; }
        if (disjoint) ++direct;
    }
    const long long formula = lambda_bar_s(d, static_cast<int>(subset.size()));
    if (direct != formula)
        throw ConsistencyError("lambda_bar_s: direct count " + std::to_string(direct) + " != formula " +
                               std::to_string(formula));
    return direct;
}

namespace {

// Strips comments; returns false for blank lines.
bool significant_line(std::string& line) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

} // namespace

Design load_design(std::istream& in, bool verify, int max_points) {
    Design d;
    std::string line;
    int lineno = 0;
    long long declared_b = -1;

    auto next_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (significant_line(line)) { out = line; return true; }
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw ParseError(lineno == 0 ? 1 : lineno, "missing design header");
    {
        std::istringstream hs(header);
        if (!(hs >> d.t >> d.v >> d.k >> d.lambda >> declared_b))
            throw ParseError(lineno, "expected header `t v k lambda b`");
        std::string extra;
        if (hs >> extra) throw ParseError(lineno, "trailing tokens after header");
    }
    if (declared_b < 1) throw ParseError(lineno, "block count must be positive");

    for (long long i = 0; i < declared_b; ++i) {
        std::string row;
        if (!next_line(row)) throw ParseError(lineno, "expected " + std::to_string(declared_b) + " blocks, got " +
                                                          std::to_string(i));
        std::istringstream rs(row);
        std::vector<int> block;
        int p;
        while (rs >> p) block.push_back(p);
        if (static_cast<int>(block.size()) != d.k)
            throw ParseError(lineno, "block has " + std::to_string(block.size()) + " points, expected " +
                                         std::to_string(d.k));
        d.blocks.push_back(std::move(block));
    }
    std::string extra;
    if (next_line(extra)) throw ParseError(lineno, "unexpected content after the last block");

    check_design_structure(d);
    if (verify) {
        const auto rep = verify_design(d, max_points);
        if (!rep.valid) {
            std::string msg = "design property fails";
            if (rep.witness) {
                msg += ": subset {";
                for (std::size_t i = 0; i < rep.witness->size(); ++i)
                    msg += (i ? ", " : "") + std::to_string((*rep.witness)[i]);
                msg += "} occurs in " + std::to_string(rep.witness_count) + " blocks, expected " +
                       std::to_string(d.lambda);
            }
            throw ConsistencyError(msg);
        }
    }
    return d;
}

Design load_design_text(const std::string& text, bool verify, int max_points) {
    std::istringstream in(text);
    return load_design(in, verify, max_points);
}

void save_design(const Design& d, std::ostream& out) {
    out << d.t << ' ' << d.v << ' ' << d.k << ' ' << d.lambda << ' ' << d.block_count() << '\n';
    for (const auto& b : d.blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
        out << '\n';
    }
}

std::string save_design_text(const Design& d) {
    std::ostringstream out;
    save_design(d, out);
    return out.str();
}

} // namespace gossip
