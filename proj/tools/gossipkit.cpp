// Command-line front end: construct designs and codes, convert schemes,
// simulate coalitions, trace pirate words, build concatenated codes, embed
// and detect watermarks, and re-derive the reference tables.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gossip/constructions.hpp"
#include "gossip/fixtures.hpp"
#include "gossip/repro.hpp"
#include "gossip/watermark.hpp"

using json = nlohmann::json;
using namespace gossip;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::string format = "text";
    long long budget = 5'000'000;

    bool json_mode() const { return format == "json"; }
};

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw ParameterError("empty integer list `" + csv + "`");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(1, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ResourceError("cannot write " + path);
    out << content;
}

// Exit codes: 0 success, 1 domain failure, 2 usage/parse problems.
int run(int argc, char** argv) {
    CLI::App app{"gossipkit: combinatorial fingerprinting codes, traceability schemes and pirate tracing"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--seed", g.seed, "seed for all randomized behavior");
    app.add_option("--format", g.format, "output format: text|json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--budget", g.budget, "ceiling on brute-force work");

    int exit_code = 0;

    // ---- design ----------------------------------------------------------
    auto* design_cmd = app.add_subcommand("design", "construct, verify and inspect block designs");
    design_cmd->require_subcommand(1);

    {
        auto* make = design_cmd->add_subcommand("make", "construct a design");
        auto kind = std::make_shared<std::string>();
        auto p = std::make_shared<int>(0);
        auto v = std::make_shared<int>(0);
        auto base = std::make_shared<std::string>();
        auto out_path = std::make_shared<std::string>();
        make->add_option("--kind", *kind, "projective|steiner|inversive|cyclic|fano")->required();
        make->add_option("--p", *p, "prime parameter");
        make->add_option("--v", *v, "point count / modulus");
        make->add_option("--base", *base, "comma-separated base block (cyclic)");
        make->add_option("-o,--out", *out_path, "output file (default stdout)");
        make->callback([=]() {
            Design d;
            if (*kind == "projective") d = projective_plane(*p);
            else if (*kind == "steiner") d = steiner_triple(*v);
            else if (*kind == "inversive") d = inversive_plane(*p);
            else if (*kind == "cyclic") d = cyclic_design(parse_int_list(*base), *v);
            else if (*kind == "fano") d = fixtures::fano_design();
            else throw ParameterError("unknown design kind `" + *kind + "`");
            write_output(*out_path, save_design_text(d));
        });
    }
    {
        auto* verify = design_cmd->add_subcommand("verify", "check the design property exhaustively");
        auto path = std::make_shared<std::string>();
        verify->add_option("file", *path, "design file")->required();
        verify->callback([=, &g, &exit_code]() {
            std::istringstream in(read_file(*path));
            const Design d = load_design(in, /*verify=*/false);
            const VerifyReport rep = verify_design(d);
            if (g.json_mode()) {
                json j{{"valid", rep.valid},
                       {"structural_ok", rep.structural_ok},
                       {"blocks", rep.block_count},
                       {"forced_blocks", rep.forced_b}};
                if (!rep.error.empty()) j["error"] = rep.error;
                if (rep.witness) j["witness"] = *rep.witness;
                std::cout << j.dump() << '\n';
            } else if (rep.valid) {
                std::cout << "valid " << d.t << "-(" << d.v << "," << d.k << "," << d.lambda << ") design, b = "
                          << rep.block_count << '\n';
            } else if (!rep.structural_ok) {
                std::cout << "invalid: " << rep.error << '\n';
            } else {
                std::cout << "invalid: subset {";
                for (std::size_t i = 0; i < rep.witness->size(); ++i)
                    std::cout << (i ? ", " : "") << (*rep.witness)[i];
                std::cout << "} occurs in " << rep.witness_count << " blocks, expected " << d.lambda << '\n';
            }
            if (!rep.valid) exit_code = 1;
        });
    }
    {
        auto* lam = design_cmd->add_subcommand("lambda", "block-counting values lambda_s / lambda-bar_s");
        auto path = std::make_shared<std::string>();
        auto s = std::make_shared<int>(0);
        auto bar = std::make_shared<bool>(false);
        lam->add_option("file", *path, "design file")->required();
        lam->add_option("--s", *s, "subset size")->required();
        lam->add_flag("--bar", *bar, "count blocks disjoint from the subset instead");
        lam->callback([=, &g]() {
            std::istringstream in(read_file(*path));
            const Design d = load_design(in);
            const long long value = *bar ? lambda_bar_s(d, *s) : lambda_s(d, *s);
            if (g.json_mode())
                std::cout << json{{*bar ? "lambda_bar" : "lambda", value}, {"s", *s}}.dump() << '\n';
            else
                std::cout << (*bar ? "lambda_bar_" : "lambda_") << *s << " = " << value << '\n';
        });
    }

    // ---- gossip ----------------------------------------------------------
    auto* gossip_cmd = app.add_subcommand("gossip", "build and inspect gossip codes");
    gossip_cmd->require_subcommand(1);
    {
        auto* fd = gossip_cmd->add_subcommand("from-design", "code from a lambda=1 design file");
        auto path = std::make_shared<std::string>();
        auto assign = std::make_shared<std::string>("canonical");
        auto out_path = std::make_shared<std::string>();
        fd->add_option("file", *path, "design file")->required();
        fd->add_option("--assign", *assign, "symbol assignment: canonical|development")
            ->check(CLI::IsMember({"canonical", "development"}));
        fd->add_option("-o,--out", *out_path, "output file (default stdout)");
        fd->callback([=]() {
            std::istringstream in(read_file(*path));
            const Design d = load_design(in);
            const GossipCode code =
                from_design(d, *assign == "development" ? SymbolAssign::Development : SymbolAssign::Canonical);
            write_output(*out_path, save_code_text(code));
        });
    }
    {
        auto* sq = gossip_cmd->add_subcommand("square", "the all-symbols square code");
        auto q = std::make_shared<int>(0);
        auto out_path = std::make_shared<std::string>();
        sq->add_option("q", *q, "alphabet size")->required();
        sq->add_option("-o,--out", *out_path, "output file (default stdout)");
        sq->callback([=]() { write_output(*out_path, save_code_text(square_gossip(*q))); });
    }
    {
        auto* fg = gossip_cmd->add_subcommand("full", "code with all (q-1)-subset keys");
        auto M = std::make_shared<int>(0);
        auto q = std::make_shared<int>(0);
        auto out_path = std::make_shared<std::string>();
        fg->add_option("M", *M, "codeword count")->required();
        fg->add_option("q", *q, "alphabet size")->required();
        fg->add_option("-o,--out", *out_path, "output file (default stdout)");
        fg->callback([=]() { write_output(*out_path, save_code_text(full_gossip(*M, *q))); });
    }
    {
        auto* pr = gossip_cmd->add_subcommand("params", "shortest-code parameters for (M, q, c)");
        auto M = std::make_shared<int>(0);
        auto q = std::make_shared<int>(0);
        auto c = std::make_shared<int>(0);
        pr->add_option("M", *M)->required();
        pr->add_option("q", *q)->required();
        pr->add_option("c", *c)->required();
        pr->callback([=, &g]() {
            const CodeParams p = code_params(*M, *q, *c);
            if (g.json_mode())
                std::cout << json{{"l", p.length}, {"w", p.weight}, {"d", p.distance}}.dump() << '\n';
            else
                std::cout << "l = " << p.length << "\nw = " << p.weight << "\nd = " << p.distance << '\n';
        });
    }

    // ---- ts --------------------------------------------------------------
    auto* ts_cmd = app.add_subcommand("ts", "traceability schemes");
    ts_cmd->require_subcommand(1);
    {
        auto* tr = ts_cmd->add_subcommand("trace", "exposed users for a pirate decoder");
        auto path = std::make_shared<std::string>();
        auto decoder = std::make_shared<std::string>();
        tr->add_option("scheme", *path, "scheme file")->required();
        tr->add_option("--decoder", *decoder, "comma-separated base keys")->required();
        tr->callback([=, &g, &exit_code]() {
            const TraceabilityScheme ts = load_scheme_text(read_file(*path));
            const auto exposed = ts_trace(ts, parse_int_list(*decoder));
            if (g.json_mode()) {
                std::cout << json{{"exposed", exposed}}.dump() << '\n';
            } else if (exposed.empty()) {
                std::cout << "untraceable\n";
            } else {
                std::cout << "exposed:";
                for (int u : exposed) std::cout << ' ' << u;
                std::cout << '\n';
            }
            if (exposed.empty()) exit_code = 1;
        });
    }
    {
        auto* tg = ts_cmd->add_subcommand("to-gossip", "gossip code whose columns are the private keys");
        auto path = std::make_shared<std::string>();
        auto c = std::make_shared<int>(2);
        auto assign = std::make_shared<std::string>("canonical");
        auto out_path = std::make_shared<std::string>();
        tg->add_option("scheme", *path, "scheme file")->required();
        tg->add_option("--c", *c, "collusion size")->required();
        tg->add_option("--assign", *assign, "canonical|development")
            ->check(CLI::IsMember({"canonical", "development"}));
        tg->add_option("-o,--out", *out_path, "output file (default stdout)");
        tg->callback([=]() {
            const TraceabilityScheme ts = load_scheme_text(read_file(*path));
            const GossipCode code =
                ts_to_gossip(ts, *c, *assign == "development" ? SymbolAssign::Development : SymbolAssign::Canonical);
            write_output(*out_path, save_code_text(code));
        });
    }
    {
        auto* fc = ts_cmd->add_subcommand("from-cyclic", "scheme developed from a base block");
        auto base = std::make_shared<std::string>();
        auto v = std::make_shared<int>(0);
        auto out_path = std::make_shared<std::string>();
        fc->add_option("--base", *base, "comma-separated base block")->required();
        fc->add_option("--v", *v, "modulus")->required();
        fc->add_option("-o,--out", *out_path, "output file (default stdout)");
        fc->callback([=]() { write_output(*out_path, save_scheme_text(ts_from_cyclic(parse_int_list(*base), *v))); });
    }
    {
        auto* fgo = ts_cmd->add_subcommand("from-gossip", "scheme from a shortest code, with strength w");
        auto path = std::make_shared<std::string>();
        auto out_path = std::make_shared<std::string>();
        fgo->add_option("code", *path, "code file")->required();
        fgo->add_option("-o,--out", *out_path, "scheme output file (default stdout)");
        fgo->callback([=, &g]() {
            const GossipCode code = load_code_text(read_file(*path));
            const auto [w, ts] = gossip_to_ts(code);
            if (g.json_mode())
                std::cout << json{{"w", w}}.dump() << '\n';
            else
                std::cout << "w = " << w << '\n';
            write_output(*out_path, save_scheme_text(ts));
        });
    }

    // ---- simulate / trace --------------------------------------------------
    {
        auto* sim = app.add_subcommand("simulate", "pirate word of a coalition under a strategy");
        auto path = std::make_shared<std::string>();
        auto coalition = std::make_shared<std::string>();
        auto strategy = std::make_shared<std::string>("only-erasures");
        auto oversize = std::make_shared<bool>(false);
        sim->add_option("code", *path, "code file")->required();
        sim->add_option("--coalition", *coalition, "comma-separated members")->required();
        sim->add_option("--strategy", *strategy, "no-erasures|selective-erasures|only-erasures")
            ->check(CLI::IsMember({"no-erasures", "selective-erasures", "only-erasures"}));
        sim->add_flag("--allow-oversize", *oversize, "permit coalitions larger than c (out of model)");
        sim->callback([=, &g]() {
            const GossipCode code = load_code_text(read_file(*path));
            Strategy st = Strategy::OnlyErasures;
            if (*strategy == "no-erasures") st = Strategy::NoErasures;
            else if (*strategy == "selective-erasures") st = Strategy::SelectiveErasures;
            const PirateWord word =
                make_pirate_word(code, parse_int_list(*coalition), st, g.seed, {}, *oversize);
            if (g.json_mode()) {
                json j{{"word", word_to_string(word)}, {"out_of_model", word.out_of_model}};
                std::cout << j.dump() << '\n';
            } else {
                std::cout << word_to_string(word) << '\n';
                if (word.out_of_model) std::cerr << "note: coalition exceeds c, out-of-model word\n";
            }
        });
    }
    {
        auto* tr = app.add_subcommand("trace", "trace a pirate word");
        auto code_path = std::make_shared<std::string>();
        auto word_path = std::make_shared<std::string>();
        auto method = std::make_shared<std::string>("nonzero");
        auto c = std::make_shared<int>(0);
        tr->add_option("code", *code_path, "code file")->required();
        tr->add_option("word", *word_path, "pirate word file")->required();
        tr->add_option("--method", *method, "nonzero|zeros|brute")
            ->check(CLI::IsMember({"nonzero", "zeros", "brute"}));
        tr->add_option("--c", *c, "coalition bound for brute force (default: the code's c)");
        tr->callback([=, &g, &exit_code]() {
            const GossipCode code = load_code_text(read_file(*code_path));
            const PirateWord word = load_word_text(read_file(*word_path), code.alphabet);
            TraceReport rep;
            if (*method == "nonzero") rep = trace_nonzero(code, word);
            else if (*method == "zeros") rep = trace_only_erasures(code, word);
            else rep = brute_force_trace(code, word, *c > 0 ? *c : code.collusion, g.budget);
            if (g.json_mode()) {
                json j{{"accused", rep.accused}, {"untraceable", rep.untraceable}};
                if (!rep.coalitions.empty()) j["coalitions"] = rep.coalitions;
                std::cout << j.dump() << '\n';
            } else if (rep.untraceable) {
                std::cout << "untraceable\n";
            } else {
                std::cout << "accused:";
                for (int u : rep.accused) std::cout << ' ' << u;
                std::cout << '\n';
                for (const auto& W : rep.coalitions) {
                    std::cout << "coalition:";
                    for (int u : W) std::cout << ' ' << u;
                    std::cout << '\n';
                }
            }
            if (rep.untraceable) exit_code = 1;
        });
    }

    // ---- concat ------------------------------------------------------------
    auto* concat_cmd = app.add_subcommand("concat", "concatenated codes");
    concat_cmd->require_subcommand(1);
    {
        auto* bd = concat_cmd->add_subcommand("build", "combine an inner code with an outer code file");
        auto inner = std::make_shared<std::string>();
        auto outer_path = std::make_shared<std::string>();
        auto out_path = std::make_shared<std::string>();
        bd->add_option("--inner", *inner, "fp342|square4|@<inner-code-file>")->required();
        bd->add_option("--outer", *outer_path, "outer gossip code file")->required();
        bd->add_option("-o,--out", *out_path, "output file (default stdout)");
        bd->callback([=]() {
            InnerCode in_code;
            if (*inner == "fp342") in_code = builtin_fp_342();
            else if (*inner == "square4") in_code = fixtures::builtin_square4();
            else if (inner->size() > 1 && (*inner)[0] == '@')
                in_code = inner_from_gossip(load_code_text(read_file(inner->substr(1))));
            else throw ParameterError("unknown inner code `" + *inner + "`");
            const GossipCode outer = load_code_text(read_file(*outer_path));
            write_output(*out_path, save_ccode_text(concatenate(in_code, outer)));
        });
    }
    {
        auto* tr = concat_cmd->add_subcommand("trace", "two-stage tracing of a concatenated pirate word");
        auto cc_path = std::make_shared<std::string>();
        auto word_path = std::make_shared<std::string>();
        tr->add_option("ccode", *cc_path, "concatenated code file")->required();
        tr->add_option("word", *word_path, "pirate word over the inner alphabet")->required();
        tr->callback([=, &g, &exit_code]() {
            const ConcatenatedCode cc = load_ccode_text(read_file(*cc_path));
            const PirateWord word = load_word_text(read_file(*word_path), cc.inner.alphabet);
            const TraceReport rep = concat_trace(cc, word);
            if (g.json_mode()) {
                std::cout << json{{"accused", rep.accused}, {"stage", rep.stage}, {"untraceable", rep.untraceable}}
                                 .dump()
                          << '\n';
            } else if (rep.untraceable) {
                std::cout << "untraceable\n";
            } else {
                std::cout << "accused:";
                for (int u : rep.accused) std::cout << ' ' << u;
                std::cout << " (stage " << rep.stage << ")\n";
            }
            if (rep.untraceable) exit_code = 1;
        });
    }

    // ---- wm ----------------------------------------------------------------
    auto* wm_cmd = app.add_subcommand("wm", "wavelet watermarking of grayscale images");
    wm_cmd->require_subcommand(1);
    {
        auto* em = wm_cmd->add_subcommand("embed", "embed a codeword into a PGM image");
        auto in_path = std::make_shared<std::string>();
        auto out_path = std::make_shared<std::string>();
        auto code_path = std::make_shared<std::string>();
        auto row = std::make_shared<int>(1);
        auto alpha = std::make_shared<double>(kDefaultAlpha);
        em->add_option("input", *in_path)->required();
        em->add_option("output", *out_path)->required();
        em->add_option("--code", *code_path, "code file")->required();
        em->add_option("--row", *row, "1-based codeword row")->required();
        em->add_option("--alpha", *alpha, "embedding strength");
        em->callback([=, &g]() {
            const GossipCode code = load_code_text(read_file(*code_path));
            if (*row < 1 || *row > code.num_codewords) throw ParameterError("row out of range");
            const GrayImage img = load_pgm_file(*in_path);
            const GrayImage marked = wm_embed(img, code.matrix[*row - 1], code.alphabet, *alpha, g.seed);
            save_pgm_file(marked, *out_path);
        });
    }
    {
        auto* mk = wm_cmd->add_subcommand("noise", "write a seeded noise test image");
        auto out_path = std::make_shared<std::string>();
        auto width = std::make_shared<int>(64);
        auto height = std::make_shared<int>(64);
        mk->add_option("output", *out_path)->required();
        mk->add_option("--width", *width);
        mk->add_option("--height", *height);
        mk->callback([=, &g]() { save_pgm_file(noise_image(*width, *height, g.seed), *out_path); });
    }
    {
        auto* de = wm_cmd->add_subcommand("detect", "blind watermark detection");
        auto in_path = std::make_shared<std::string>();
        auto code_path = std::make_shared<std::string>();
        auto row = std::make_shared<int>(1);
        auto threshold = std::make_shared<double>(kDefaultThreshold);
        de->add_option("input", *in_path)->required();
        de->add_option("--code", *code_path, "code file")->required();
        de->add_option("--row", *row, "1-based codeword row")->required();
        de->add_option("--threshold", *threshold, "detection threshold");
        de->callback([=, &g, &exit_code]() {
            const GossipCode code = load_code_text(read_file(*code_path));
            if (*row < 1 || *row > code.num_codewords) throw ParameterError("row out of range");
            const GrayImage img = load_pgm_file(*in_path);
            const DetectResult res = wm_detect(img, code.matrix[*row - 1], code.alphabet, g.seed, *threshold);
            if (g.json_mode())
                std::cout << json{{"correlation", res.correlation}, {"detected", res.detected}}.dump() << '\n';
            else
                std::cout << "correlation = " << res.correlation << (res.detected ? " detected" : " not detected")
                          << '\n';
            if (!res.detected) exit_code = 1;
        });
    }

    // ---- repro ---------------------------------------------------------------
    {
        auto* rp = app.add_subcommand("repro", "re-derive a reference table and compare with the fixture");
        auto target = std::make_shared<std::string>();
        rp->add_option("target", *target, "fixture name or `all`")->required();
        rp->callback([=, &g, &exit_code]() {
            std::vector<std::string> targets =
                *target == "all" ? repro_targets() : std::vector<std::string>{*target};
            bool all_ok = true;
            for (const auto& t : targets) {
                const ReproResult r = repro(t);
                if (g.json_mode()) {
                    std::cout << json{{"target", r.target}, {"ok", r.ok}, {"detail", r.detail}}.dump() << '\n';
                } else {
                    std::cout << (r.ok ? "ok   " : "FAIL ") << r.target << ": " << r.detail << '\n';
                    if (!r.ok) std::cout << unified_diff(r.expected, r.actual);
                }
                all_ok = all_ok && r.ok;
            }
            if (!all_ok) exit_code = 1;
        });
    }

    // global flags (--seed, --format, --budget) may follow a subcommand
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (auto* sub : a->get_subcommands([](const CLI::App*) { return true; })) allow_fallthrough(sub);
    };
    allow_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e); // prints help or the usage error
        return rc == 0 ? 0 : 2;
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const StructuralError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ModelError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) { // domain failures: consistency, resource, integrity
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
