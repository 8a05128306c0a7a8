// Batch front door for the library: construct codes, generate and certify
// hypergraphs, verify distance/locality/bounds, encode/decode/repair, and
// build the derived array and hierarchical families.
//
// Exit codes: 0 success (and verified-true), 1 verified-false (non-optimal,
// unrecoverable, not free), 2 usage or precondition error, 3 work cap
// exceeded.  Diagnostics go to stderr; artifacts go to --out or stdout.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lrc/codec.hpp"
#include "lrc/common.hpp"
#include "lrc/construct.hpp"
#include "lrc/extend.hpp"
#include "lrc/galois.hpp"
#include "lrc/hypergraph.hpp"
#include "lrc/serialize.hpp"
#include "lrc/verify.hpp"

namespace {

using lrc::json;

// "13" or "2^3"; --modulus supplies explicit coefficients (low-to-high).
lrc::Field parse_field(const std::string& spec, const std::string& modulus_csv) {
    std::uint64_t p = 0;
    unsigned e = 1;
    const auto caret = spec.find('^');
    try {
        p = std::stoull(spec.substr(0, caret));
        if (caret != std::string::npos) e = static_cast<unsigned>(std::stoul(spec.substr(caret + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("--field expects p or p^e, got '" + spec + "'");
    }
    if (modulus_csv.empty()) return lrc::Field(p, e);
    std::vector<std::uint32_t> mod;
    std::stringstream ss(modulus_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) mod.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    return lrc::Field(p, e, mod);
}

// Comma list of values and inclusive a-b ranges: "0,3,5-8" -> 0,3,5,6,7,8.
std::vector<std::uint32_t> parse_list(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        const auto dash = tok.find('-');
        try {
            if (dash == std::string::npos) {
                out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
            } else {
                const auto lo = std::stoul(tok.substr(0, dash)), hi = std::stoul(tok.substr(dash + 1));
                if (hi < lo) throw std::invalid_argument("range");
                for (auto v = lo; v <= hi; ++v) out.push_back(static_cast<std::uint32_t>(v));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad list element '" + tok + "' (expected v or lo-hi)");
        }
    }
    return out;
}

// Semicolon-separated groups of comma lists: "0,1,2;3-5".
std::vector<std::vector<std::uint32_t>> parse_groups(const std::string& s) {
    std::vector<std::vector<std::uint32_t>> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';'))
        if (!tok.empty()) out.push_back(parse_list(tok));
    return out;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << content;
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field workbench for locally repairable erasure codes"};
    app.require_subcommand(1);
    // fallthrough lets the global flags above appear after the subcommand name
    auto add_sub = [&app](const char* name, const char* desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->fallthrough();
        // long-only help so the short -h stays free for the --h option
        s->set_help_flag("--help", "print this help and exit");
        return s;
    };

    std::string field_spec = "2", modulus_csv, out_path, format = "text";
    std::uint64_t seed = 1;
    lrc::WorkCaps caps;
    app.add_option("--field", field_spec, "field as p or p^e (default 2)");
    app.add_option("--modulus", modulus_csv, "extension modulus coefficients, low to high");
    app.add_option("--seed", seed, "64-bit seed for the generators");
    app.add_option("--cap-codewords", caps.codewords, "codeword enumeration budget");
    app.add_option("--cap-subsets", caps.subsets, "column-subset rank-test budget");
    app.add_option("--cap-enumeration", caps.enumeration, "hypergraph/pattern enumeration budget");
    app.add_option("--out", out_path, "write the artifact here instead of stdout");
    app.add_option("--format", format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // construct-a
    auto* ca = add_sub("construct-a", "build a family-A code from groups or a hypergraph");
    std::string ca_groups, ca_hg;
    unsigned ca_r = 0, ca_delta = 0, ca_d = 0, ca_repeat = 0;
    ca->add_option("--groups", ca_groups, "generator groups, e.g. \"0-4;4-8\"");
    ca->add_option("--hypergraph", ca_hg, "edge file from hypergraph-gen; edges become groups");
    ca->add_option("--repeat", ca_repeat, "repeat a single --groups group this many times");
    ca->add_option("--r", ca_r, "locality radius")->required();
    ca->add_option("--delta", ca_delta, "local distance")->required();
    ca->add_option("--d", ca_d, "target distance")->required();

    // construct-b
    auto* cb = add_sub("construct-b", "build a family-B code (global columns) from groups or a hypergraph");
    std::string cb_groups, cb_hg, cb_global;
    unsigned cb_r = 0, cb_delta = 0, cb_v = 0, cb_h = 0;
    cb->add_option("--groups", cb_groups, "l full groups then one short group");
    cb->add_option("--hypergraph", cb_hg, "edge file; the last edge is truncated to v+delta-1");
    cb->add_option("--global", cb_global, "global column elements")->required();
    cb->add_option("--r", cb_r, "locality radius")->required();
    cb->add_option("--delta", cb_delta, "local distance")->required();
    cb->add_option("--v", cb_v, "short-group parameter")->required();
    cb->add_option("--h", cb_h, "number of global columns")->required();

    // hypergraph-gen
    auto* hgen = add_sub("hypergraph-gen", "generate a certified span-free hypergraph");
    std::string hg_vertices, hg_mode = "greedy", hg_p = "auto";
    unsigned hg_R = 0, hg_delta = 0, hg_mu = 0;
    hgen->add_option("--vertices", hg_vertices, "vertex list, e.g. \"0-12\"")->required();
    hgen->add_option("--R", hg_R, "edge size")->required();
    hgen->add_option("--delta", hg_delta, "locality parameter of the freeness family")->required();
    hgen->add_option("--mu", hg_mu, "largest forbidden subset size")->required();
    hgen->add_option("--mode", hg_mode, "greedy or random")->check(CLI::IsMember({"greedy", "random"}));
    hgen->add_option("--p", hg_p, "random mode keep probability, or 'auto'");

    // hypergraph-check
    auto* hchk = add_sub("hypergraph-check", "certify span-freeness of a hypergraph file");
    std::string hc_file;
    unsigned hc_delta = 0, hc_mu = 0;
    hchk->add_option("--hypergraph", hc_file, "hypergraph JSON")->required();
    hchk->add_option("--delta", hc_delta, "locality parameter")->required();
    hchk->add_option("--mu", hc_mu, "largest forbidden subset size")->required();

    // verify
    auto* vf = add_sub("verify", "measure distance and locality, check the bound");
    std::string vf_code, vf_method = "auto";
    vf->add_option("--code", vf_code, "code descriptor JSON")->required();
    vf->add_option("--method", vf_method, "distance method")->check(CLI::IsMember({"auto", "codewords", "columns"}));

    // encode
    auto* enc = add_sub("encode", "encode a message with the systematic generator");
    std::string enc_code, enc_message;
    enc->add_option("--code", enc_code, "code descriptor JSON")->required();
    enc->add_option("--message", enc_message, "k message symbols, comma separated")->required();

    // decode
    auto* dec = add_sub("decode", "fill erasures (nulls) in a received word");
    std::string dec_code, dec_word;
    dec->add_option("--code", dec_code, "code descriptor JSON")->required();
    dec->add_option("--word", dec_word, "codeword JSON array with null erasures")->required();

    // repair
    auto* rep = add_sub("repair", "repair one block locally");
    std::string rep_code, rep_word;
    std::size_t rep_block = 0;
    rep->add_option("--code", rep_code, "code descriptor JSON")->required();
    rep->add_option("--word", rep_word, "codeword JSON array with null erasures")->required();
    rep->add_option("--block", rep_block, "block index")->required();

    // hlrc
    auto* hl = add_sub("hlrc", "stack middle codes into a two-tier hierarchical code");
    std::string hl_groups;
    unsigned hl_r2 = 0, hl_delta2 = 0, hl_d2 = 0, hl_m1 = 0, hl_r1 = 0;
    hl->add_option("--groups", hl_groups, "middle-code generator groups")->required();
    hl->add_option("--r2", hl_r2, "inner locality radius")->required();
    hl->add_option("--delta2", hl_delta2, "inner local distance")->required();
    hl->add_option("--d2", hl_d2, "middle-code distance")->required();
    hl->add_option("--m1", hl_m1, "number of middle copies")->required();
    hl->add_option("--r1", hl_r1, "outer locality radius")->required();

    // gsd-build
    auto* gb = add_sub("gsd-build", "lay a family-B code out as a sector-disjoint array");
    std::string gb_construction = "C", gb_S, gb_G, gb_hg;
    unsigned gb_r = 0, gb_delta = 0, gb_h = 0, gb_l = 0, gb_v = 0, gb_t = 0;
    gb->add_option("--construction", gb_construction, "C or D")->check(CLI::IsMember({"C", "D"}));
    gb->add_option("--r", gb_r, "locality radius")->required();
    gb->add_option("--delta", gb_delta, "local distance")->required();
    gb->add_option("--S", gb_S, "global element set")->required();
    gb->add_option("--h", gb_h, "construction C: number of global columns");
    gb->add_option("--l", gb_l, "construction C: full-group count");
    gb->add_option("--G", gb_G, "construction C: the shared group");
    gb->add_option("--v", gb_v, "construction D: short-group parameter");
    gb->add_option("--t", gb_t, "construction D: hypergraph regularity");
    gb->add_option("--hypergraph", gb_hg, "construction D: t-regular hypergraph JSON");

    // gsd-verify
    auto* gv = add_sub("gsd-verify", "exhaustively test one (gamma, s) claim of an array code");
    std::string gv_file;
    unsigned gv_gamma = 0, gv_s = 0;
    gv->add_option("--gsd", gv_file, "array descriptor JSON")->required();
    gv->add_option("--gamma", gv_gamma, "whole columns erased")->required();
    gv->add_option("--s", gv_s, "extra sectors erased")->required();

    // bound
    auto* bd = add_sub("bound", "bound and redundancy calculator");
    std::size_t bd_n = 0, bd_k = 0, bd_d = 0;
    unsigned bd_r = 0, bd_delta = 0, bd_r1 = 0, bd_delta1 = 0, bd_r2 = 0, bd_delta2 = 0;
    bd->add_option("--n", bd_n, "code length")->required();
    bd->add_option("--k", bd_k, "dimension (enables direct bound mode)");
    bd->add_option("--d", bd_d, "distance");
    bd->add_option("--r", bd_r, "locality radius");
    bd->add_option("--delta", bd_delta, "local distance");
    bd->add_option("--r1", bd_r1, "two-tier outer radius");
    bd->add_option("--delta1", bd_delta1, "two-tier outer local distance");
    bd->add_option("--r2", bd_r2, "two-tier inner radius");
    bd->add_option("--delta2", bd_delta2, "two-tier inner local distance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const lrc::Field field = parse_field(field_spec, modulus_csv);

        auto emit_code = [&](const lrc::LrcCode& code) {
            emit(out_path, lrc::canonical_dump(lrc::code_to_json(code)));
        };

        if (*ca) {
            lrc::LrcCode code(field);
            if (!ca_hg.empty()) {
                code = lrc::from_hypergraph_a(lrc::hypergraph_from_json(load_json(ca_hg)), ca_r, ca_delta, ca_d,
                                              caps);
            } else if (ca_repeat > 0) {
                auto groups = parse_groups(ca_groups);
                if (groups.size() != 1)
                    throw std::invalid_argument("construct-a: --repeat takes exactly one group");
                code = lrc::construct_a_repeated(field, groups[0], ca_repeat, ca_r, ca_delta, ca_d);
            } else {
                code = lrc::construct_a(field, parse_groups(ca_groups), ca_r, ca_delta, ca_d);
            }
            emit_code(code);
            return 0;
        }

        if (*cb) {
            lrc::LrcCode code(field);
            if (!cb_hg.empty()) {
                code = lrc::from_hypergraph_b(lrc::hypergraph_from_json(load_json(cb_hg)), parse_list(cb_global),
                                              cb_r, cb_delta, cb_v, cb_h, caps);
            } else {
                code = lrc::construct_b(field, parse_groups(cb_groups), parse_list(cb_global), cb_r, cb_delta,
                                        cb_v, cb_h);
            }
            emit_code(code);
            return 0;
        }

        if (*hgen) {
            lrc::FreenessSpec spec(hg_R, hg_delta, hg_mu);
            for (unsigned i : spec.dropped)
                std::cerr << "note: threshold for " << i << "-subsets cannot bind and was dropped\n";
            lrc::SparseResult res = [&] {
                if (hg_mode == "greedy")
                    return lrc::greedy_sparse(field, parse_list(hg_vertices), hg_R, spec, seed, caps);
                std::optional<double> p;
                if (hg_p != "auto") p = std::stod(hg_p);
                return lrc::random_sparse(field, parse_list(hg_vertices), hg_R, spec, p, seed, caps);
            }();
            std::cerr << "edges=" << res.hg.edges.size() << " sampled=" << res.sampled
                      << " deleted=" << res.deleted << " p=" << res.p_used << "\n";
            emit(out_path, lrc::canonical_dump(lrc::hypergraph_to_json(res.hg)));
            return 0;
        }

        if (*hchk) {
            lrc::Hypergraph hg = lrc::hypergraph_from_json(load_json(hc_file));
            lrc::FreenessSpec spec(hg.R, hc_delta, hc_mu);
            lrc::SimultaneousFreeCheck res = lrc::is_simultaneously_free(hg, spec, caps);
            if (format == "json") {
                json j;
                j["free"] = res.free;
                if (!res.free) {
                    j["failed_size"] = res.failed_size;
                    j["witness"] = res.detail.witness;
                    j["violating_threshold"] = res.detail.violating_threshold;
                }
                emit(out_path, lrc::canonical_dump(j));
            } else {
                std::ostringstream os;
                os << "free=" << bool_word(res.free) << "\n";
                if (!res.free) {
                    os << "failed_size=" << res.failed_size << "\nwitness=";
                    for (std::size_t i = 0; i < res.detail.witness.size(); ++i)
                        os << (i ? "," : "") << res.detail.witness[i];
                    os << "\n";
                }
                emit(out_path, os.str());
            }
            return res.free ? 0 : 1;
        }

        if (*vf) {
            lrc::LrcCode code = lrc::code_from_json(load_json(vf_code));
            lrc::MethodChoice mc = vf_method == "codewords"  ? lrc::MethodChoice::codewords
                                   : vf_method == "columns"  ? lrc::MethodChoice::columns
                                                             : lrc::MethodChoice::automatic;
            lrc::DistanceReport dist = lrc::min_distance(code, mc, caps);
            lrc::LocalityReport loc = lrc::verify_locality(code, caps);
            lrc::OptimalityReport opt = lrc::singleton_report(code, dist.d, loc.pass);
            if (format == "json") {
                emit(out_path, lrc::canonical_dump(lrc::report_to_json(opt, dist)));
            } else {
                std::ostringstream os;
                os << "n=" << opt.n << "\nk=" << opt.k << "\nd_measured=" << opt.d_measured
                   << "\nbound_used=" << opt.bound_used << "\nbound=" << opt.bound << "\ndefect=" << opt.defect
                   << "\nlocality_ok=" << bool_word(opt.locality_ok) << "\noptimal=" << bool_word(opt.optimal)
                   << "\nmethod=" << (dist.method == lrc::DistanceMethod::codewords ? "codewords" : "columns")
                   << "\nwork_performed=" << dist.work << "\n";
                emit(out_path, os.str());
            }
            return opt.optimal ? 0 : 1;
        }

        if (*enc) {
            lrc::LrcCode code = lrc::code_from_json(load_json(enc_code));
            lrc::Codeword w = lrc::encode(code, parse_list(enc_message));
            emit(out_path, lrc::canonical_dump(lrc::codeword_to_json(w)));
            return 0;
        }

        if (*dec) {
            lrc::LrcCode code = lrc::code_from_json(load_json(dec_code));
            lrc::DecodeResult res = lrc::decode_erasures(code, lrc::codeword_from_json(load_json(dec_word)));
            if (res.status != lrc::DecodeStatus::recovered) {
                std::cerr << (res.status == lrc::DecodeStatus::ambiguous
                                  ? "decode: erased columns are dependent, several codewords match\n"
                                  : "decode: known symbols violate a parity check\n");
                return 1;
            }
            emit(out_path, lrc::canonical_dump(lrc::codeword_to_json(res.word)));
            return 0;
        }

        if (*rep) {
            lrc::LrcCode code = lrc::code_from_json(load_json(rep_code));
            lrc::RepairResult res = lrc::local_repair(code, lrc::codeword_from_json(load_json(rep_word)), rep_block);
            json j;
            j["accessed"] = res.accessed;
            json pairs = json::array();
            for (const auto& [col, val] : res.repaired) {
                json p;
                p["column"] = col;
                p["symbol"] = val;
                pairs.push_back(std::move(p));
            }
            j["repaired"] = std::move(pairs);
            emit(out_path, lrc::canonical_dump(j));
            return 0;
        }

        if (*hl) {
            lrc::HlrcCode code = lrc::hlrc_construct(field, parse_groups(hl_groups), hl_r2, hl_delta2, hl_d2,
                                                     hl_m1, hl_r1, caps);
            emit(out_path, lrc::canonical_dump(lrc::hlrc_to_json(code)));
            return 0;
        }

        if (*gb) {
            lrc::GsdCode gsd(field);
            if (gb_construction == "C") {
                if (gb_G.empty()) throw std::invalid_argument("gsd-build C: --G and --l and --h are required");
                gsd = lrc::gsd_construct_c(field, gb_r, gb_delta, gb_h, gb_l, parse_list(gb_S), parse_list(gb_G));
            } else {
                if (gb_hg.empty()) throw std::invalid_argument("gsd-build D: --hypergraph, --v and --t are required");
                gsd = lrc::gsd_construct_d(field, gb_r, gb_delta, gb_v, gb_t,
                                           lrc::hypergraph_from_json(load_json(gb_hg)), parse_list(gb_S), caps);
            }
            emit(out_path, lrc::canonical_dump(lrc::gsd_to_json(gsd)));
            return 0;
        }

        if (*gv) {
            lrc::GsdCode gsd = lrc::gsd_from_json(load_json(gv_file));
            lrc::GsdVerifyReport res = lrc::gsd_verify(gsd, gv_gamma, gv_s, caps);
            if (format == "json") {
                json j;
                j["gamma"] = res.gamma;
                j["s"] = res.s;
                j["beyond"] = res.beyond;
                j["patterns"] = res.patterns;
                j["pass"] = res.pass;
                emit(out_path, lrc::canonical_dump(j));
            } else {
                std::ostringstream os;
                os << "gamma=" << res.gamma << "\ns=" << res.s << "\nbeyond=" << bool_word(res.beyond)
                   << "\npatterns=" << res.patterns << "\npass=" << bool_word(res.pass) << "\n";
                emit(out_path, os.str());
            }
            if (!res.pass && res.counterexample) {
                std::cerr << "counterexample: columns";
                for (std::size_t c : res.counterexample->columns) std::cerr << " " << c;
                std::cerr << ", sectors";
                for (const auto& [row, col] : res.counterexample->sectors)
                    std::cerr << " (" << row << "," << col << ")";
                std::cerr << "\n";
            }
            return res.pass ? 0 : 1;
        }

        if (*bd) {
            std::ostringstream os;
            json j;
            if (bd_r1 || bd_r2) {
                if (!bd_k || !bd_d) throw std::invalid_argument("bound: two-tier mode needs --n --k --d");
                std::int64_t defect = lrc::hlrc_bound_check(bd_n, bd_k, bd_d, bd_r1, bd_delta1, bd_r2, bd_delta2);
                j["defect"] = defect;
                os << "defect=" << defect << "\n";
            } else if (bd_k) {
                if (!bd_r || !bd_delta) throw std::invalid_argument("bound: need --r and --delta");
                const bool sharp = bd_d && lrc::sharp_bound_applies(bd_n, bd_d, bd_r, bd_delta);
                const std::int64_t bound = sharp ? lrc::singleton_bound_sharp(bd_n, bd_k, bd_r, bd_delta)
                                                 : lrc::singleton_bound(bd_n, bd_k, bd_r, bd_delta);
                j["bound_used"] = sharp ? 3 : 1;
                j["bound"] = bound;
                os << "bound_used=" << (sharp ? 3 : 1) << "\nbound=" << bound << "\n";
                if (bd_d) {
                    j["defect"] = bound - static_cast<std::int64_t>(bd_d);
                    os << "defect=" << bound - static_cast<std::int64_t>(bd_d) << "\n";
                }
            } else {
                if (!bd_r || !bd_delta || !bd_d)
                    throw std::invalid_argument("bound: redundancy mode needs --n --r --delta --d");
                lrc::RedundancyReport rr = lrc::optimal_redundancy(bd_n, bd_r, bd_delta, bd_d);
                j["nk"] = rr.nk;
                j["k"] = rr.k;
                j["consistent"] = rr.consistent;
                os << "nk=" << rr.nk << "\nk=" << rr.k << "\nconsistent=" << bool_word(rr.consistent) << "\n";
            }
            emit(out_path, format == "json" ? lrc::canonical_dump(j) : os.str());
            return 0;
        }

        std::cerr << "no subcommand\n";
        return 2;
    } catch (const lrc::cap_exceeded& e) {
        std::cerr << "work cap: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
