#include "cosetlab/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <string>
#include <utility>

#include "cosetlab/code.hpp"
#include "cosetlab/common.hpp"
#include "cosetlab/errormodel.hpp"
#include "cosetlab/geometry.hpp"
#include "cosetlab/leadercw.hpp"
#include "cosetlab/leaderset.hpp"

namespace cosetlab::cli {

namespace {

struct Options {
    std::string code_path;
    std::string order = "lex";
    std::uint64_t max_enum = kDefaultMaxEnum;
    std::string format = "text";
    bool strict_voronoi = false;
    std::string lh_minimality = "subword1";
    bool all_witnesses = false;
    bool compare_leader_codewords = false;
    std::string decode_word;
    std::string decode_set = "trial";
};

bool tsv(const Options& opt) { return opt.format == "tsv"; }

WeightCompatibleOrder order_of(const Options& opt) {
    return WeightCompatibleOrder{tie_break_from_name(opt.order)};
}

void print_report(std::ostream& out, const CheckReport& rep, bool& all_passed) {
    if (rep.passed()) {
        out << "PASS " << rep.name << " (" << rep.cases << " cases)\n";
    } else {
        all_passed = false;
        out << "FAIL " << rep.name << " (" << rep.violation_count << " violations in "
            << rep.cases << " cases)\n";
        for (const std::string& v : rep.violations) out << "  violation: " << v << "\n";
    }
    for (const std::string& n : rep.notes) out << "  note: " << n << "\n";
}

int cmd_coset_leaders(const Options& opt, std::ostream& out) {
    LinearCode code = load_code_file(opt.code_path);
    ListClosure lc = build_list(code, order_of(opt), opt.max_enum);
    const WordSpace& ws = lc.code().space();
    for (std::uint64_t s = 0; s < lc.table().slot_count(); ++s) {
        const CosetRecord& rec = lc.table().at(s);
        std::string syndrome = lc.code().format_syndrome(lc.code().syndrome_at(s));
        if (tsv(opt)) {
            for (const Word& leader : rec.leaders)
                out << syndrome << "\t" << rec.weight << "\t"
                    << ws.format_word(rec.canonical_leader) << "\t" << ws.format_word(leader)
                    << "\n";
        } else {
            out << "syndrome [" << syndrome << "] weight " << rec.weight << " canonical "
                << ws.format_word(rec.canonical_leader) << " leaders:";
            for (const Word& leader : rec.leaders) out << " [" << ws.format_word(leader) << "]";
            out << "\n";
        }
    }
    return kOk;
}

int cmd_leader_codewords(const Options& opt, std::ostream& out) {
    LinearCode code = load_code_file(opt.code_path);
    ListClosure lc = build_list(code, order_of(opt), opt.max_enum);
    const WordSpace& ws = lc.code().space();
    LeaderCodewordSet set = leader_codewords(lc);
    if (!tsv(opt)) out << set.size() << " leader codewords\n";
    for (const LeaderCodeword& lw : set.items()) {
        if (tsv(opt)) {
            if (opt.all_witnesses) {
                for (const LeaderWitness& w : lw.witnesses)
                    out << ws.format_word(lw.word) << "\t" << ws.format_word(w.n1) << "\t" << w.i
                        << "," << w.j << "\t" << ws.format_word(w.n2) << "\n";
            } else {
                out << ws.format_word(lw.word) << "\n";
            }
        } else {
            out << "[" << ws.format_word(lw.word) << "] weight "
                << ws.hamming_weight(lw.word) << " witnesses " << lw.witnesses.size() << "\n";
            if (opt.all_witnesses)
                for (const LeaderWitness& w : lw.witnesses)
                    out << "  n1 [" << ws.format_word(w.n1) << "] + e(" << w.i << "," << w.j
                        << ") - n2 [" << ws.format_word(w.n2) << "]\n";
        }
    }
    return kOk;
}

int cmd_trial_set(const Options& opt, std::ostream& out) {
    LinearCode code = load_code_file(opt.code_path);
    ListClosure lc = build_list(code, order_of(opt), opt.max_enum);
    const WordSpace& ws = lc.code().space();
    ErrorPartition ep = error_partition(lc);
    LeaderCodewordSet lcw = leader_codewords(lc);
    TrialSet ts = extract_trial_set(lc, lcw, ep);
    if (!tsv(opt)) out << ts.members.size() << " trial-set members\n";
    for (std::size_t i = 0; i < ts.members.size(); ++i) {
        if (tsv(opt))
            out << ws.format_word(ts.members[i]) << "\t" << ws.format_word(ts.provenance[i].first)
                << "\t" << ws.format_word(ts.provenance[i].second) << "\n";
        else
            out << "[" << ws.format_word(ts.members[i]) << "] from t ["
                << ws.format_word(ts.provenance[i].first) << "] leader ["
                << ws.format_word(ts.provenance[i].second) << "]\n";
    }
    return kOk;
}

int cmd_zero_neighbours(const Options& opt, std::ostream& out) {
    LinearCode code = load_code_file(opt.code_path);
    const WordSpace& ws = code.space();
    VoronoiOptions vopts;
    vopts.strict = opt.strict_voronoi;
    vopts.max_enum = opt.max_enum;
    std::vector<Word> zn = zero_neighbours(code, vopts);
    if (!tsv(opt)) out << zn.size() << " zero neighbours\n";
    for (const Word& z : zn)
        out << (tsv(opt) ? ws.format_word(z) : "[" + ws.format_word(z) + "]") << "\n";

    if (opt.compare_leader_codewords) {
        ListClosure lc = build_list(code, order_of(opt), opt.max_enum);
        LeaderCodewordSet lcw = leader_codewords(lc);
        std::size_t missing = 0;
        for (const LeaderCodeword& lw : lcw.items()) {
            bool present = false;
            for (const Word& z : zn)
                if (z == lw.word) present = true;
            if (!present) ++missing;
        }
        out << "leader codewords: " << lcw.size() << ", of which outside the zero neighbours: "
            << missing << "\n";
        out << "zero neighbours outside the leader codewords: ";
        std::size_t extra = 0;
        for (const Word& z : zn)
            if (!lcw.contains(ws.index_of(z))) ++extra;
        out << extra << "\n";
        if (missing != 0) return kVerificationFailure;
    }
    return kOk;
}

int cmd_decode(const Options& opt, std::ostream& out) {
    LinearCode code = load_code_file(opt.code_path);
    const WordSpace& ws = code.space();
    Word y = ws.parse_word(opt.decode_word);
    ListClosure lc = build_list(code, order_of(opt), opt.max_enum);

    std::vector<Word> set;
    if (opt.decode_set == "leader") {
        set = leader_codewords(lc).words();
    } else {
        ErrorPartition ep = error_partition(lc);
        LeaderCodewordSet lcw = leader_codewords(lc);
        set = extract_trial_set(lc, lcw, ep).members;
    }

    DecodeResult res = gradient_decode(ws, order_of(opt), y, set);
    const CosetRecord& rec = lc.table().at(lc.code().syndrome_index(y));
    bool landed = res.residual == rec.canonical_leader;
    if (tsv(opt)) {
        out << ws.format_word(res.residual) << "\t" << ws.format_word(res.codeword) << "\t"
            << res.steps << "\n";
    } else {
        out << "residual [" << ws.format_word(res.residual) << "] steps " << res.steps << "\n";
        out << "codeword [" << ws.format_word(res.codeword) << "]\n";
    }
    return landed ? kOk : kVerificationFailure;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    LinearCode code = load_code_file(opt.code_path);
    const WordSpace& ws = code.space();
    const WeightCompatibleOrder ord = order_of(opt);
    bool ok = true;

    print_report(out, verify_field_axioms(ws.field()), ok);
    print_report(out, verify_order_axioms(ws, ord, opt.max_enum), ok);

    ListClosure lc = build_list(code, ord, opt.max_enum);
    print_report(out, verify_leader_decomposition_bound(lc), ok);
    print_report(out, verify_distance1_decomposition_bound(lc), ok);

    const std::vector<Word> brute_cl = coset_leaders_brute(code, opt.max_enum);
    print_report(out, verify_completeness(lc, brute_cl), ok);
    {
        CheckReport rep;
        rep.name = "closure leaders match the brute-force leaders";
        rep.cases = 2;
        if (coset_leaders(lc) != brute_cl) rep.violation("coset leader sets differ");
        if (canonical_leaders(lc) != canonical_leaders_brute(code, ord, opt.max_enum))
            rep.violation("canonical leader sets differ");
        print_report(out, rep, ok);
    }

    LeaderCodewordSet lcw = leader_codewords(lc);
    {
        CheckReport rep;
        rep.name = "leader codewords match the brute-force set";
        rep.cases = 1;
        if (lcw.words() != leader_codewords_brute(code, opt.max_enum))
            rep.violation("leader codeword sets differ");
        print_report(out, rep, ok);
    }
    print_report(out, verify_test_set(lcw, lc), ok);
    print_report(out, verify_weight_bound(lcw, lc), ok);
    print_report(out, verify_zero_neighbour_props(lcw, lc, opt.strict_voronoi), ok);

    ErrorPartition ep = error_partition(lc);
    print_report(out, verify_h_characterization(code, ord, ep, opt.max_enum), ok);
    print_report(out, verify_monotone_structure(ws, ep), ok);

    {
        TrialSetReport rep = is_trial_set(lc, ep, lcw.words());
        CheckReport merged;
        merged.name = "leader codewords are a trial set (three routes)";
        for (const CheckReport* part : {&rep.definition, &rep.hitting, &rep.larger_half}) {
            merged.cases += part->cases;
            merged.violation_count += part->violation_count;
            for (const std::string& v : part->violations)
                if (merged.violations.size() < CheckReport::kMaxStored)
                    merged.violations.push_back(part->name + ": " + v);
        }
        for (const std::string& n : rep.notes) merged.note(n);
        print_report(out, merged, ok);
    }
    {
        CheckReport rep;
        rep.name = "extracted trial set (three routes, contained in leader codewords)";
        try {
            TrialSet ts = extract_trial_set(lc, lcw, ep);
            TrialSetReport tsr = is_trial_set(lc, ep, ts.members);
            rep.cases = tsr.definition.cases + tsr.hitting.cases + tsr.larger_half.cases;
            if (!tsr.passed()) rep.violation("extracted set fails a trial-set route");
            for (const std::string& n : tsr.notes) rep.note(n);
            rep.note("members: " + std::to_string(ts.members.size()));
        } catch (const std::runtime_error& e) {
            rep.cases += 1;
            rep.violation(e.what());
        }
        print_report(out, rep, ok);
    }

    LhMinimality mode = opt.lh_minimality == "order" ? LhMinimality::Order
                                                     : LhMinimality::Subword1;
    if (mode == LhMinimality::Subword1) {
        print_report(out, verify_larger_half_sandwich(code, ord, opt.max_enum), ok);
    } else {
        // The order-minimum reading is for comparison only; report it without
        // enforcing the sandwich.
        CheckReport rep;
        rep.name = "larger halves under the order-minimum reading";
        for (const Word& c : code.codewords(opt.max_enum)) {
            if (ws.hamming_weight(c) == 0) continue;
            for (std::uint64_t ui : larger_halves(ws, ord, c, mode, opt.max_enum)) {
                ++rep.cases;
                unsigned wu = ws.hamming_weight(ws.word_at(ui));
                unsigned wc = ws.hamming_weight(c);
                if (!(wc <= 2 * wu && 2 * wu <= wc + 2))
                    rep.note("codeword " + ws.format_word(c) + " order-minimum larger half " +
                             ws.format_word(ws.word_at(ui)) + " falls outside the sandwich");
            }
        }
        print_report(out, rep, ok);
    }

    print_report(out, verify_decoder(lc, lcw.words()), ok);

    out << (ok ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "\n";
    return ok ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"coset-leader structure of small linear codes"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("code", opt.code_path, "code fixture file")->required();
        cmd->add_option("--order", opt.order, "tie-breaking order: lex, colex or deglex")
            ->check(CLI::IsMember({"lex", "colex", "deglex"}));
        cmd->add_option("--max-enum", opt.max_enum, "enumeration ceiling");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "tsv"}));
    };

    CLI::App* leaders = app.add_subcommand("coset-leaders", "coset records per syndrome");
    add_common(leaders);

    CLI::App* lcw = app.add_subcommand("leader-codewords", "the leader codeword set");
    add_common(lcw);
    lcw->add_flag("--all-witnesses", opt.all_witnesses, "print every witness decomposition");

    CLI::App* trial = app.add_subcommand("trial-set", "extract and verify a trial set");
    add_common(trial);

    CLI::App* zn = app.add_subcommand("zero-neighbours", "boundary-sharing codewords");
    add_common(zn);
    zn->add_flag("--strict-voronoi", opt.strict_voronoi,
                 "drop the zero codeword from the region competition");
    zn->add_flag("--compare-leader-codewords", opt.compare_leader_codewords,
                 "check the leader codewords against the zero neighbours");

    CLI::App* decode = app.add_subcommand("decode", "gradient-decode a word");
    add_common(decode);
    decode->add_option("word", opt.decode_word,
                       "word to decode: one digit group per coordinate, space-separated, "
                       "digits within a coordinate joined by commas")
        ->required();
    decode->add_option("--set", opt.decode_set, "translate set: extracted trial set or leader codewords")
        ->check(CLI::IsMember({"trial", "leader"}));

    CLI::App* verify = app.add_subcommand("verify", "run every verification pass");
    add_common(verify);
    verify->add_flag("--strict-voronoi", opt.strict_voronoi,
                     "also report the strict region variant");
    verify->add_option("--lh-minimality", opt.lh_minimality,
                       "larger-half minimality: subword1 or order")
        ->check(CLI::IsMember({"subword1", "order"}));

    try {
        // CLI11 consumes the vector back to front.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (leaders->parsed()) return cmd_coset_leaders(opt, out);
        if (lcw->parsed()) return cmd_leader_codewords(opt, out);
        if (trial->parsed()) return cmd_trial_set(opt, out);
        if (zn->parsed()) return cmd_zero_neighbours(opt, out);
        if (decode->parsed()) return cmd_decode(opt, out);
        if (verify->parsed()) return cmd_verify(opt, out);
    } catch (const BoundError& e) {
        err << e.what() << "\n";
        return kBoundExceeded;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kVerificationFailure;
    }
    return kUsageError;
}

}  // namespace cosetlab::cli
