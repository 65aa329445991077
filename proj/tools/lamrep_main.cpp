#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lamrep/json_io.hpp"

using namespace lamrep;

namespace {

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw Error("cannot open output file: " + out_path);
    os << text;
}

Json read_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open input file: " + path);
    Json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        throw Error("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Partition parse_partition_arg(const std::string& s, int bound) {
    Partition p = Partition::parse(s, bound);
    if (p.empty()) throw Error("empty partition");
    return p;
}

int run(int argc, char** argv) {
    CLI::App app{"exact toolkit for general representations of the algebras "
                 "Lambda(m,n): a^m = b^n = ca - bc = b^2 c = 0"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "list the general indecomposables");
    int cm = 0, cn = 0;
    bool certify = false, dedup = false;
    std::string format = "json";
    cmd_classify->add_option("m", cm, "nilpotency bound of the loop a")->required();
    cmd_classify->add_option("n", cn, "nilpotency bound of the loop b")->required();
    cmd_classify->add_option("--format", format, "json, csv or tex")
        ->check(CLI::IsMember({"json", "csv", "tex"}));
    cmd_classify->add_flag("--certify", certify, "verify locality and dense-orbit certificates");
    cmd_classify->add_flag("--dedup", dedup, "also count distinct (p,q) strata");

    // normal-form
    auto* cmd_nf = app.add_subcommand("normal-form", "staircase normal form M_{p,q}");
    int nm = 0, nn = 0;
    std::string np, nq;
    cmd_nf->add_option("--m", nm)->required();
    cmd_nf->add_option("--n", nn)->required();
    cmd_nf->add_option("--p", np, "column labels, e.g. 4,3,1 or 4,1^2")->required();
    cmd_nf->add_option("--q", nq, "row labels")->required();

    // reduce
    auto* cmd_reduce = app.add_subcommand("reduce", "reduce a labeled matrix to M_{p,q}");
    std::string reduce_input, reduce_field;
    std::uint64_t reduce_seed = 0;
    cmd_reduce->add_option("--input", reduce_input, "labeled matrix JSON")->required();
    cmd_reduce->add_option("--field", reduce_field, "override field: q or fp:P");
    cmd_reduce->add_option("--seed", reduce_seed, "echoed in the output");

    // endo
    auto* cmd_endo = app.add_subcommand("endo", "endomorphism algebra of a representation");
    std::string endo_input;
    cmd_endo->add_option("--input", endo_input, "representation triple JSON")->required();

    // indec
    auto* cmd_indec = app.add_subcommand("indec", "indecomposability over Q (local End test)");
    std::string indec_input;
    cmd_indec->add_option("--input", indec_input, "representation triple JSON")->required();

    // stratum
    auto* cmd_stratum = app.add_subcommand("stratum", "h, dimension and candidacy of a stratum");
    int sm = 0, sn = 0;
    std::string sp, sq;
    cmd_stratum->add_option("--m", sm)->required();
    cmd_stratum->add_option("--n", sn)->required();
    cmd_stratum->add_option("--p", sp)->required();
    cmd_stratum->add_option("--q", sq)->required();

    // local
    auto* cmd_local = app.add_subcommand("local", "local-algebra family bookkeeping");
    int loops = 2;
    std::string lambda_str;
    cmd_local->add_option("--loops", loops, "number of loops (>= 2)")->required();
    cmd_local->add_option("--lambda", lambda_str, "loops-1 rationals, e.g. 5 or 1,2/3");

    // degen
    auto* cmd_degen = app.add_subcommand("degen", "necessary degeneration conditions");
    std::string degen_from, degen_to;
    int max_word_len = 6;
    std::uint64_t degen_seed = 0;
    cmd_degen->add_option("--from", degen_from, "triple JSON of the degenerating orbit")
        ->required();
    cmd_degen->add_option("--to", degen_to, "triple JSON of the candidate limit")->required();
    cmd_degen->add_option("--max-word-len", max_word_len, "rank tests for words up to this length");
    cmd_degen->add_option("--seed", degen_seed, "seed for the isomorphism test");

    // sample
    auto* cmd_sample = app.add_subcommand("sample", "sample general points of a stratum");
    int mm = 0, mn = 0, count = 1;
    std::string mp, mq, sample_field = "q";
    std::uint64_t sample_seed = 0;
    cmd_sample->add_option("--m", mm)->required();
    cmd_sample->add_option("--n", mn)->required();
    cmd_sample->add_option("--p", mp)->required();
    cmd_sample->add_option("--q", mq)->required();
    cmd_sample->add_option("--field", sample_field, "q or fp:P");
    cmd_sample->add_option("--seed", sample_seed);
    cmd_sample->add_option("--count", count);

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (cmd_classify->parsed()) {
        ClassificationReport rep = classify_report(cm, cn, certify, dedup);
        if (format == "csv")
            write_output(report_to_csv(rep), out_path);
        else if (format == "tex")
            write_output(report_to_tex(rep), out_path);
        else
            write_output(dump(to_json(rep)), out_path);
        return 0;
    }

    if (cmd_nf->parsed()) {
        Partition p = parse_partition_arg(np, nm), q = parse_partition_arg(nq, nn);
        Json j;
        if (is_staircase_shape(nm, nn, p, q)) {
            j = Json{{"transposed", false},
                     {"stratum", to_json(make_stratum(nm, nn, p, q))},
                     {"normal_form", labeled_to_json(normal_form(RationalField{}, nm, nn, p, q))}};
        } else if (is_staircase_shape(nn, nm, q, p)) {
            auto primal = normal_form(RationalField{}, nn, nm, q, p);
            j = Json{{"transposed", true},
                     {"stratum", to_json(make_stratum(nm, nn, p, q))},
                     {"normal_form", labeled_to_json(transpose_labeled(primal))}};
        } else {
            // outside the reduced shapes: emit the formal staircase, which
            // need not represent a dense orbit
            j = Json{{"transposed", false},
                     {"formal_only", true},
                     {"stratum", to_json(make_stratum(nm, nn, p, q))},
                     {"normal_form", labeled_to_json(normal_form(RationalField{}, nm, nn, p, q))}};
        }
        write_output(dump(j), out_path);
        return 0;
    }

    if (cmd_reduce->parsed()) {
        Json doc = read_json_file(reduce_input);
        std::optional<FieldSpec> override_field;
        if (!reduce_field.empty()) override_field = FieldSpec::parse(reduce_field);
        AnyLabeled any = labeled_from_json(doc, override_field);
        Json j = std::visit(
            [&](auto& m) {
                auto tr = reduce_to_normal_form(m);
                if (!tr) return Json{{"status", "not_general"}, {"seed", reduce_seed}};
                if (!verify_trace(*tr)) throw Error("trace replay failed");  // engine bug
                Json out{{"status", "ok"}, {"seed", reduce_seed}, {"replay_ok", true}};
                out["trace"] = trace_to_json(*tr);
                return out;
            },
            any);
        write_output(dump(j), out_path);
        return 0;
    }

    if (cmd_endo->parsed()) {
        AnyTriple any = triple_from_json(read_json_file(endo_input));
        Json j = std::visit(
            [&](auto& r) {
                auto e = endo_space(r);
                Json out = endo_to_json(e);
                const long d1 = r.d1(), d2 = r.d2();
                out["orbit_dim"] = d1 * d1 + d2 * d2 - e.dim;
                return out;
            },
            any);
        write_output(dump(j), out_path);
        return 0;
    }

    if (cmd_indec->parsed()) {
        AnyTriple any = triple_from_json(read_json_file(indec_input));
        if (!std::holds_alternative<RepTriple<RationalField>>(any))
            throw CharPositive("indecomposability is decided over Q only; re-encode the input");
        auto& r = std::get<RepTriple<RationalField>>(any);
        auto e = endo_space(r);
        Json j{{"dim", e.dim},
               {"dim_top", *e.dim_top},
               {"is_local", *e.is_local},
               {"verdict", *e.is_local ? "indecomposable" : "decomposable"}};
        write_output(dump(j), out_path);
        return 0;
    }

    if (cmd_stratum->parsed()) {
        Partition p = parse_partition_arg(sp, sm), q = parse_partition_arg(sq, sn);
        write_output(dump(to_json(make_stratum(sm, sn, p, q))), out_path);
        return 0;
    }

    if (cmd_local->parsed()) {
        std::vector<Rat> lambda;
        if (!lambda_str.empty()) {
            std::stringstream ss(lambda_str);
            std::string tok;
            while (std::getline(ss, tok, ',')) lambda.push_back(rat_parse(tok));
        } else {
            for (int i = 1; i < loops; ++i) lambda.push_back(rat_of(i));
        }
        LocalFamilyPoint pt = local_family(loops, lambda);
        write_output(dump(to_json(local_tangent(pt), loops, lambda)), out_path);
        return 0;
    }

    if (cmd_degen->parsed()) {
        AnyTriple from = triple_from_json(read_json_file(degen_from));
        AnyTriple to = triple_from_json(read_json_file(degen_to));
        if (from.index() != to.index()) throw Error("the two inputs use different fields");
        Json j = std::visit(
            [&](auto& f) {
                using T = std::decay_t<decltype(f)>;
                auto& t = std::get<T>(to);
                Json out = to_json(degeneration_necessary(f, t, max_word_len));
                out["seed"] = degen_seed;
                return out;
            },
            from);
        write_output(dump(j), out_path);
        return 0;
    }

    if (cmd_sample->parsed()) {
        Partition p = parse_partition_arg(mp, mm), q = parse_partition_arg(mq, mn);
        FieldSpec fs = FieldSpec::parse(sample_field);
        Rng rng(sample_seed);
        Json samples = Json::array();
        for (int i = 0; i < count; ++i) {
            if (fs.is_rationals())
                samples.push_back(labeled_to_json(sample_soc2(RationalField{}, q, p, rng)));
            else
                samples.push_back(labeled_to_json(sample_soc2(PrimeField(fs.p), q, p, rng)));
        }
        Json j{{"seed", sample_seed},
               {"count", count},
               {"field", to_json(fs)},
               {"samples", std::move(samples)}};
        write_output(dump(j), out_path);
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CertificateFailure& e) {
        std::cerr << "certificate failure: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
