// Command-line front end: checks the small tangent space condition for a
// cubic (family, file, or random), sweeps ranges of n, answers ideal-square
// membership queries with certificates, and exports equivalent Macaulay2
// scripts for cross-validation.
//
// Exit codes: 0 condition holds (or the query succeeded), 1 condition fails
// (or target not a member), 2 input error, 3 internal inconsistency.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "apolar/families.hpp"
#include "apolar/report.hpp"
#include "apolar/tangent.hpp"
#include "apolar/util.hpp"

namespace {

using namespace apolar;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInput = 2;
constexpr int kExitInconsistent = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

HomogeneousForm load_cubic(std::int32_t n, const FieldSpec& field, const std::string& poly_path,
                           bool use_family) {
    if (use_family) return family_cubic(n, field);
    ContextPtr ctx = RingContext::make(n, field);
    HomogeneousForm f = parse_form(ctx, Side::Dual, read_file(poly_path));
    if (f.degree() != 3)
        throw InputError("polynomial has degree " + std::to_string(f.degree()) +
                         ", expected a cubic");
    if (f.is_zero()) throw InputError("polynomial is zero over " + field.display());
    return f;
}

int default_jobs() {
    if (const char* env = std::getenv("APOLAR_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct SweepEntry {
    std::int32_t n = 0;
    FieldSpec field;
    std::uint64_t seed = 0;  // random mode only
    bool random = false;
    std::optional<ReportDocument> report;
    std::string error;  // nonempty when this entry failed to compute
    bool inconsistent = false;
};

int run_check(std::int32_t n, const std::string& field_text, const std::string& poly_path,
              bool use_family, const std::string& method_text, bool as_json) {
    FieldSpec field = FieldSpec::parse(field_text);
    SquareMethod method = parse_square_method(method_text);
    HomogeneousForm f = load_cubic(n, field, poly_path, use_family);
    Verdict verdict = check_small_tangent(f, method);
    ReportDocument report = make_report(n, field, f, verdict);
    if (as_json)
        std::cout << report.to_json().dump() << "\n";
    else
        std::cout << report.human_text();
    return verdict.condition_holds ? kExitHolds : kExitFails;
}

int run_sweep(std::int32_t n_min, std::int32_t n_max, const std::string& fields_text,
              const std::string& out_path, const std::string& method_text, int jobs,
              int random_count, std::uint64_t seed) {
    if (n_min < 1 || n_max < n_min) throw InputError("invalid n range");
    SquareMethod method = parse_square_method(method_text);
    std::vector<FieldSpec> fields;
    {
        std::stringstream ss(fields_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) fields.push_back(FieldSpec::parse(tok));
        }
        if (fields.empty()) throw InputError("empty field list");
    }

    std::vector<SweepEntry> entries;
    for (std::int32_t n = n_min; n <= n_max; ++n) {
        for (const FieldSpec& field : fields) {
            if (random_count > 0) {
                for (int k = 0; k < random_count; ++k) {
                    SweepEntry e;
                    e.n = n;
                    e.field = field;
                    e.random = true;
                    e.seed = seed + static_cast<std::uint64_t>(k);
                    entries.push_back(std::move(e));
                }
            } else {
                SweepEntry e;
                e.n = n;
                e.field = field;
                entries.push_back(std::move(e));
            }
        }
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= entries.size()) return;
            SweepEntry& e = entries[i];
            try {
                HomogeneousForm f = e.random ? random_cubic(e.n, e.field, e.seed)
                                             : family_cubic(e.n, e.field);
                Verdict v = check_small_tangent(f, method);
                e.report = make_report(e.n, e.field, f, v);
            } catch (const InternalInconsistency& ex) {
                e.error = ex.what();
                e.inconsistent = true;
            } catch (const std::exception& ex) {
                e.error = ex.what();
            }
        }
    };
    {
        std::vector<std::thread> pool;
        int nthreads = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)),
                                             entries.size());
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    nlohmann::json out;
    out["entries"] = nlohmann::json::array();
    out["summary"] = nlohmann::json::array();
    bool any_inconsistent = false;
    std::cout << "   n  field      verdict\n";
    for (const SweepEntry& e : entries) {
        nlohmann::json s{{"n", e.n}, {"field", e.field.str()}};
        if (e.random) s["seed"] = e.seed;
        std::ostringstream label;
        label.width(4);
        label << e.n;
        label << "  " << e.field.str();
        for (std::size_t pad = e.field.str().size(); pad < 9; ++pad) label << ' ';
        if (e.report) {
            out["entries"].push_back(e.report->to_json());
            s["condition_holds"] = e.report->condition_holds;
            s["error"] = nullptr;
            std::cout << label.str() << "  "
                      << (e.report->condition_holds ? "holds" : "fails") << "\n";
        } else {
            s["condition_holds"] = nullptr;
            s["error"] = e.error;
            any_inconsistent = any_inconsistent || e.inconsistent;
            std::cout << label.str() << "  error: " << e.error << "\n";
        }
        out["summary"].push_back(std::move(s));
    }

    std::ofstream fout(out_path, std::ios::binary);
    if (!fout) throw InputError("cannot write output file '" + out_path + "'");
    fout << out.dump(2) << "\n";
    return any_inconsistent ? kExitInconsistent : kExitHolds;
}

int run_witness(std::int32_t n, const std::string& field_text, const std::string& target_text) {
    FieldSpec field = FieldSpec::parse(field_text);
    FamilyDescriptor desc = family_descriptor(n);
    HomogeneousForm f = family_cubic(n, field);
    ContextPtr ctx = f.context();
    HomogeneousForm target = parse_form(ctx, Side::Poly, target_text);
    if (target.support_size() != 1)
        throw InputError("witness target must be a single monomial");
    if (target.degree() != 4 && target.degree() != 5)
        throw InputError("witness target must have degree 4 or 5");

    ApolarIdeal ideal = ApolarIdeal::compute(f);
    std::vector<HomogeneousForm> extras = auxiliary_square_generators(desc, field);
    WitnessQuery q = witness_square_query(target, ideal, extras);

    const Field& k = ctx->field();
    if (q.in_square) {
        const WitnessCombination& w = *q.certificate;
        if (!verify_witness(w, f))
            throw InternalInconsistency("witness certificate failed re-expansion");
        std::cout << "member of the ideal square in degree " << target.degree() << ":\n";
        std::cout << "  " << format_form(target) << " =\n";
        for (const WitnessTerm& t : w.terms)
            std::cout << "    + (" << k.str(t.coeff) << ") * (" << format_form(t.left)
                      << ") * (" << format_form(t.right) << ")\n";
        std::cout << "certificate re-expansion verified, " << w.terms.size() << " products\n";
        return kExitHolds;
    }

    std::cout << "not a member of the ideal square in degree " << target.degree()
              << " (residue has " << q.residue_support << " nonzero coordinate"
              << (q.residue_support == 1 ? "" : "s") << ")\n";
    if (q.certificate) {
        std::cout << "member of the augmented ideal (square plus auxiliary quartic "
                     "generators):\n";
        std::cout << "  " << format_form(target) << " =\n";
        for (const WitnessTerm& t : q.certificate->terms)
            std::cout << "    + (" << k.str(t.coeff) << ") * (" << format_form(t.left)
                      << ") * (" << format_form(t.right) << ")\n";
        for (const auto& [coeff, extra] : q.auxiliary_terms)
            std::cout << "    + (" << k.str(coeff) << ") * [" << format_form(extra)
                      << "]   (auxiliary generator)\n";
    }
    return kExitFails;
}

int run_export_m2(std::int32_t n, const std::string& field_text, const std::string& out_path) {
    FieldSpec field = FieldSpec::parse(field_text);
    std::string script = macaulay2_script(n, field);
    if (out_path == "-") {
        std::cout << script;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw InputError("cannot write output file '" + out_path + "'");
        out << script;
    }
    return kExitHolds;
}

int run_random(std::int32_t n, const std::string& field_text, std::uint64_t seed,
               const std::string& out_path) {
    FieldSpec field = FieldSpec::parse(field_text);
    HomogeneousForm f = random_cubic(n, field, seed);
    std::string text = format_form(f);
    if (out_path == "-") {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw InputError("cannot write output file '" + out_path + "'");
        out << text << "\n";
    }
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"apolar ideals of cubic forms: Hilbert functions of S/Ann(f) and "
                 "S/Ann(f)^2, the small tangent space condition, and ideal-square "
                 "membership certificates"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "decide the small tangent space condition");
    std::int32_t check_n = 0;
    std::string check_field = "q";
    std::string check_poly;
    bool check_family = false;
    std::string check_method = "auto";
    bool check_json = false;
    check->add_option("--n", check_n, "number of variables")->required();
    check->add_option("--field", check_field, "field: q or fp:<p> (default q)");
    auto* poly_opt = check->add_option("--poly", check_poly, "polynomial file (text grammar)");
    auto* family_opt = check->add_flag("--family", check_family, "use the built-in family polynomial");
    poly_opt->excludes(family_opt);
    check->add_option("--method", check_method, "square method: auto, span, dual, or both");
    check->add_flag("--json", check_json, "emit a single-line JSON report");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run checks over a range of n and fields");
    std::int32_t sweep_min = 0, sweep_max = 0;
    std::string sweep_fields = "q,fp:2,fp:3";
    std::string sweep_out;
    std::string sweep_method = "auto";
    int sweep_jobs = default_jobs();
    int sweep_random = 0;
    std::uint64_t sweep_seed = 1;
    sweep->add_option("--n-min", sweep_min, "smallest n")->required();
    sweep->add_option("--n-max", sweep_max, "largest n")->required();
    sweep->add_option("--fields", sweep_fields, "comma-separated field list (default q,fp:2,fp:3)");
    sweep->add_option("--out", sweep_out, "output JSON path")->required();
    sweep->add_option("--method", sweep_method, "square method: auto, span, dual, or both");
    sweep->add_option("--jobs", sweep_jobs, "concurrent checks (default APOLAR_JOBS or hardware)");
    sweep->add_option("--random", sweep_random,
                      "check this many seeded random cubics per (n, field) instead of the family");
    sweep->add_option("--seed", sweep_seed, "base seed for --random (default 1)");

    // witness
    auto* witness = app.add_subcommand(
        "witness", "express a quartic or quintic monomial over products of annihilator elements");
    std::int32_t wit_n = 0;
    std::string wit_field = "q";
    bool wit_family = false;
    std::string wit_target;
    witness->add_option("--n", wit_n, "number of variables")->required();
    witness->add_option("--field", wit_field, "field: q or fp:<p> (default q)");
    witness->add_flag("--family", wit_family, "use the built-in family polynomial")->required();
    witness->add_option("--target", wit_target, "target monomial, e.g. a1^4 or a1*b1*c1*a2")
        ->required();

    // export-m2
    auto* exp = app.add_subcommand("export-m2", "emit the equivalent Macaulay2 session");
    std::int32_t exp_n = 0;
    std::string exp_field = "q";
    std::string exp_out = "-";
    exp->add_option("--n", exp_n, "number of variables")->required();
    exp->add_option("--field", exp_field, "field: q or fp:<p> (default q)");
    exp->add_option("--out", exp_out, "output path, or - for stdout");

    // random
    auto* rnd = app.add_subcommand("random", "emit a seeded random cubic in the text grammar");
    std::int32_t rnd_n = 0;
    std::string rnd_field = "fp:32003";
    std::uint64_t rnd_seed = 1;
    std::string rnd_out = "-";
    rnd->add_option("--n", rnd_n, "number of variables")->required();
    rnd->add_option("--field", rnd_field, "field: q or fp:<p> (default fp:32003)");
    rnd->add_option("--seed", rnd_seed, "seed (default 1)");
    rnd->add_option("--out", rnd_out, "output path, or - for stdout");

    try {
        app.parse(argc, argv);
        if (check->parsed()) {
            if (!check_family && check_poly.empty())
                throw InputError("check needs either --family or --poly <file>");
            return run_check(check_n, check_field, check_poly, check_family, check_method,
                             check_json);
        }
        if (sweep->parsed())
            return run_sweep(sweep_min, sweep_max, sweep_fields, sweep_out, sweep_method,
                             sweep_jobs, sweep_random, sweep_seed);
        if (witness->parsed()) return run_witness(wit_n, wit_field, wit_target);
        if (exp->parsed()) return run_export_m2(exp_n, exp_field, exp_out);
        if (rnd->parsed()) return run_random(rnd_n, rnd_field, rnd_seed, rnd_out);
        return kExitInput;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitInput;
    }
}
