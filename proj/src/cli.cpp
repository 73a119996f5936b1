#include "pvseq/cli.hpp"

#include <CLI11.hpp>

#include <fstream>

#include "pvseq/json_io.hpp"
#include "pvseq/orbifold.hpp"
#include "pvseq/sweep.hpp"

namespace pvseq {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

struct IoOptions {
    std::string in_path = "-";
    std::string out_path = "-";
    bool pretty = false;
};

void add_io_options(CLI::App* cmd, IoOptions& io, bool with_input = true) {
    if (with_input)
        cmd->add_option("--in", io.in_path, "input file, or - for stdin");
    cmd->add_option("--out", io.out_path, "output file (default stdout)");
    cmd->add_flag("--pretty", io.pretty, "indent the JSON output");
}

json read_input(const IoOptions& io, std::istream& stdin_stream) {
    if (io.in_path == "-") return json::parse(stdin_stream);
    std::ifstream file(io.in_path);
    if (!file) throw std::invalid_argument("cannot open input file " + io.in_path);
    return json::parse(file);
}

void write_output(const json& doc, const IoOptions& io, std::ostream& out) {
    const std::string text = io.pretty ? doc.dump(2) : doc.dump();
    if (io.out_path == "-") {
        out << text << "\n";
        return;
    }
    std::ofstream file(io.out_path);
    if (!file) throw std::invalid_argument("cannot open output file " + io.out_path);
    file << text << "\n";
}

json winding_to_json(const WindingReport& report) {
    return {{"R", report.rotation},
            {"S", report.s_value},
            {"det_signs", report.det_signs},
            {"predicted_signature", report.predicted_signature}};
}

json orders_to_json(const std::vector<mpz_class>& orders) {
    json arr = json::array();
    for (const mpz_class& o : orders) {
        if (o.fits_slong_p())
            arr.push_back(o.get_si());
        else
            arr.push_back(o.get_str());
    }
    return arr;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariants of plane vector sequences"};
    app.require_subcommand(1);

    IoOptions io;
    FuzzConfig fuzz_cfg;
    std::string subcommand;

    for (const char* name : {"gram", "det", "inertia", "winding", "verify",
                             "invert", "reconstruct", "classify", "realize",
                             "orbifold"}) {
        CLI::App* cmd = app.add_subcommand(name);
        add_io_options(cmd, io);
        cmd->callback([&subcommand, name] { subcommand = name; });
    }
    {
        CLI::App* cmd = app.add_subcommand("fuzz");
        add_io_options(cmd, io, /*with_input=*/false);
        cmd->add_option("--seed", fuzz_cfg.seed, "PRNG seed");
        cmd->add_option("--count", fuzz_cfg.count, "number of cases");
        cmd->add_option("--n-max", fuzz_cfg.n_max, "maximum sequence length");
        cmd->add_option("--entry-bound", fuzz_cfg.entry_bound,
                        "maximum |numerator|");
        cmd->add_flag("--integer-only", fuzz_cfg.integer_only,
                      "draw integer entries only");
        cmd->callback([&subcommand] { subcommand = "fuzz"; });
    }

    std::vector<std::string> argv = args;
    try {
        app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return kExitOk;
        }
        err << "{\"error\":\"usage\",\"detail\":" << json(e.what()).dump()
            << "}\n";
        return kExitInput;
    }

    try {
        if (subcommand == "gram") {
            const VectorSequence v = sequence_from_json(read_input(io, in));
            write_output(matrix_to_json(build_gram(v)), io, out);
        } else if (subcommand == "det") {
            const VectorSequence v = sequence_from_json(read_input(io, in));
            write_output({{"det", rational_to_json(det_product(v))}}, io, out);
        } else if (subcommand == "inertia") {
            const SymMatrix a = matrix_from_json(read_input(io, in));
            const Inertia result = inertia_congruence(a);
            write_output({{"positive", result.positive},
                          {"negative", result.negative},
                          {"zero", result.zero},
                          {"signature", result.signature()}},
                         io, out);
        } else if (subcommand == "winding") {
            const VectorSequence v = sequence_from_json(read_input(io, in));
            write_output(winding_to_json(winding_report(v)), io, out);
        } else if (subcommand == "verify") {
            const VectorSequence v = sequence_from_json(read_input(io, in));
            const TheoremCheck check = verify_main_theorem(v);
            json doc = winding_to_json(check.report);
            doc["signature"] = check.signature;
            doc["ok"] = check.ok;
            write_output(doc, io, out);
            if (!check.ok) {
                err << "{\"error\":\"internal\",\"detail\":\"signature identity failed\"}\n";
                return kExitInternal;
            }
        } else if (subcommand == "invert") {
            const VectorSequence v = sequence_from_json(read_input(io, in));
            write_output(tridiag_to_json(inverse_closed_form(v)), io, out);
        } else if (subcommand == "reconstruct") {
            const TriDiagSym b = tridiag_from_json(read_input(io, in));
            write_output(sequence_to_json(reconstruct(b)), io, out);
        } else if (subcommand == "classify") {
            const VectorSequence v = sequence_from_json(read_input(io, in));
            write_output(label_to_json(v.n(), classify(v)), io, out);
        } else if (subcommand == "realize") {
            std::size_t n = 0;
            const ComponentLabel label = label_from_json(read_input(io, in), n);
            write_output(sequence_to_json(realize(n, label)), io, out);
        } else if (subcommand == "orbifold") {
            const IntSequence v{sequence_from_json(read_input(io, in))};
            const SymMatrix full = intersection_matrix(v);

            bool lemma54 = true;
            const std::size_t cycle = v.n() + 2;
            for (std::size_t i = 0; i < cycle && lemma54; ++i)
                lemma54 = cross(v.seq().vec(i), v.seq().vec(i + 1)) *
                              full.at(i, (i + 1) % cycle) ==
                          Rational(1);
            const bool gram_check = kronecker_dual_gram(v) == build_gram(v.seq());
            const bool pullback = pullback_relation_check(v);

            write_output({{"smooth", is_smooth(v)},
                          {"local_orders", orders_to_json(local_group_orders(v))},
                          {"euler", cycle},
                          {"intersection", matrix_to_json(full)},
                          {"gram_check", gram_check},
                          {"lemma54", lemma54},
                          {"pullback", pullback}},
                         io, out);
            if (!gram_check || !lemma54 || !pullback) {
                err << "{\"error\":\"internal\",\"detail\":\"orbifold identity failed\"}\n";
                return kExitInternal;
            }
        } else if (subcommand == "fuzz") {
            validate(fuzz_cfg);
            const SweepOutcome outcome =
                run_sweep(fuzz_cfg, SweepKind::Composite, ExecMode::Parallel);
            json doc = {{"cases", outcome.cases}, {"failures", outcome.failures}};
            if (outcome.failures > 0) {
                doc["first_failure"] = outcome.first_failure;
                doc["detail"] = outcome.first_failure_detail;
            }
            write_output(doc, io, out);
            if (outcome.failures > 0) return kExitInternal;
        }
    } catch (const internal_check_failure& e) {
        err << "{\"error\":\"internal\",\"detail\":" << json(e.what()).dump()
            << "}\n";
        return kExitInternal;
    } catch (const generic_point_failure& e) {
        err << "{\"error\":\"internal\",\"detail\":" << json(e.what()).dump()
            << "}\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "{\"error\":\"input\",\"detail\":" << json(e.what()).dump()
            << "}\n";
        return kExitInput;
    }
    return kExitOk;
}

}  // namespace pvseq
