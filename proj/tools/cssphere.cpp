// Command-line front end: generate the construction's complexes, run the
// verification suites, print f-vectors, convert between the file formats.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage, parse, domain or resource error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "csph/construction.hpp"
#include "csph/io.hpp"
#include "csph/verify.hpp"

namespace {

struct CommonOpts {
    std::string object = "delta";
    int d = 0;
    int i = 0;
    int n = 0;
    bool has_i = false;
    std::string format = "json";
    std::string out;
    std::string input;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw csph::parse_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw csph::error("cannot open output file: " + path);
    out << data;
}

// Builds the requested object; returns the complex and its ambient n.
std::pair<const csph::Complex*, int> build_object(csph::Builder& builder, const CommonOpts& o) {
    if (o.object == "delta") return {&builder.delta(o.d, o.n), o.n};
    if (o.object == "ball") {
        if (!o.has_i) throw csph::domain_error("--i is required for --object ball");
        return {&builder.ball(o.d, o.i, o.n), o.n};
    }
    if (o.object == "variant") {
        if (!o.has_i) throw csph::domain_error("--i is required for --object variant");
        return {&builder.delta_variant(o.d, o.i, o.n), o.n};
    }
    if (o.object == "dball") {
        if (o.d % 2 != 0)
            throw csph::domain_error("--object dball needs an even --d (d = 2k)");
        return {&builder.special_ball_D(o.d / 2, o.n), o.n};
    }
    if (o.object == "crosspoly") return {&builder.cross_polytope_boundary(o.n), o.n};
    throw csph::domain_error("unknown object: " + o.object);
}

csph::io::ParsedComplex load_complex(const std::string& text, const std::string& format) {
    if (format == "json") return csph::io::from_json(text);
    if (format == "flat") {
        csph::Complex c = csph::io::from_flat(text);
        int n = 0;
        for (csph::Vertex v : c.vertex_set()) n = std::max(n, std::abs(v));
        return {std::move(c), n};
    }
    throw csph::domain_error("unknown format: " + format);
}

std::string serialize(const csph::Complex& c, int n, const std::string& format) {
    if (format == "json") return csph::io::to_json(c, n);
    if (format == "flat") return csph::io::to_flat(c);
    throw csph::domain_error("unknown format: " + format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Centrally symmetric neighborly spheres: construction and verification"};
    app.require_subcommand(1);

    CommonOpts gen, fv, conv;
    std::string conv_from = "flat", conv_to = "json";
    conv.input = "-";

    int threads = 0;
    long long budget_flag = 0;
    app.add_option("--threads", threads, "OpenMP thread count (0 = default)");

    CLI::App* cmd_generate = app.add_subcommand("generate", "Build a complex and serialize it");
    cmd_generate->add_option("--object", gen.object, "delta|ball|variant|dball|crosspoly");
    cmd_generate->add_option("--d", gen.d, "dimension");
    cmd_generate->add_option("--i", gen.i, "neighborliness index");
    cmd_generate->add_option("--n", gen.n, "vertex-pair count")->required();
    cmd_generate->add_option("--format", gen.format, "json|flat");
    cmd_generate->add_option("--out", gen.out, "output path (default stdout)");

    CLI::App* cmd_verify = app.add_subcommand("verify", "Run the claim suite or check a complex");
    std::string suite = "full";
    int d_max = 3, n_slack = 3, link_depth = 1;
    bool json_report = false;
    std::string verify_input, verify_format = "json", verify_out;
    cmd_verify->add_option("--suite", suite, "basic|full");
    cmd_verify->add_option("--d-max", d_max, "largest sphere dimension");
    cmd_verify->add_option("--n-slack", n_slack, "extra vertex pairs past d+1");
    cmd_verify->add_option("--link-depth", link_depth, "sphere-surrogate link recursion depth");
    cmd_verify->add_option("--input", verify_input, "verify one complex from a file instead");
    cmd_verify->add_option("--format", verify_format, "input format: json|flat");
    cmd_verify->add_flag("--json", json_report, "emit the report as JSON");
    cmd_verify->add_option("--out", verify_out, "report path (default stdout)");
    cmd_verify->add_option("--budget", budget_flag, "enumeration guard override");

    CLI::App* cmd_fvector = app.add_subcommand("fvector", "Print the f-vector and chi");
    cmd_fvector->add_option("--object", fv.object, "delta|ball|variant|dball|crosspoly");
    cmd_fvector->add_option("--d", fv.d, "dimension");
    cmd_fvector->add_option("--i", fv.i, "neighborliness index");
    cmd_fvector->add_option("--n", fv.n, "vertex-pair count");
    cmd_fvector->add_option("--input", fv.input, "read the complex from a file");
    cmd_fvector->add_option("--format", fv.format, "input format: json|flat");

    CLI::App* cmd_convert = app.add_subcommand("convert", "Transcode between json and flat");
    cmd_convert->add_option("--from", conv_from, "json|flat");
    cmd_convert->add_option("--to", conv_to, "json|flat");
    cmd_convert->add_option("--input", conv.input, "input path or - for stdin");
    cmd_convert->add_option("--out", conv.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    gen.has_i = cmd_generate->count("--i") > 0;
    fv.has_i = cmd_fvector->count("--i") > 0;

    if (threads > 0) {
#ifdef _OPENMP
        omp_set_num_threads(threads);
#endif
    }

    csph::kernels::Budget budget;
    if (const char* env = std::getenv("CS_SPHERES_BUDGET")) {
        const long long v = std::atoll(env);
        if (v > 0) budget = {v, v};
    }
    if (budget_flag > 0) budget = {budget_flag, budget_flag};

    try {
        csph::Builder builder;

        if (cmd_generate->parsed()) {
            const auto [complex, n] = build_object(builder, gen);
            write_output(gen.out, serialize(*complex, n, gen.format));
            return 0;
        }

        if (cmd_fvector->parsed()) {
            csph::Complex c;
            if (!fv.input.empty()) {
                c = load_complex(read_input(fv.input), fv.format).complex;
            } else {
                c = *build_object(builder, fv).first;
            }
            if (c.is_void()) {
                std::cout << "void; chi=0\n";
                return 0;
            }
            const csph::FVector vec = csph::f_vector(c);
            std::cout << vec.to_string() << "; chi=" << vec.euler() << "\n";
            return 0;
        }

        if (cmd_convert->parsed()) {
            const csph::io::ParsedComplex parsed =
                load_complex(read_input(conv.input), conv_from);
            write_output(conv.out, serialize(parsed.complex, parsed.ambient_n, conv_to));
            return 0;
        }

        if (cmd_verify->parsed()) {
            csph::SurrogateConfig cfg;
            cfg.link_depth = link_depth;
            cfg.budget = budget;

            csph::VerificationReport report;
            if (!verify_input.empty()) {
                const csph::io::ParsedComplex parsed =
                    load_complex(read_input(verify_input), verify_format);
                const csph::Complex& c = parsed.complex;
                if (c.is_void() || !c.is_pure()) {
                    csph::CheckResult r;
                    r.claim = "input.pure";
                    r.pass = false;
                    r.note = "input is void or not pure";
                    report.append(std::move(r));
                } else {
                    csph::CheckResult inv;
                    inv.claim = "input.free-involution";
                    const auto w = csph::free_involution_witness(c);
                    inv.pass = !w.has_value();
                    if (w) inv.witnesses.push_back(*w);
                    report.append(std::move(inv));
                    report.append_all(csph::sphere_surrogate_check(c, c.dim(), cfg),
                                      "input.sphere-surrogate.");
                }
            } else {
                const csph::SuiteKind kind =
                    suite == "basic" ? csph::SuiteKind::basic : csph::SuiteKind::full;
                if (suite != "basic" && suite != "full")
                    throw csph::domain_error("unknown suite: " + suite);
                report = csph::run_paper_suite(builder, d_max, n_slack, kind, cfg);
            }

            if (json_report) {
                write_output(verify_out, csph::io::report_to_json(report) + "\n");
            } else if (verify_out.empty() || verify_out == "-") {
                report.print(std::cout);
            } else {
                std::ostringstream os;
                report.print(os);
                write_output(verify_out, os.str());
            }
            return report.all_pass() ? 0 : 1;
        }
    } catch (const csph::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
