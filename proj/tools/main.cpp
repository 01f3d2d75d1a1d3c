#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <iostream>
#include <string>
#include <vector>

#include "saddleform/analysis.hpp"
#include "saddleform/corpus.hpp"
#include "saddleform/parser.hpp"

using namespace saddleform;

namespace {

/// "RE", "IMi", or "RE+IMi" (also with '-'), e.g. "0.2", "1+0.5i", "-2i".
std::complex<double> parse_complex(const std::string& text) {
    if (text.empty()) throw SyntaxError(0, "empty complex literal");
    if (text.back() != 'i') return {std::stod(text), 0.0};
    std::string body = text.substr(0, text.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        char c = body[k];
        char prev = body[k - 1];
        if ((c == '+' || c == '-') && prev != 'e' && prev != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        if (body.empty() || body == "+") return {0.0, 1.0};
        if (body == "-") return {0.0, -1.0};
        return {0.0, std::stod(body)};
    }
    double re = std::stod(body.substr(0, split));
    std::string im = body.substr(split);
    if (im == "+") return {re, 1.0};
    if (im == "-") return {re, -1.0};
    return {re, std::stod(im)};
}

InputProblem load(const std::string& path, int deg, int tdeg) {
    InputProblem prob = parse_input_file(path);
    if (deg < 0 && tdeg < 0) return prob;
    VarContext ctx = prob.ctx;
    if (deg >= 0) ctx.D = deg;
    if (tdeg >= 0) ctx.J = tdeg;
    InputProblem adjusted(ctx, parse_form(prob.omega_text, ctx));
    adjusted.center = prob.center;
    adjusted.omega_text = prob.omega_text;
    return adjusted;
}

int run_analyze(const std::string& path, int deg, int tdeg, bool pretty, bool require_center) {
    InputProblem prob = load(path, deg, tdeg);
    if (require_center && !prob.center)
        throw PreconditionFailed("the center command needs an input with mode = center");
    AnalysisReport rep = prob.center ? center_pipeline(RealOneForm(prob.omega))
                                     : run_analysis(prob.omega);
    std::cout << rep.json_text(pretty) << "\n";
    return 0;
}

int run_integrate(const std::string& path, const std::string& ctext, const std::string& x0text,
                  const std::string& ttext, const std::vector<std::string>& ztexts,
                  int samples) {
    InputProblem prob = load(path, -1, -1);
    if (prob.center)
        throw PreconditionFailed("integrate expects an input with mode = saddle");

    CyclePath cpath;
    cpath.c = parse_complex(ctext);
    cpath.x0 = parse_complex(x0text);
    cpath.t = parse_complex(ttext);
    cpath.z.assign(prob.ctx.n - 2, std::complex<double>(0.0, 0.0));
    if ((int)ztexts.size() > prob.ctx.n - 2)
        throw PreconditionFailed("more --z values than transverse variables");
    for (std::size_t k = 0; k < ztexts.size(); ++k) cpath.z[k] = parse_complex(ztexts[k]);

    std::complex<double> quad = cycle_integral_numeric(prob.omega, cpath, samples);
    CyclePolynomial ihat = cycle_integral_symbolic(prob.omega);
    std::complex<double> twopii(0.0, 2.0 * 3.14159265358979323846);
    std::complex<double> predicted = twopii * ihat.eval(cpath.c, cpath.z, cpath.t);

    nlohmann::ordered_json j;
    j["input"] = prob.omega.str();
    j["cycle_polynomial"] = ihat.str();
    j["c"] = {{"re", cpath.c.real()}, {"im", cpath.c.imag()}};
    j["x0"] = {{"re", cpath.x0.real()}, {"im", cpath.x0.imag()}};
    j["t"] = {{"re", cpath.t.real()}, {"im", cpath.t.imag()}};
    j["samples"] = samples;
    j["quadrature"] = {{"re", quad.real()}, {"im", quad.imag()}};
    j["symbolic"] = {{"re", predicted.real()}, {"im", predicted.imag()}};
    j["abs_error"] = std::abs(quad - predicted);
    std::cout << j.dump() << "\n";
    return 0;
}

int run_corpus(const std::string& id) {
    std::vector<CorpusResult> results;
    if (id == "all")
        for (const auto& each : corpus_ids()) results.push_back(corpus_check(each));
    else
        results.push_back(corpus_check(id));

    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << r.str();
        all_pass = all_pass && r.pass();
    }
    std::cout << "corpus: " << (all_pass ? "pass" : "FAIL") << "\n";
    return all_pass ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analyzer for one-parameter deformations of the planar saddle"};
    app.require_subcommand(1);

    std::string file;
    int deg = -1, tdeg = -1;
    bool pretty = false, compact = false;

    CLI::App* analyze = app.add_subcommand("analyze", "full stage-by-stage analysis of one input");
    analyze->add_option("file", file, "input file")->required();
    analyze->add_option("--deg", deg, "override the spatial truncation degree");
    analyze->add_option("--tdeg", tdeg, "override the parameter truncation order");
    CLI::Option* aj = analyze->add_flag("--json", compact, "compact JSON (default)");
    analyze->add_flag("--pretty", pretty, "indented JSON")->excludes(aj);

    CLI::App* center = app.add_subcommand("center", "analysis of a real center-mode input");
    center->add_option("file", file, "input file")->required();
    center->add_option("--deg", deg, "override the spatial truncation degree");
    center->add_option("--tdeg", tdeg, "override the parameter truncation order");
    CLI::Option* cj = center->add_flag("--json", compact, "compact JSON (default)");
    center->add_flag("--pretty", pretty, "indented JSON")->excludes(cj);

    std::string ctext, x0text = "1", ttext = "0";
    std::vector<std::string> ztexts;
    int samples = 256;
    CLI::App* integrate = app.add_subcommand("integrate", "quadrature of omega over one cycle");
    integrate->add_option("file", file, "input file")->required();
    integrate->add_option("--c", ctext, "fiber value, RE+IMi")->required();
    integrate->add_option("--x0", x0text, "base point, RE+IMi");
    integrate->add_option("--t", ttext, "parameter value, RE+IMi");
    integrate->add_option("--z", ztexts, "transverse values, RE+IMi each");
    integrate->add_option("--samples", samples, "sample count");

    std::string example = "all";
    CLI::App* corpus = app.add_subcommand("corpus", "run the built-in worked examples");
    corpus->add_option("id", example, "ex0..ex3 or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (analyze->parsed()) return run_analyze(file, deg, tdeg, pretty, false);
        if (center->parsed()) return run_analyze(file, deg, tdeg, pretty, true);
        if (integrate->parsed())
            return run_integrate(file, ctext, x0text, ttext, ztexts, samples);
        if (corpus->parsed()) return run_corpus(example);
    } catch (const InternalError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
