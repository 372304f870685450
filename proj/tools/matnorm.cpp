// matnorm - command-line front end.
//
// Subcommands:
//   norm    one matrix -> one norm value
//   moment  1..12 matrices -> mixed sphere moment (closed / polarization / MC)
//   gauge   real tuple -> H_q, Phi_q, or inequality slacks
//   verify  randomized identity / axiom / inequality / oracle suites
//
// Exit codes: 0 ok, 1 verify failure, 2 usage or parse error, 3 domain error.
// All floats print with 17 significant digits; identical argv (seeds included)
// produces byte-identical stdout.

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matnorm/matnorm.hpp"
#include "verify.hpp"

namespace {

using namespace matnorm;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& line) { std::fputs((line + "\n").c_str(), stdout); }

std::string json_str(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string complex_pair(Complex v) {
    return "[" + format_double(v.real()) + ", " + format_double(v.imag()) + "]";
}

std::vector<double> parse_csv(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(item, &pos);
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("cannot parse number in tuple: '" + item + "'");
        }
    }
    if (out.empty()) throw UsageError("empty tuple");
    return out;
}

std::string tuple_json(const std::vector<double>& x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ", ";
        s += format_double(x[i]);
    }
    return s + "]";
}

struct NormArgs {
    std::string input;
    std::string kind;
    std::string domain = "psd";
    int k = 0;
    double p = 0;
    double q = 0;
    std::int64_t mc_samples = 0;
    std::uint64_t seed = 0;
};

int run_norm(const NormArgs& args) {
    const ComplexMatrix a = read_matrix_file(args.input);
    std::optional<MCConfig> mc;
    if (args.mc_samples > 0) mc = MCConfig{args.mc_samples, args.seed, 4096};

    auto need_k = [&] {
        if (args.k < 1) throw UsageError("--kind " + args.kind + " requires --k >= 1");
    };
    auto need_p = [&] {
        if (args.p <= 0) throw UsageError("--kind " + args.kind + " requires --p");
    };

    double value = 0;
    std::string method = "closed-form";
    double stderr_est = 0;
    bool with_stderr = false;

    if (args.kind == "nk") {
        need_k();
        value = n_k(a, args.k);
    } else if (args.kind == "nkp") {
        need_k();
        need_p();
        value = n_k_p(a, args.k, args.p);
    } else if (args.kind == "nprime") {
        if (args.q < 1) throw UsageError("--kind nprime requires --q >= 1");
        const NormValue nv = n_prime(a, args.q, mc);
        value = nv.value;
        if (nv.method == NormMethod::monte_carlo) {
            method = "monte-carlo";
            stderr_est = nv.stderr_est;
            with_stderr = true;
        }
    } else if (args.kind == "schatten") {
        need_p();
        value = schatten_norm(a, args.p);
    } else if (args.kind == "sympower-schatten") {
        need_k();
        need_p();
        value = sym_power_schatten(a, args.k, args.p);
    } else if (args.kind == "phi2") {
        value = phi2(a);
    } else if (args.kind == "phi4") {
        value = phi4(a);
    } else if (args.kind == "phi-closed") {
        need_k();
        PhiDomain dom;
        if (args.domain == "psd")
            dom = PhiDomain::psd;
        else if (args.domain == "hermitian-even")
            dom = PhiDomain::hermitian_even;
        else
            throw UsageError("--domain must be psd or hermitian-even");
        value = phi_closed(a, args.k, dom);
    } else if (args.kind == "npsi") {
        value = n_psi(a);
    } else if (args.kind == "npsi0") {
        value = n_psi0(a);
    } else {
        throw UsageError("unknown --kind: " + args.kind);
    }

    std::string inputs = "{\"file\": " + json_str(args.input) + ", \"kind\": " + json_str(args.kind);
    if (args.k > 0) inputs += ", \"k\": " + std::to_string(args.k);
    if (args.p > 0) inputs += ", \"p\": " + format_double(args.p);
    if (args.q > 0) inputs += ", \"q\": " + format_double(args.q);
    if (args.kind == "phi-closed") inputs += ", \"domain\": " + json_str(args.domain);
    inputs += "}";

    std::string rec = "{\"value\": " + format_double(value);
    if (with_stderr) rec += ", \"stderr\": " + format_double(stderr_est);
    rec += ", \"method\": " + json_str(method) + ", \"inputs\": " + inputs;
    if (with_stderr) rec += ", \"seed\": " + std::to_string(args.seed);
    rec += "}";
    emit(rec);
    return 0;
}

struct MomentArgs {
    std::vector<std::string> inputs;
    std::string method = "closed";
    std::int64_t mc_samples = 1000000;
    std::uint64_t seed = 0;
};

int run_moment(const MomentArgs& args) {
    if (args.inputs.empty() || args.inputs.size() > 12)
        throw UsageError("--inputs takes between 1 and 12 matrix files");
    std::vector<ComplexMatrix> ms;
    ms.reserve(args.inputs.size());
    for (const auto& f : args.inputs) ms.push_back(read_matrix_file(f));

    Complex value;
    std::string method;
    double stderr_est = 0;
    bool with_stderr = false;
    if (args.method == "closed") {
        value = mixed_moment_closed(ms).value;
        method = "closed-form";
    } else if (args.method == "polarization") {
        value = mixed_moment_general(PolarizationJob{ms}).value;
        method = "polarization";
    } else if (args.method == "mc") {
        const MCEstimate est = mc_mixed(ms, MCConfig{args.mc_samples, args.seed, 4096});
        value = est.mean;
        stderr_est = est.stderr_est;
        with_stderr = true;
        method = "monte-carlo";
    } else {
        throw UsageError("--method must be closed, polarization, or mc");
    }

    std::string files = "[";
    for (std::size_t i = 0; i < args.inputs.size(); ++i) {
        if (i) files += ", ";
        files += json_str(args.inputs[i]);
    }
    files += "]";

    std::string rec = "{\"value\": " + complex_pair(value);
    if (with_stderr) rec += ", \"stderr\": " + format_double(stderr_est);
    rec += ", \"method\": " + json_str(method) +
           ", \"inputs\": {\"files\": " + files + ", \"method\": " + json_str(args.method) + "}";
    if (with_stderr) rec += ", \"seed\": " + std::to_string(args.seed);
    rec += "}";
    emit(rec);
    return 0;
}

struct GaugeArgs {
    std::string kind;
    std::string x_csv;
    std::string y_csv;
    double q = 0;
    double p = 0;
    std::int64_t mc_samples = 0;
    std::uint64_t seed = 0;
};

int run_gauge(const GaugeArgs& args) {
    if (args.q < 1) throw UsageError("gauge requires --q >= 1");
    const RealTuple x = parse_csv(args.x_csv);
    std::optional<MCConfig> mc;
    if (args.mc_samples > 0) mc = MCConfig{args.mc_samples, args.seed, 4096};

    if (args.kind == "hq" || args.kind == "phi") {
        const GaugeValue gv = args.kind == "hq" ? h_q(x, args.q, mc) : phi_gauge(x, args.q, mc);
        const bool is_mc = gv.method == GaugeMethod::simplex_mc;
        std::string rec = "{\"value\": " + format_double(gv.value);
        if (is_mc) rec += ", \"stderr\": " + format_double(gv.stderr_est);
        rec += ", \"method\": " + json_str(to_string(gv.method)) +
               ", \"inputs\": {\"kind\": " + json_str(args.kind) + ", \"x\": " + tuple_json(x) +
               ", \"q\": " + format_double(args.q) + "}";
        if (is_mc) rec += ", \"seed\": " + std::to_string(args.seed);
        rec += "}";
        emit(rec);
        return 0;
    }
    if (args.kind == "slacks") {
        if (args.y_csv.empty()) throw UsageError("--kind slacks requires --y");
        if (args.p <= 0) throw UsageError("--kind slacks requires --p > 0");
        const RealTuple y = parse_csv(args.y_csv);
        std::string rec = "{\"slacks\": {";
        bool first = true;
        for (const auto& s : inequality_suite(x, y, args.q, args.p)) {
            if (!first) rec += ", ";
            first = false;
            rec += json_str(s.name) + ": " + (s.applicable ? format_double(s.slack) : "null");
        }
        rec += "}, \"inputs\": {\"x\": " + tuple_json(x) + ", \"y\": " + tuple_json(y) +
               ", \"q\": " + format_double(args.q) + ", \"p\": " + format_double(args.p) + "}}";
        emit(rec);
        return 0;
    }
    throw UsageError("unknown --kind: " + args.kind);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix norms and sphere moments of numerical values"};
    app.require_subcommand(1);

    NormArgs na;
    auto* norm = app.add_subcommand("norm", "compute one norm of one matrix");
    norm->add_option("--input", na.input, "matrix JSON file")->required();
    norm->add_option("--kind", na.kind,
                     "nk|nkp|nprime|schatten|sympower-schatten|phi2|phi4|phi-closed|npsi|npsi0")
        ->required();
    norm->add_option("--k", na.k, "integer order");
    norm->add_option("--p", na.p, "Schatten / inner order");
    norm->add_option("--q", na.q, "outer order");
    norm->add_option("--domain", na.domain, "phi-closed domain: psd|hermitian-even");
    norm->add_option("--mc-samples", na.mc_samples, "Monte Carlo sample count");
    norm->add_option("--seed", na.seed, "Monte Carlo seed");

    MomentArgs ma;
    auto* moment = app.add_subcommand("moment", "mixed moment of 1..12 matrices");
    moment->add_option("--inputs", ma.inputs, "matrix JSON files")->required()->expected(1, 12);
    moment->add_option("--method", ma.method, "closed|polarization|mc");
    moment->add_option("--mc-samples", ma.mc_samples, "Monte Carlo sample count");
    moment->add_option("--seed", ma.seed, "Monte Carlo seed");

    GaugeArgs ga;
    auto* gauge = app.add_subcommand("gauge", "gauge functions on real tuples");
    gauge->add_option("--kind", ga.kind, "hq|phi|slacks")->required();
    gauge->add_option("--x", ga.x_csv, "comma-separated tuple")->required();
    gauge->add_option("--y", ga.y_csv, "second tuple (slacks)");
    gauge->add_option("--q", ga.q, "order q >= 1")->required();
    gauge->add_option("--p", ga.p, "auxiliary order p");
    gauge->add_option("--mc-samples", ga.mc_samples, "Monte Carlo sample count");
    gauge->add_option("--seed", ga.seed, "Monte Carlo seed");

    matnorm::verify::Options vo;
    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "randomized verification suites");
    verify->add_option("--suite", suite, "identities|norm-axioms|gauge|mc-oracle|all");
    verify->add_option("--n", vo.n, "matrix dimension")->check(CLI::PositiveNumber);
    verify->add_option("--trials", vo.trials, "trials per check")->check(CLI::PositiveNumber);
    verify->add_option("--seed", vo.seed, "base seed");
    verify->add_option("--tol", vo.tol, "tolerance for deterministic checks");
    verify->add_option("--mc-samples", vo.mc_samples, "samples per Monte Carlo check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        emit("{\"error\": " + json_str(e.what()) + "}");
        return 2;
    }

    try {
        if (*norm) return run_norm(na);
        if (*moment) return run_moment(ma);
        if (*gauge) return run_gauge(ga);
        if (*verify) {
            std::string lines;
            const bool ok = matnorm::verify::run_suites(suite, vo, lines);
            std::fputs(lines.c_str(), stdout);
            return ok ? 0 : 1;
        }
    } catch (const UsageError& e) {
        emit("{\"error\": " + json_str(e.what()) + "}");
        return 2;
    } catch (const matnorm::ParseError& e) {
        emit("{\"error\": " + json_str(e.what()) + "}");
        return 2;
    } catch (const matnorm::Error& e) {
        emit("{\"error\": " + json_str(e.what()) + "}");
        return 3;
    }
    return 2;
}
