#include "boxlab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "boxlab/box_world.hpp"
#include "boxlab/cabello.hpp"
#include "boxlab/gnst.hpp"
#include "boxlab/io.hpp"
#include "boxlab/optimizer.hpp"

namespace boxlab::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string human(double v) { return fmt(v, 6); }

// Writes to a sibling temporary and renames, so readers never see a partial file.
void write_atomically(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
        f << content;
        if (!f) throw std::runtime_error("write to " + tmp + " failed");
    }
    std::filesystem::rename(tmp, path);
}

void emit(const std::string& content, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") out << content;
    else write_atomically(path, content);
}

double parse_gamma(const std::string& s) {
    if (s == "gamma0") return cabello::kGamma0;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw UsageError("--gamma expects a number or 'gamma0', got '" + s + "'");
    }
    return v;
}

// ---------------------------------------------------------------------------

struct ScanArgs {
    double x = 1.0, y = 1.0, z = 1.0;
    std::string gamma = "gamma0";
    double t_min = 0.0, t_max = 1.0;
    int steps = 100;
    std::string out;
};

int cmd_scan(const ScanArgs& a, std::ostream& out) {
    if (a.steps < 1) throw UsageError("--steps must be at least 1");
    if (!(a.x > 0 && a.y > 0 && a.z > 0)) throw UsageError("--x, --y, --z must be positive");
    if (!(a.t_min >= 0.0 && a.t_max <= 1.0 && a.t_min <= a.t_max)) {
        throw UsageError("need 0 <= --t-min <= --t-max <= 1");
    }
    const double gamma = parse_gamma(a.gamma);
    const auto rows = cabello::scan_C(a.x, a.y, a.z, gamma, cabello::linear_grid(a.t_min, a.t_max, a.steps));
    emit(cabello::scan_to_csv(rows), a.out, out);
    return kExitOk;
}

int cmd_optimize(const std::string& target, bool as_json, std::ostream& out) {
    const auto res = opt::optimize_target(target);
    if (!res) throw UsageError("unknown target '" + target + "'");
    if (as_json) {
        out << io::to_json(*res).dump(2) << '\n';
        return kExitOk;
    }
    out << "target      " << res->objective << '\n' << "value       " << human(res->value) << '\n' << "argmax     ";
    for (std::size_t k = 0; k < res->names.size(); ++k) out << ' ' << res->names[k] << '=' << human(res->argmax[k]);
    out << '\n' << "evaluations " << res->evaluations << '\n';
    return kExitOk;
}

int cmd_lp(const std::string& problem, std::ostream& out) {
    std::optional<lp::LinearProgram> prog;
    try {
        prog = lp::problem_by_name(problem);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!prog) throw UsageError("unknown problem '" + problem + "'");
    const auto sol = lp::simplex_solve(*prog);
    auto j = io::to_json(sol);
    j["problem"] = problem;
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_nqubit(int n_min, int n_max, std::ostream& out) {
    if (n_min < 3 || n_max < n_min) throw UsageError("need 3 <= --n-min <= --n-max");
    out << "n,P_max\n";
    for (int n = n_min; n <= n_max; ++n) out << n << ',' << fmt(cabello::nqubit_hardy_max(n), 17) << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string dist;
    std::string file;
    bool json = false;
    std::string report_csv;
};

struct Loaded {
    box::JointDistribution d;
    std::optional<box::ExactDistribution> exact;
    std::string source;
};

Loaded load_distribution(const VerifyArgs& a) {
    Loaded l;
    if (a.file.empty()) {
        if (a.dist.empty()) throw UsageError("verify needs --dist or --file");
        try {
            const auto id = box::fixture_from_name(a.dist);
            l.exact = box::fixture_distribution(id);
            l.d = l.exact->to_double();
            l.source = "fixture " + a.dist;
            return l;
        } catch (const std::invalid_argument&) {
            // not a fixture id; treat as a path
        }
    }
    const std::string path = a.file.empty() ? a.dist : a.file;
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io::FormatError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    l.d = io::distribution_from_string(ss.str());
    l.source = path;
    return l;
}

template <class T>
std::string show(const T& v) {
    if constexpr (std::is_same_v<T, Rational>) {
        return v.den() == 1 ? v.str() : v.str() + " (" + human(v.to_double()) + ")";
    } else {
        return human(v);
    }
}

template <class T>
io::json as_json_number(const T& v) {
    return boxlab::to_double(v);
}

template <class T>
void report_expressions(const box::Behavior<3, T>& d, bool no_signaling, io::json& j, std::ostream& os) {
    const auto hc = box::hardy_cabello_check(d);
    j["hardy_cabello"] = {{"P", as_json_number(hc.p)}, {"Q", as_json_number(hc.q)}, {"C", as_json_number(hc.c)},
                          {"zeros_ok", hc.zeros_ok}};
    os << "Hardy/Cabello: P=" << show(hc.p) << " Q=" << show(hc.q) << " C=" << show(hc.c)
       << " zeros " << (hc.zeros_ok ? "hold" : "violated") << '\n';

    const T bell = box::bell_inequality_value(d);
    j["bell_value"] = as_json_number(bell);
    os << "Bell-type LHS-RHS: " << show(bell) << (boxlab::to_double(bell) > box::kTolerance ? " (violated)" : "") << '\n';

    const T g = box::gyni_value(d);
    j["gyni"] = as_json_number(g);
    os << "GYNI: " << show(g) << (boxlab::to_double(g) > 1.0 + box::kTolerance ? " (violated)" : " (<= 1)") << '\n';

    const T sv1 = box::svetlichny_value(d, box::kSvetlichnyCanonical);
    const T sv2 = box::svetlichny_value(d, box::kSvetlichnyAlternate);
    j["svetlichny"] = {as_json_number(sv1), as_json_number(sv2)};
    os << "Svetlichny: S_v1=" << show(sv1) << " S_v2=" << show(sv2) << '\n';

    if (!no_signaling) {
        j["rahaman"] = nullptr;
        j["chsh_12"] = nullptr;
        os << "Rahaman: n/a (signaling)\nCHSH(1,2): n/a (signaling)\n";
        return;
    }
    const auto rh = box::rahaman_check(d);
    j["rahaman"] = {{"P", as_json_number(rh.p)}, {"zeros_ok", rh.zeros_ok}, {"pass", rh.ok}};
    os << "Rahaman: " << (rh.ok ? "pass" : "fail") << " (P=" << show(rh.p) << ")\n";
    const T chsh = box::chsh_value(box::trace_out_third(d));
    j["chsh_12"] = as_json_number(chsh);
    os << "CHSH(1,2): " << show(chsh) << '\n';
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    Loaded l;
    try {
        l = load_distribution(a);
    } catch (const io::FormatError& e) {
        throw UsageError(e.what());
    }
    const auto rep = box::validate(l.d);
    io::json j{{"source", l.source},
               {"validation",
                {{"positivity", rep.positivity_ok},
                 {"normalization", rep.normalization_ok},
                 {"no_signaling", rep.no_signaling_ok},
                 {"worst_negativity", rep.worst_negativity},
                 {"worst_normalization", rep.worst_normalization},
                 {"worst_signaling", rep.worst_signaling}}}};
    std::ostringstream os;
    os << "source: " << l.source << '\n'
       << "positivity: " << (rep.positivity_ok ? "ok" : "VIOLATED") << " (worst " << human(rep.worst_negativity) << ")\n"
       << "normalization: " << (rep.normalization_ok ? "ok" : "VIOLATED") << " (worst "
       << human(rep.worst_normalization) << ")\n"
       << "no-signaling: " << (rep.no_signaling_ok ? "ok" : "VIOLATED") << " (worst " << human(rep.worst_signaling)
       << ")\n";
    if (l.exact) report_expressions(*l.exact, rep.no_signaling_ok, j, os);
    else report_expressions(l.d, rep.no_signaling_ok, j, os);

    if (!a.report_csv.empty()) emit(rep.to_csv(), a.report_csv, out);
    if (a.json) out << j.dump(2) << '\n';
    else out << os.str();
    return rep.ok() ? kExitOk : kExitInvalid;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"boxlab: Cabello/Hardy nonlocality for generalized GHZ states and no-signaling boxes"};
    app.name("boxlab");
    app.require_subcommand(1);

    ScanArgs scan;
    auto* s = app.add_subcommand("scan", "Sample C(t, x, y, z, gamma) on a t-grid (CSV)");
    s->add_option("--x", scan.x, "tan(beta_1)");
    s->add_option("--y", scan.y, "tan(beta_2)");
    s->add_option("--z", scan.z, "tan(beta_3)");
    s->add_option("--gamma", scan.gamma, "summed phase in radians, or 'gamma0' for -arccos(7/8)");
    s->add_option("--t-min", scan.t_min);
    s->add_option("--t-max", scan.t_max);
    s->add_option("--steps", scan.steps, "number of grid intervals");
    s->add_option("--out", scan.out, "output file (default stdout)");

    std::string target;
    bool opt_json = false;
    auto* o = app.add_subcommand("optimize", "Numerically maximize a success probability");
    o->add_option("--target", target, "cna3, hna3, cna2 or hna2")->required();
    o->add_flag("--json", opt_json);

    std::string problem;
    auto* l = app.add_subcommand("lp", "Solve a no-signaling linear program (JSON)");
    l->add_option("--problem", problem, "gnst, rahaman, gyni or gap:<p>")->required();

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Validate a box322-v1 distribution and evaluate inequalities");
    v->add_option("--dist", verify.dist, "fixture id (set20, set21, set23, set_c04) or file path");
    v->add_option("--file", verify.file, "file path, bypassing fixture lookup");
    v->add_flag("--json", verify.json);
    v->add_option("--report-csv", verify.report_csv, "write the per-constraint validation report as CSV");

    int n_min = 3, n_max = 12;
    auto* n = app.add_subcommand("nqubit", "Tabulate the n-qubit Hardy maximum (CSV)");
    n->add_option("--n-min", n_min);
    n->add_option("--n-max", n_max);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*s) return cmd_scan(scan, out);
        if (*o) return cmd_optimize(target, opt_json, out);
        if (*l) return cmd_lp(problem, out);
        if (*v) return cmd_verify(verify, out);
        if (*n) return cmd_nqubit(n_min, n_max, out);
    } catch (const UsageError& e) {
        const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << "error: " << e.what() << "\n\n" << sub->help();
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace boxlab::cli
