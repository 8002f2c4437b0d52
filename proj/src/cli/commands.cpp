#include "commands.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "nuspectra/errors.hpp"
#include "nuspectra/verify.hpp"
#include "nuspectra/woods_saxon.hpp"
#include "table_io.hpp"

namespace nuspectra::cli {

namespace {

struct Options {
    std::string variant = "real";
    double v0 = 8.0;
    double v0i = 8.0;
    double r0 = 0.0;
    double a = 1.0;
    double alpha_i = 0.5;
    double q = 1.0;
    double hbar2_over_2m = 1.0;
    int n_max = 3;
    bool n_max_set = false;
    std::string out;
    std::string format = "csv";
    std::string config;
    // potential grid
    double r_min = 0.0;
    double r_max = 20.0;
    int steps = 401;
    std::vector<double> q_list;
    // verify failure-path hook
    double perturb_epsilon = 0.0;
};

bool parse_double(const std::string& s, double& out) {
    try {
        size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size();
    } catch (...) {
        return false;
    }
}

bool parse_int(const std::string& s, int& out) {
    try {
        size_t pos = 0;
        out = std::stoi(s, &pos);
        return pos == s.size();
    } catch (...) {
        return false;
    }
}

// Config-file knobs for one subcommand. Precedence is flag > config file >
// built-in default; unknown config keys are errors.
class KnobSet {
  public:
    void add(const std::string& key, CLI::Option* option,
             std::function<bool(const std::string&)> apply) {
        knobs_[key] = Knob{option, std::move(apply)};
    }

    std::string apply_config(const std::string& path) {
        std::ifstream in(path);
        if (!in) return "cannot read config file: " + path;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto strip = [](std::string s) {
                const auto b = s.find_first_not_of(" \t\r");
                if (b == std::string::npos) return std::string{};
                const auto e = s.find_last_not_of(" \t\r");
                return s.substr(b, e - b + 1);
            };
            line = strip(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                return "config line " + std::to_string(lineno) + ": expected key=value";
            const std::string key = strip(line.substr(0, eq));
            const std::string value = strip(line.substr(eq + 1));
            const auto it = knobs_.find(key);
            if (it == knobs_.end())
                return "config line " + std::to_string(lineno) + ": unknown key '" + key + "'";
            if (it->second.option != nullptr && it->second.option->count() > 0) continue;
            if (!it->second.apply(value))
                return "config line " + std::to_string(lineno) + ": bad value for '" + key + "'";
            from_config_.insert(key);
        }
        return {};
    }

    // True when neither the command line nor the config file touched the key.
    bool untouched(const std::string& key) const {
        const auto it = knobs_.find(key);
        if (it == knobs_.end()) return true;
        if (it->second.option != nullptr && it->second.option->count() > 0) return false;
        return from_config_.count(key) == 0;
    }

  private:
    struct Knob {
        CLI::Option* option = nullptr;
        std::function<bool(const std::string&)> apply;
    };
    std::map<std::string, Knob> knobs_;
    std::set<std::string> from_config_;
};

void add_common_options(CLI::App* cmd, Options& opt, KnobSet& knobs) {
    auto knob_d = [&](const std::string& flag, const std::string& key, double& target,
                      const std::string& help) {
        CLI::Option* o = cmd->add_option(flag, target, help)->capture_default_str();
        knobs.add(key, o, [&target](const std::string& v) { return parse_double(v, target); });
    };
    CLI::Option* variant =
        cmd->add_option("--variant", opt.variant, "potential variant: real, pt, or nonpt")
            ->check(CLI::IsMember({"real", "pt", "nonpt"}))
            ->capture_default_str();
    knobs.add("variant", variant, [&opt](const std::string& v) {
        if (v != "real" && v != "pt" && v != "nonpt") return false;
        opt.variant = v;
        return true;
    });
    knob_d("--v0", "v0", opt.v0, "potential depth V0 (MeV)");
    knob_d("--v0i", "v0i", opt.v0i, "imaginary depth V0I for the nonpt variant (MeV)");
    knob_d("--r0", "r0", opt.r0, "potential radius R0 (fm)");
    knob_d("--a", "a", opt.a, "surface diffuseness a (fm)");
    knob_d("--alpha-i", "alpha_i", opt.alpha_i, "imaginary inverse range alpha_I (1/fm)");
    knob_d("--hbar2-over-2m", "hbar2_over_2m", opt.hbar2_over_2m,
           "hbar^2/2m (MeV fm^2); 20.7355 for an average nucleon");
    CLI::Option* nmax = cmd->add_option("--n-max", opt.n_max, "highest level index")
                            ->check(CLI::NonNegativeNumber)
                            ->capture_default_str();
    knobs.add("n_max", nmax, [&opt](const std::string& v) {
        if (!parse_int(v, opt.n_max)) return false;
        opt.n_max_set = true;
        return opt.n_max >= 0;
    });
    CLI::Option* out = cmd->add_option("--out", opt.out, "output path (stdout when omitted)");
    knobs.add("out", out, [&opt](const std::string& v) {
        opt.out = v;
        return true;
    });
    CLI::Option* format = cmd->add_option("--format", opt.format, "output format")
                              ->check(CLI::IsMember({"csv", "svg"}))
                              ->capture_default_str();
    knobs.add("format", format, [&opt](const std::string& v) {
        if (v != "csv" && v != "svg") return false;
        opt.format = v;
        return true;
    });
    cmd->add_option("--config", opt.config, "key=value config file; flags take precedence");
}

ws::Variant make_variant(const Options& opt) {
    if (opt.variant == "pt") return ws::PTSymmetricVariant{opt.alpha_i};
    if (opt.variant == "nonpt") return ws::NonPTVariant{opt.v0i, opt.alpha_i};
    return ws::RealVariant{};
}

ws::PhysicalParams make_params(const Options& opt) {
    return ws::PhysicalParams{opt.v0, opt.r0, opt.a, opt.q, opt.hbar2_over_2m};
}

std::string metadata_line(const Options& opt) {
    std::ostringstream os;
    os << "# variant=" << opt.variant << " v0=" << format_double(opt.v0);
    if (opt.variant == "nonpt") os << " v0i=" << format_double(opt.v0i);
    if (opt.variant != "real") os << " alpha_i=" << format_double(opt.alpha_i);
    os << " r0=" << format_double(opt.r0) << " a=" << format_double(opt.a)
       << " q=" << format_double(opt.q)
       << " hbar2_over_2m=" << format_double(opt.hbar2_over_2m);
    return os.str();
}

void emit(const Options& opt, const std::string& content) {
    if (opt.out.empty()) {
        std::cout << content;
        return;
    }
    write_file_atomic(opt.out, content);
}

int cmd_spectrum(const Options& opt) {
    const auto params = make_params(opt);
    const auto variant = make_variant(opt);
    ws::validate(params, variant);
    const auto entries = ws::spectrum(params, variant, opt.n_max);

    if (opt.format == "svg") {
        Series s;
        s.name = opt.variant;
        for (const auto& e : entries)
            if (e.valid) s.points.emplace_back(e.n, e.E_n.real());
        emit(opt, render_svg("Bound levels vs n", "n", "Re E_n (MeV)", {s}));
        return 0;
    }

    std::ostringstream csv;
    csv << "# nu-spectra spectrum\n" << metadata_line(opt) << " n_max=" << opt.n_max << "\n";
    csv << "variant,n,re_E,im_E,re_eps,im_eps,re_t,im_t,valid\n";
    for (const auto& e : entries) {
        csv << opt.variant << ',' << e.n << ',' << format_double(e.E_n.real()) << ','
            << format_double(e.E_n.imag()) << ',' << format_double(e.epsilon_n.real()) << ','
            << format_double(e.epsilon_n.imag()) << ',' << format_double(e.t_n.real()) << ','
            << format_double(e.t_n.imag()) << ',' << (e.valid ? "true" : "false") << '\n';
    }
    emit(opt, csv.str());
    return 0;
}

int cmd_potential(const Options& opt) {
    std::vector<double> qs = opt.q_list;
    if (qs.empty()) qs = {0.5, 1.0, 1.5, 2.0};
    const auto variant = make_variant(opt);
    for (double q : qs) {
        ws::PhysicalParams params = make_params(opt);
        params.q = q;
        ws::validate(params, variant);
    }
    if (!(opt.r_max > opt.r_min) || opt.steps < 2)
        throw std::invalid_argument("potential: need r_max > r_min and steps >= 2");

    std::ostringstream csv;
    csv << "# nu-spectra potential\n"
        << metadata_line(opt) << " r_min=" << format_double(opt.r_min)
        << " r_max=" << format_double(opt.r_max) << " steps=" << opt.steps << "\n";
    csv << "q,r,re_V,im_V\n";
    std::vector<Series> series;
    const double dr = (opt.r_max - opt.r_min) / (opt.steps - 1);
    for (double q : qs) {
        ws::PhysicalParams params = make_params(opt);
        params.q = q;
        Series s;
        s.name = "q=" + format_double(q);
        for (int i = 0; i < opt.steps; ++i) {
            const double r = opt.r_min + dr * i;
            csv << format_double(q) << ',' << format_double(r) << ',';
            try {
                const Complex v = ws::potential_value(params, variant, r);
                csv << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
                s.points.emplace_back(r, v.real());
            } catch (const PoleAtR&) {
                csv << ",\n";
                std::cerr << "warning: potential pole at r = " << format_double(r)
                          << " (q = " << format_double(q) << ")\n";
            }
        }
        series.push_back(std::move(s));
    }
    if (opt.format == "svg") {
        emit(opt, render_svg("Woods-Saxon potential", "r (fm)", "Re V (MeV)", series));
        return 0;
    }
    emit(opt, csv.str());
    return 0;
}

// Highest bound level, or -1 when none.
int max_valid_level(const ws::PhysicalParams& params, const ws::Variant& variant) {
    int n = -1;
    while (ws::level_valid(params, variant, n + 1)) ++n;
    return n;
}

int cmd_wavefunction(const Options& opt) {
    if (opt.variant != "real")
        throw std::invalid_argument("wavefunction: eigenfunctions exist only for the real variant");
    if (opt.q != 1.0) throw std::invalid_argument("wavefunction: only q = 1 is supported");
    const auto params = make_params(opt);
    ws::validate(params, ws::RealVariant{});
    const int top = max_valid_level(params, ws::RealVariant{});
    if (top < 0) throw std::domain_error("wavefunction: no bound levels for these parameters");
    const int n_hi = opt.n_max_set ? opt.n_max : std::min(2, top);
    if (n_hi > top)
        throw std::domain_error("wavefunction: level " + std::to_string(n_hi) +
                                " is not bound (max valid n = " + std::to_string(top) + ")");

    constexpr int kSamples = 401;
    constexpr double kLo = 0.0025, kHi = 0.9975;
    std::ostringstream csv;
    csv << "# nu-spectra wavefunction\n" << metadata_line(opt) << " n_max=" << n_hi << "\n";
    csv << "n,s,R_n\n";
    std::vector<Series> series;
    for (int n = 0; n <= n_hi; ++n) {
        const auto wf = ws::bound_state(params, n);
        Series s;
        s.name = "n=" + std::to_string(n);
        for (int i = 0; i < kSamples; ++i) {
            const double x = kLo + (kHi - kLo) * i / (kSamples - 1);
            const double value = ws::wavefunction_eval(wf, x);
            csv << n << ',' << format_double(x) << ',' << format_double(value) << '\n';
            s.points.emplace_back(x, value);
        }
        series.push_back(std::move(s));
    }
    if (opt.format == "svg") {
        emit(opt, render_svg("s-state wavefunctions", "s", "R_n(s)", series));
        return 0;
    }
    emit(opt, csv.str());
    return 0;
}

int cmd_verify(const Options& opt) {
    const auto report = verify::run_all(opt.perturb_epsilon);
    std::ostringstream os;
    for (const auto& check : report.checks)
        os << (check.pass ? "PASS" : "FAIL") << "  " << check.name << "  (" << check.detail
           << ")\n";
    os << "note: " << report.notes << "\n";
    os << report.errata;
    os << (report.all_pass ? "verification: all checks passed\n"
                           : "verification: FAILURES present\n");
    emit(opt, os.str());
    return report.all_pass ? 0 : 3;
}

int cmd_figures(const Options& opt) {
    namespace fs = std::filesystem;
    const fs::path dir = opt.out.empty() ? fs::path{"."} : fs::path{opt.out};
    fs::create_directories(dir);

    // Potential curves: V0 = 5 MeV, R0 = 5.8 fm, a defaults to 0.65 fm
    // (0.68 fm is the competing published value; --a overrides).
    {
        std::ostringstream csv;
        csv << "# nu-spectra figures: potential vs r\n"
            << "# v0=5 r0=5.8 a=" << format_double(opt.a) << " q in {0.5,1,1.5,2}\n";
        csv << "q,r,re_V,im_V\n";
        std::vector<Series> series;
        constexpr int kSteps = 401;
        for (double q : {0.5, 1.0, 1.5, 2.0}) {
            ws::PhysicalParams params{5.0, 5.8, opt.a, q, opt.hbar2_over_2m};
            Series s;
            s.name = "q=" + format_double(q);
            for (int i = 0; i < kSteps; ++i) {
                const double r = 20.0 * i / (kSteps - 1);
                const Complex v = ws::potential_value(params, ws::RealVariant{}, r);
                csv << format_double(q) << ',' << format_double(r) << ','
                    << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
                s.points.emplace_back(r, v.real());
            }
            series.push_back(std::move(s));
        }
        write_file_atomic(dir / "fig1.csv", csv.str());
        if (opt.format == "svg")
            write_file_atomic(dir / "fig1.svg",
                              render_svg("Woods-Saxon potential", "r (fm)", "V (MeV)", series));
    }

    // Energy levels against n for a sweep of the diffuseness.
    {
        std::ostringstream csv;
        csv << "# nu-spectra figures: energy levels vs n\n"
            << "# v0=5 q=1 hbar2_over_2m=" << format_double(opt.hbar2_over_2m)
            << " a in {0.55,0.65,0.75}\n";
        csv << "a,n,re_E,im_E,valid\n";
        std::vector<Series> series;
        for (double a : {0.55, 0.65, 0.75}) {
            ws::PhysicalParams params{5.0, 0.0, a, 1.0, opt.hbar2_over_2m};
            Series s;
            s.name = "a=" + format_double(a);
            for (const auto& e : ws::spectrum(params, ws::RealVariant{}, 3)) {
                csv << format_double(a) << ',' << e.n << ',' << format_double(e.E_n.real()) << ','
                    << format_double(e.E_n.imag()) << ',' << (e.valid ? "true" : "false") << '\n';
                if (e.valid) s.points.emplace_back(e.n, e.E_n.real());
            }
            series.push_back(std::move(s));
        }
        write_file_atomic(dir / "fig2.csv", csv.str());
        if (opt.format == "svg")
            write_file_atomic(dir / "fig2.svg",
                              render_svg("Bound levels vs n", "n", "E_n (MeV)", series));
    }

    // First three s-state wavefunctions; parameters give beta = 16 so that
    // three levels are bound.
    {
        ws::PhysicalParams params{8.0, 0.0, 1.0, 1.0, 0.5};
        std::ostringstream csv;
        csv << "# nu-spectra figures: wavefunctions vs s\n"
            << "# v0=8 a=1 q=1 hbar2_over_2m=0.5 (beta=16)\n";
        csv << "n,s,R_n\n";
        std::vector<Series> series;
        constexpr int kSamples = 401;
        constexpr double kLo = 0.0025, kHi = 0.9975;
        for (int n = 0; n <= 2; ++n) {
            const auto wf = ws::bound_state(params, n);
            Series s;
            s.name = "n=" + std::to_string(n);
            for (int i = 0; i < kSamples; ++i) {
                const double x = kLo + (kHi - kLo) * i / (kSamples - 1);
                const double value = ws::wavefunction_eval(wf, x);
                csv << n << ',' << format_double(x) << ',' << format_double(value) << '\n';
                s.points.emplace_back(x, value);
            }
            series.push_back(std::move(s));
        }
        write_file_atomic(dir / "fig3.csv", csv.str());
        if (opt.format == "svg")
            write_file_atomic(dir / "fig3.svg",
                              render_svg("s-state wavefunctions", "s", "R_n(s)", series));
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Closed-form Woods-Saxon bound-state spectra via the Nikiforov-Uvarov "
                 "reduction, with independent numeric verification"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* spectrum = app.add_subcommand("spectrum", "bound-state energies as CSV");
    CLI::App* potential = app.add_subcommand("potential", "potential values on an r grid");
    CLI::App* wavefunction = app.add_subcommand("wavefunction", "normalized s-state wavefunctions");
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the oracle suite");
    CLI::App* figures = app.add_subcommand("figures", "emit fig1/fig2/fig3 data files");

    std::map<CLI::App*, KnobSet> knobsets;
    for (CLI::App* cmd : {spectrum, potential, wavefunction, verify_cmd, figures})
        add_common_options(cmd, opt, knobsets[cmd]);

    for (CLI::App* cmd : {spectrum, wavefunction, verify_cmd, figures}) {
        CLI::Option* o =
            cmd->add_option("--q", opt.q, "deformation constant q")->capture_default_str();
        knobsets[cmd].add("q", o, [&opt](const std::string& v) { return parse_double(v, opt.q); });
    }
    potential->add_option("--q", opt.q_list,
                          "deformation constant; repeatable (default 0.5 1 1.5 2)");
    {
        KnobSet& kn = knobsets[potential];
        CLI::Option* o =
            potential->add_option("--r-min", opt.r_min, "grid start (fm)")->capture_default_str();
        kn.add("r_min", o, [&opt](const std::string& v) { return parse_double(v, opt.r_min); });
        o = potential->add_option("--r-max", opt.r_max, "grid end (fm)")->capture_default_str();
        kn.add("r_max", o, [&opt](const std::string& v) { return parse_double(v, opt.r_max); });
        o = potential->add_option("--steps", opt.steps, "grid point count")
                ->check(CLI::PositiveNumber)
                ->capture_default_str();
        kn.add("steps", o, [&opt](const std::string& v) { return parse_int(v, opt.steps); });
    }
    verify_cmd->add_option("--perturb-epsilon", opt.perturb_epsilon,
                           "relative epsilon perturbation injected into the residual checks "
                           "(failure-path hook)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    CLI::App* active = nullptr;
    for (CLI::App* cmd : {spectrum, potential, wavefunction, verify_cmd, figures})
        if (app.got_subcommand(cmd)) active = cmd;
    KnobSet& knobs = knobsets[active];

    if (active->count("--n-max") > 0) opt.n_max_set = true;
    if (!opt.config.empty()) {
        const std::string err = knobs.apply_config(opt.config);
        if (!err.empty()) {
            std::cerr << "error: " << err << '\n';
            return 1;
        }
    }
    // Preset for the potential figure: V0 = 5 MeV, R0 = 5.8 fm, a = 0.65 fm.
    if (active == potential) {
        if (knobs.untouched("v0")) opt.v0 = 5.0;
        if (knobs.untouched("r0")) opt.r0 = 5.8;
        if (knobs.untouched("a")) opt.a = 0.65;
    }
    if (active == figures && knobs.untouched("a")) opt.a = 0.65;

    try {
        if (active == spectrum) return cmd_spectrum(opt);
        if (active == potential) return cmd_potential(opt);
        if (active == wavefunction) return cmd_wavefunction(opt);
        if (active == verify_cmd) return cmd_verify(opt);
        return cmd_figures(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

int run(const std::vector<std::string>& args) {
    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("nu-spectra");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(storage.size());
    for (const std::string& s : storage) argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace nuspectra::cli
