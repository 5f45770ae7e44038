// floqlat: batch front-end for the Floquet phonon-lattice solvers.
//
// Subcommands: fourier, rabi, chiral, circulator, ab, ladder. Each writes a
// CSV or JSON data file and prints the derived constants and validity
// warnings. Exit codes: 0 success, 2 validation failure, 3 solver
// non-convergence.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "floqlat/dynamics.hpp"
#include "floqlat/harmonics.hpp"
#include "floqlat/io.hpp"
#include "floqlat/kernels.hpp"
#include "floqlat/lattice.hpp"
#include "floqlat/presets.hpp"
#include "floqlat/transport.hpp"

namespace {

using namespace floqlat;

struct OutputOpts {
    std::string path;
    std::string format = "csv";
};

void add_output_opts(CLI::App* cmd, OutputOpts& out) {
    cmd->add_option("--out", out.path, "output file path (default <command>.<format>)");
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

void emit(const Table& table, const OutputOpts& out, const std::string& command) {
    std::string path = out.path.empty() ? command + "." + out.format : out.path;
    write_text_file(path, out.format == "csv" ? to_csv(table) : to_json(table));
    std::printf("wrote %s\n", path.c_str());
}

void print_notes(const std::vector<std::string>& notes) {
    for (const auto& n : notes) std::printf("note: %s\n", n.c_str());
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::printf("warning: %s\n", w.c_str());
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
    return v;
}

// ---------------------------------------------------------------- fourier

struct FourierArgs {
    double lambda = -1.0;
    double phi = 0.0;
    int nmax = 8;
    bool figure2 = false;
    OutputOpts out;
};

int run_fourier(const FourierArgs& a) {
    DriveSpec drive;
    drive.omega_d = 1.0; // the coefficients do not depend on omega_d
    if (a.figure2) {
        auto p = preset_figure2();
        drive = p.drive;
    }
    if (a.lambda >= 0.0) drive.lambda = a.lambda;
    drive.phi = a.phi;
    if (!a.figure2 && a.lambda < 0.0)
        throw std::invalid_argument("fourier: --lambda is required (or use --figure2)");

    const Harmonics quad = chi_harmonics(drive, a.nmax);
    const Harmonics closed = chi_harmonics_closed_form(drive, a.nmax);
    double agree = 0.0;
    for (int n = 0; n <= a.nmax; ++n)
        agree = std::max(agree, std::abs(quad.coeffs[n] - closed.coeffs[n]));

    Table t;
    t.columns = {"n", "xi_n", "phi_n_rad"};
    for (int n = 0; n <= a.nmax; ++n) {
        const complexd c = quad.coeffs[n];
        t.add_row({double(n), std::abs(c), n == 0 ? 0.0 : std::arg(c)});
    }
    std::printf("lambda = %s  phi = %s rad  n_max = %d\n", format_number(drive.lambda).c_str(),
                format_number(drive.phi).c_str(), a.nmax);
    std::printf("quadrature vs closed form: max |c_n difference| = %s\n",
                format_number(agree).c_str());
    emit(t, a.out, "fourier");
    return 0;
}

// ------------------------------------------------------------------- rabi

struct RabiArgs {
    bool figure3 = false;
    std::optional<double> g12, g_p, delta_p, lambda, omega_p, omega_d, phi, delta12;
    int boson_dim = 3;
    std::optional<double> tmax;
    int samples = 801;
    OutputOpts out;
};

int run_rabi(const RabiArgs& a) {
    RabiPreset p;
    if (a.figure3) {
        p = preset_figure3();
    } else {
        if (!a.g12 || !a.g_p || !a.delta_p || !a.omega_d || (!a.lambda && !a.omega_p))
            throw std::invalid_argument(
                "rabi: need --g12, --g_p, --delta_p, --omega_d and --lambda (or --omega_p), "
                "or use --figure3");
    }
    auto& s = p.spec;
    if (a.g12) s.g12 = *a.g12;
    if (a.g_p) s.g_p = *a.g_p;
    if (a.delta_p) s.delta_p = *a.delta_p;
    if (a.omega_d) s.omega_d = *a.omega_d;
    if (a.phi) s.phi = *a.phi;
    if (a.lambda && a.omega_p)
        throw std::invalid_argument("rabi: give either --lambda or --omega_p, not both");
    if (a.lambda) s.omega_p = *a.lambda * s.delta_p;
    if (a.omega_p) s.omega_p = *a.omega_p;
    if (a.delta12) s.delta12 = *a.delta12;
    else if (!a.figure3) s.delta12 = -s.omega_d;
    s.boson_dim = a.boson_dim;

    WarningList warn;
    const double chi0 = dispersive_shift(s.g_p, s.delta_p, &warn);
    DriveSpec d{s.lambda(), s.omega_d, s.phi};
    const auto ks = drive_strengths(chi0, s.omega_d, chi_harmonics_closed_form(d, 2), &warn);
    const double k1 = std::abs(ks[0]);
    const double j12 = s.g12 * k1 / 2.0;
    const double t_max = a.tmax ? *a.tmax : 2.0 / (4.0 * j12);

    const RabiComparison rc = rabi_compare(s, t_max, a.samples);

    Table t;
    t.columns = {"t_us", "P1_full", "P2_full", "Pe", "norm", "P1_eff", "P2_eff"};
    const auto& grid = rc.full.times;
    for (size_t i = 0; i < grid.size(); ++i) {
        t.add_row({grid[i], rc.full.series("P1")[i], rc.full.series("P2")[i],
                   rc.full.series("Pe")[i], rc.full.norms[i],
                   rc.effective.series("P1")[i], rc.effective.series("P2")[i]});
    }
    std::printf("lambda = %s  chi0 = %s MHz  K1 = %s  J12 = %s MHz\n",
                format_number(s.lambda()).c_str(), format_number(chi0).c_str(),
                format_number(k1).c_str(), format_number(rc.effective_j12).c_str());
    std::printf("swap time = %s us (leading-order 1/(4 J12) = %s us)\n",
                format_number(rc.swap_time).c_str(), format_number(1.0 / (4.0 * j12)).c_str());
    std::printf("max P2 = %s  max Pe = %s  max |full - effective| = %s\n",
                format_number(rc.max_p2).c_str(), format_number(rc.max_pe).c_str(),
                format_number(rc.max_deviation).c_str());
    print_notes(p.notes);
    print_warnings(warn);
    print_warnings(rc.full.warnings);
    emit(t, a.out, "rabi");
    return 0;
}

// ----------------------------------------------------------------- chiral

struct ChiralArgs {
    bool figure5 = false;
    std::optional<double> flux;
    double tmax = 12.0;
    std::string mode = "eliminated";
    std::optional<double> g12, g13, g23, omega_d, g_p, delta_p, lambda;
    OutputOpts out;
};

int run_chiral(const ChiralArgs& a) {
    CirculatorPreset p;
    if (a.figure5) {
        p = preset_figure5();
    } else {
        if (!a.g12 || !a.g13 || !a.g23 || !a.omega_d || !a.g_p || !a.delta_p || !a.lambda)
            throw std::invalid_argument(
                "chiral: need --g12, --g13, --g23, --omega_d, --g_p, --delta_p and --lambda, "
                "or use --figure5");
        p.flux = M_PI / 2.0;
    }
    auto& s3 = p.spec;
    if (a.g12) s3.g12 = *a.g12;
    if (a.g13) s3.g13 = *a.g13;
    if (a.g23) s3.g23 = *a.g23;
    if (a.omega_d) s3.omega_d = *a.omega_d;
    for (int i = 0; i < 2; ++i) {
        if (a.g_p) s3.g_p[i] = *a.g_p;
        if (a.delta_p) s3.delta_p[i] = *a.delta_p;
        if (a.lambda) s3.omega_p[i] = *a.lambda * s3.delta_p[i];
    }
    if (!a.figure5) s3.boson_dim = 3;
    if (a.mode == "with-qubits") s3.mode = ThreeSiteMode::with_qubits;
    else if (a.mode == "eliminated") s3.mode = ThreeSiteMode::qubit_eliminated;
    else throw std::invalid_argument("chiral: --mode must be eliminated or with-qubits");
    {
        GaugeLattice eff = three_site_effective_lattice(s3);
        p.j12 = eff.hoppings[0].amplitude;
        p.j23 = eff.hoppings[1].amplitude;
    }
    const double flux = a.flux ? *a.flux : p.flux;

    const ChiralResult res = chiral_circulation(p.spec, flux, a.tmax);

    Table t;
    t.columns = {"t_us", "P1", "P2", "P3", "N", "norm"};
    const auto& grid = res.trajectory.times;
    for (size_t i = 0; i < grid.size(); ++i)
        t.add_row({grid[i], res.trajectory.series("P1")[i], res.trajectory.series("P2")[i],
                   res.trajectory.series("P3")[i], res.trajectory.series("N")[i],
                   res.trajectory.norms[i]});

    std::printf("flux = %s rad  J12 = %s MHz  J23 = J31 = %s MHz\n",
                format_number(flux).c_str(), format_number(p.j12).c_str(),
                format_number(p.j23).c_str());
    std::printf("peak times (us): P1 = %s  P2 = %s  P3 = %s\n",
                format_number(res.report.peak_times[0]).c_str(),
                format_number(res.report.peak_times[1]).c_str(),
                format_number(res.report.peak_times[2]).c_str());
    std::printf("circulation: %s (order %d -> %d -> %d)\n", res.report.direction.c_str(),
                res.report.order[0], res.report.order[1], res.report.order[2]);
    print_notes(p.notes);
    print_warnings(res.trajectory.warnings);
    emit(t, a.out, "chiral");
    return 0;
}

// ------------------------------------------------------------- circulator

struct CirculatorArgs {
    bool figure5 = false;
    double delta_min = -1.0, delta_max = 1.0;
    int steps = 201;
    bool no_floquet = false;
    std::string lattice_file;      // optional lattice JSON input (analytic only)
    std::string dump_lattice_file; // optional lattice JSON output
    OutputOpts out;
};

int run_circulator(const CirculatorArgs& a) {
    if (!a.figure5 && a.lattice_file.empty())
        throw std::invalid_argument("circulator: use --figure5 or provide --lattice FILE");
    const auto deltas = linspace(a.delta_min, a.delta_max, a.steps);

    GaugeLattice lat(0);
    CirculatorPreset p;
    bool have_preset = false;
    if (!a.lattice_file.empty()) {
        std::ifstream f(a.lattice_file);
        if (!f) throw std::invalid_argument("circulator: cannot read " + a.lattice_file);
        std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        lat = lattice_from_json(text);
    } else {
        p = preset_figure5();
        have_preset = true;
        lat = three_site_effective_lattice(p.spec);
        lat.loss.assign(3, p.kappa);
    }
    if (!a.dump_lattice_file.empty()) {
        write_text_file(a.dump_lattice_file, lattice_to_json(lat));
        std::printf("wrote %s\n", a.dump_lattice_file.c_str());
    }

    const SweepResult ana = transmission_sweep(lat, deltas, 0);
    const bool with_floquet = have_preset && !a.no_floquet;
    SweepResult flo;
    if (with_floquet)
        flo = floquet_transmission_sweep(p.spec, p.kappa, 0, deltas);

    Table t;
    t.columns = {"delta_d_MHz"};
    for (const auto& l : ana.curve_labels) t.columns.push_back(l + "_analytic");
    if (with_floquet)
        for (const auto& l : flo.curve_labels) t.columns.push_back(l + "_floquet");
    for (size_t i = 0; i < deltas.size(); ++i) {
        std::vector<double> row{deltas[i]};
        for (const auto& c : ana.curves) row.push_back(c[i]);
        if (with_floquet)
            for (const auto& c : flo.curves) row.push_back(c[i]);
        t.rows.push_back(std::move(row));
    }

    if (have_preset) {
        std::printf("J12 = %s MHz  J23 = J31 = %s MHz  kappa/2 = %s MHz  phi_c = %s rad (flux %s)\n",
                    format_number(p.j12).c_str(), format_number(p.j23).c_str(),
                    format_number(p.kappa / 2.0).c_str(), format_number(p.phi_c).c_str(),
                    format_number(p.flux).c_str());
        const auto s0 = scattering_matrix(lat, 0.0);
        std::printf("analytic at delta_d = 0: T1 = %s  T2 = %s  T3 = %s  ccw fidelity = %s\n",
                    format_number(std::norm(s0.s(0, 0))).c_str(),
                    format_number(std::norm(s0.s(1, 0))).c_str(),
                    format_number(std::norm(s0.s(2, 0))).c_str(),
                    format_number(circulator_fidelity(s0, Circulation::ccw)).c_str());
        print_notes(p.notes);
    }
    emit(t, a.out, "circulator");
    return 0;
}

// --------------------------------------------------------------------- ab

struct AbArgs {
    bool figure7 = false;
    std::optional<double> j, kappa, kappa_p;
    int flux_steps = 101;
    double flux_min = 0.0, flux_max = two_pi;
    OutputOpts out;
};

int run_ab(const AbArgs& a) {
    AbPreset p = preset_figure7();
    double j = a.j.value_or(p.j);
    double kappa = a.kappa.value_or(p.kappa);
    double kappa_p = a.kappa_p.value_or(p.kappa_p);
    const auto flux = linspace(a.flux_min, a.flux_max, a.flux_steps);
    const SweepResult sweep = ab_interference(j, kappa, kappa_p, flux);

    Table t;
    t.columns = {"PhiB_rad", "T1", "T2", "T3", "T4"};
    for (size_t i = 0; i < flux.size(); ++i)
        t.add_row({flux[i], sweep.curves[0][i], sweep.curves[1][i], sweep.curves[2][i],
                   sweep.curves[3][i]});

    double peak = 0.0;
    for (double v : sweep.curves[3]) peak = std::max(peak, v);
    std::printf("J = %s MHz  kappa = %s MHz  kappa_p = %s MHz  peak T41 = %s\n",
                format_number(j).c_str(), format_number(kappa).c_str(),
                format_number(kappa_p).c_str(), format_number(peak).c_str());
    if (a.figure7) print_notes(p.notes);
    emit(t, a.out, "ab");
    return 0;
}

// ----------------------------------------------------------------- ladder

struct LadderArgs {
    double t_prime = 1.0, j = 0.5, phi = 0.785398163397448;
    int rungs = 64, k_steps = 201;
    std::string boundary = "periodic";
    OutputOpts out;
};

int run_ladder(const LadderArgs& a) {
    LadderSpec spec;
    spec.n_rungs = a.rungs;
    spec.t_prime = a.t_prime;
    spec.j_rung = a.j;
    spec.phi = a.phi;
    if (a.boundary == "periodic") spec.boundary = Boundary::periodic;
    else if (a.boundary == "open") spec.boundary = Boundary::open;
    else throw std::invalid_argument("ladder: --boundary must be periodic or open");

    Table t;
    if (spec.boundary == Boundary::periodic) {
        const auto ks = linspace(-M_PI, M_PI, a.k_steps);
        const auto [lo, hi] = ladder_bloch_spectrum(spec.t_prime, spec.j_rung, spec.phi, ks);
        t.columns = {"k_rad", "E_minus_MHz", "E_plus_MHz"};
        for (size_t i = 0; i < ks.size(); ++i) t.add_row({ks[i], lo[i], hi[i]});
    } else {
        const auto ev = lattice_spectrum(ladder_lattice(spec));
        t.columns = {"index", "E_MHz"};
        for (size_t i = 0; i < ev.size(); ++i) t.add_row({double(i), ev[i]});
    }
    std::printf("ladder: %d rungs, t' = %s MHz, J = %s MHz, phi = %s rad, plaquette flux = %s rad\n",
                spec.n_rungs, format_number(spec.t_prime).c_str(),
                format_number(spec.j_rung).c_str(), format_number(spec.phi).c_str(),
                format_number(2.0 * spec.phi).c_str());
    emit(t, a.out, "ladder");
    return 0;
}

// ------------------------------------------------------------------ setup

int run_cli(std::vector<std::string> args);

// Translate a JSON experiment config into an argv and re-run the parser.
int run_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read config file: " + path);
    nlohmann::json j = nlohmann::json::parse(f);
    std::vector<std::string> args;
    args.push_back(j.at("command").get<std::string>());
    if (j.contains("parameters")) {
        for (const auto& [key, value] : j.at("parameters").items()) {
            if (value.is_boolean()) {
                if (value.get<bool>()) args.push_back("--" + key);
            } else if (value.is_string()) {
                args.push_back("--" + key);
                args.push_back(value.get<std::string>());
            } else if (value.is_number()) {
                args.push_back("--" + key);
                args.push_back(format_number(value.get<double>()));
            } else {
                throw std::invalid_argument("config: unsupported value type for key '" + key + "'");
            }
        }
    }
    if (j.contains("output")) {
        args.push_back("--format");
        args.push_back(j.at("output").get<std::string>());
    }
    if (j.contains("out_path")) {
        args.push_back("--out");
        args.push_back(j.at("out_path").get<std::string>());
    }
    for (const auto& [key, value] : j.items()) {
        if (key != "command" && key != "parameters" && key != "output" && key != "out_path")
            throw std::invalid_argument("config: unknown top-level key '" + key + "'");
    }
    return run_cli(std::move(args));
}

int run_cli(std::vector<std::string> args) {
    CLI::App app{"Floquet-engineered synthetic magnetism in phonon-cavity lattices"};
    app.require_subcommand(0, 1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON experiment config (alternative to a subcommand)");

    FourierArgs fa;
    auto* fourier = app.add_subcommand("fourier", "Fourier harmonics of the modulated dispersive shift");
    fourier->add_option("--lambda", fa.lambda, "drive-detuning ratio, 0 <= lambda < 1");
    fourier->add_option("--phi", fa.phi, "drive phase (rad)");
    fourier->add_option("--nmax", fa.nmax, "highest harmonic order")->check(CLI::PositiveNumber);
    fourier->add_flag("--figure2", fa.figure2, "preset: lambda = 0.5, phi = 0, nmax = 8");
    add_output_opts(fourier, fa.out);

    RabiArgs ra;
    auto* rabi = app.add_subcommand("rabi", "full two-cavity + p-qubit transfer vs effective hopping");
    rabi->add_flag("--figure3", ra.figure3,
                   "preset: g_p = 60, Delta_p = 600, lambda = 0.5, omega_d = 15, g12 = 1 (MHz)");
    rabi->add_option("--g12", ra.g12, "cavity-cavity coupling (MHz)");
    rabi->add_option("--g_p,--g-p", ra.g_p, "qubit-cavity coupling (MHz)");
    rabi->add_option("--delta_p,--delta-p", ra.delta_p, "qubit-cavity detuning (MHz)");
    rabi->add_option("--lambda", ra.lambda, "drive-detuning ratio");
    rabi->add_option("--omega_p,--omega-p", ra.omega_p, "drive amplitude (MHz), alternative to --lambda");
    rabi->add_option("--omega_d,--omega-d", ra.omega_d, "drive frequency (MHz)");
    rabi->add_option("--phi", ra.phi, "drive phase (rad)");
    rabi->add_option("--delta12", ra.delta12, "renormalized cavity detuning (MHz), default -omega_d");
    rabi->add_option("--boson_dim,--boson-dim", ra.boson_dim, "boson truncation")->check(CLI::Range(2, 16));
    rabi->add_option("--tmax", ra.tmax, "time window (us), default two swap times");
    rabi->add_option("--samples", ra.samples, "sample count")->check(CLI::Range(3, 1000000));
    add_output_opts(rabi, ra.out);

    ChiralArgs ca;
    auto* chiral = app.add_subcommand("chiral", "three-cavity single-phonon circulation");
    chiral->add_flag("--figure5", ca.figure5,
                     "preset: g13 = g23 = 1.1, g12 = 0.042, omega_d = -20, kappa = 0.2 (MHz)");
    chiral->add_option("--flux", ca.flux, "loop flux (rad), default +pi/2");
    chiral->add_option("--tmax", ca.tmax, "time window (us)");
    chiral->add_option("--mode", ca.mode, "eliminated | with-qubits");
    chiral->add_option("--g12", ca.g12, "cavity 1-2 coupling (MHz)");
    chiral->add_option("--g13", ca.g13, "cavity 1-3 coupling (MHz)");
    chiral->add_option("--g23", ca.g23, "cavity 2-3 coupling (MHz)");
    chiral->add_option("--omega_d,--omega-d", ca.omega_d, "drive frequency (MHz)");
    chiral->add_option("--g_p,--g-p", ca.g_p, "qubit-cavity coupling (MHz)");
    chiral->add_option("--delta_p,--delta-p", ca.delta_p, "qubit-cavity detuning (MHz)");
    chiral->add_option("--lambda", ca.lambda, "drive-detuning ratio");
    add_output_opts(chiral, ca.out);

    CirculatorArgs cca;
    auto* circ = app.add_subcommand("circulator", "steady-state transmission sweep of the triangle");
    circ->add_flag("--figure5", cca.figure5, "preset parameters (see chiral --figure5)");
    circ->add_option("--delta_min,--delta-min", cca.delta_min, "sweep start (MHz)");
    circ->add_option("--delta_max,--delta-max", cca.delta_max, "sweep end (MHz)");
    circ->add_option("--steps", cca.steps, "sweep points")->check(CLI::Range(2, 100000));
    circ->add_flag("--no_floquet,--no-floquet", cca.no_floquet, "skip the time-domain solver columns");
    circ->add_option("--lattice", cca.lattice_file, "gauge-lattice JSON input (analytic sweep only)");
    circ->add_option("--dump_lattice,--dump-lattice", cca.dump_lattice_file, "write the swept lattice as JSON");
    add_output_opts(circ, cca.out);

    AbArgs aa;
    auto* ab = app.add_subcommand("ab", "two-path interference transmission vs loop flux");
    ab->add_flag("--figure7", aa.figure7, "preset: J = 0.1, kappa = 0.2 (MHz)");
    ab->add_option("--j", aa.j, "hopping J (MHz)");
    ab->add_option("--kappa", aa.kappa, "port loss (MHz)");
    ab->add_option("--kappa_p,--kappa-p", aa.kappa_p, "path loss (MHz)");
    ab->add_option("--flux_steps,--flux-steps", aa.flux_steps, "sweep points")->check(CLI::Range(2, 100000));
    ab->add_option("--flux_min,--flux-min", aa.flux_min, "sweep start (rad)");
    ab->add_option("--flux_max,--flux-max", aa.flux_max, "sweep end (rad)");
    add_output_opts(ab, aa.out);

    LadderArgs la;
    auto* ladder = app.add_subcommand("ladder", "two-leg flux ladder band structure");
    ladder->add_option("--t_prime,--t-prime", la.t_prime, "leg hopping (MHz)");
    ladder->add_option("--j", la.j, "rung hopping (MHz)");
    ladder->add_option("--phi", la.phi, "leg phase per link (rad); plaquette flux 2 phi");
    ladder->add_option("--rungs", la.rungs, "rung count")->check(CLI::Range(2, 4096));
    ladder->add_option("--boundary", la.boundary, "periodic | open");
    ladder->add_option("--k_steps,--k-steps", la.k_steps, "k-grid points")->check(CLI::Range(2, 100000));
    add_output_opts(ladder, la.out);

    std::vector<const char*> argv;
    argv.push_back("floqlat");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!config_path.empty()) {
        if (app.get_subcommands().empty()) return run_config(config_path);
        throw std::invalid_argument("--config cannot be combined with a subcommand");
    }
    if (fourier->parsed()) return run_fourier(fa);
    if (rabi->parsed()) return run_rabi(ra);
    if (chiral->parsed()) return run_chiral(ca);
    if (circ->parsed()) return run_circulator(cca);
    if (ab->parsed()) return run_ab(aa);
    if (ladder->parsed()) return run_ladder(la);
    std::cout << app.help();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return run_cli(std::move(args));
    } catch (const floqlat::SolverNonConvergence& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
