// Command-line driver: one subcommand per batch analysis, CSV output only.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ikeda/csv.hpp"
#include "ikeda/extreme.hpp"
#include "ikeda/orbit.hpp"
#include "ikeda/spectrum.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

using namespace ikeda;

std::string env_name(std::string flag) {
    for (char& c : flag) {
        if (c == '-') c = '_';
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return "IKEDA_" + flag;
}

// Adds an option and wires up its IKEDA_ environment override.
template <typename T>
CLI::Option* opt(CLI::App* app, const std::string& flag, T& var,
                 const std::string& desc) {
    auto* o = app->add_option("--" + flag, var, desc);
    o->envname(env_name(flag));
    return o;
}

struct SharedOpts {
    MapParams params;
    OrbitSpec spec;
    std::string out;

    void attach(CLI::App* app, bool with_gamma = true) {
        if (with_gamma) {
            opt(app, "gamma", params.gamma, "gain/loss coefficient");
        }
        opt(app, "beta", params.beta, "nonlinear phase coefficient");
        opt(app, "eta", params.eta, "saturation strength");
        auto* e = app->add_option_function<double>(
            "--ein",
            [this](double v) {
                params.e_in = v;
                params.e_in_prime = v;
            },
            "drive amplitude E_in = E'_in (real)");
        e->envname(env_name("ein"));
        opt(app, "phil", params.phi_l, "linear phase");
        opt(app, "transient", spec.n_transient, "discarded iterations");
        opt(app, "keep", spec.n_keep, "recorded steady-state iterations");
        opt(app, "out", out, "output CSV path")->required();
    }
};

int write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return kExitIo;
    }
    f << body;
    f.flush();
    if (!f) {
        std::cerr << "error: write failed for " << path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int run_eigsweep(double gmin, double gmax, int steps, const std::string& out) {
    const auto rows = eigenspectrum_sweep(gmin, gmax, steps);
    std::ostringstream csv;
    csv << "gamma,re_l1,im_l1,re_l2,im_l2,regime\n";
    for (const auto& r : rows) {
        csv << fmt_g17(r.gamma) << ',' << fmt_g17(r.lambda1.real()) << ','
            << fmt_g17(r.lambda1.imag()) << ',' << fmt_g17(r.lambda2.real())
            << ',' << fmt_g17(r.lambda2.imag()) << ',' << regime_name(r.regime)
            << '\n';
    }
    return write_file(out, csv.str());
}

int run_orbit(const SharedOpts& o) {
    const Orbit orbit = iterate_orbit(o.params, o.spec);
    std::ostringstream csv;
    csv << "j,re_e1,im_e1,re_e4,im_e4,p1,p4\n";
    for (size_t j = 0; j < orbit.states.size(); ++j) {
        const auto& s = orbit.states[j];
        csv << j << ',' << fmt_g17(s.e1.real()) << ',' << fmt_g17(s.e1.imag())
            << ',' << fmt_g17(s.e4.real()) << ',' << fmt_g17(s.e4.imag()) << ','
            << fmt_g17(orbit.p1[j]) << ',' << fmt_g17(orbit.p4[j]) << '\n';
    }
    if (orbit.diverged) {
        csv << orbit.states.size() << ",diverged,diverged,diverged,diverged,"
            << "diverged,diverged\n";
    }
    return write_file(o.out, csv.str());
}

int run_bifurcation(const SharedOpts& o, double gmin, double gmax, int steps,
                    int points) {
    const auto cols =
        bifurcation_scan(o.params, gmin, gmax, steps, o.spec, points);
    std::ostringstream csv;
    csv << "gamma,p4\n";
    for (const auto& col : cols) {
        if (col.diverged) {
            csv << fmt_g17(col.gamma) << ",diverged\n";
            continue;
        }
        for (double p : col.p4) {
            csv << fmt_g17(col.gamma) << ',' << fmt_g17(p) << '\n';
        }
    }
    return write_file(o.out, csv.str());
}

int run_lle(const SharedOpts& o, double gmin, double gmax, int steps) {
    const auto cols = lle_scan(o.params, gmin, gmax, steps, o.spec);
    std::ostringstream csv;
    csv << "gamma,lle\n";
    for (const auto& col : cols) {
        csv << fmt_g17(col.gamma) << ',';
        if (col.result.diverged) {
            csv << "diverged\n";
        } else {
            csv << fmt_g17(col.result.value) << '\n';
        }
    }
    return write_file(o.out, csv.str());
}

int run_basin(const SharedOpts& o, double gmin, double gmax, double emin,
              double emax, int res, int threads) {
    const auto grid = parameter_basin(o.params, gmin, gmax, emin, emax, res,
                                      res, o.spec, threads);
    std::ostringstream csv;
    csv << "gamma,e_in,label,lle\n";
    for (int ig = 0; ig < grid.n_gamma; ++ig) {
        for (int ie = 0; ie < grid.n_e; ++ie) {
            const auto& cell = grid.at(ig, ie);
            csv << fmt_g17(grid.gammas[ig]) << ',' << fmt_g17(grid.e_ins[ie])
                << ',' << label_name(cell.label) << ',';
            if (cell.lle) csv << fmt_g17(*cell.lle);
            csv << '\n';
        }
    }
    return write_file(o.out, csv.str());
}

int run_ee(const SharedOpts& o, double multiplier, int bins,
           const std::string& events_out, const std::string& hist_out) {
    const Orbit orbit = iterate_orbit(o.params, o.spec);
    if (orbit.diverged) {
        std::ostringstream csv;
        csv << "mean,std,threshold,multiplier,n_events,max_value,n_samples\n";
        csv << "diverged,diverged,diverged," << fmt_g17(multiplier)
            << ",diverged,diverged," << orbit.p4.size() << '\n';
        return write_file(o.out, csv.str());
    }
    const EEReport report = ee_report(orbit.p4, multiplier);

    std::ostringstream csv;
    csv << "mean,std,threshold,multiplier,n_events,max_value,n_samples\n";
    csv << fmt_g17(report.mean) << ',' << fmt_g17(report.std) << ','
        << fmt_g17(report.threshold) << ',' << fmt_g17(report.multiplier) << ','
        << report.n_events << ',' << fmt_g17(report.max_value) << ','
        << report.n_samples << '\n';
    if (int rc = write_file(o.out, csv.str()); rc != kExitOk) return rc;

    std::ostringstream ev;
    ev << "event_index\n";
    for (long idx : report.event_indices) ev << idx << '\n';
    const std::string ev_path =
        events_out.empty() ? o.out + ".events.csv" : events_out;
    if (int rc = write_file(ev_path, ev.str()); rc != kExitOk) return rc;

    if (!hist_out.empty()) {
        const Histogram hist = probability_histogram(orbit.p4, bins);
        std::ostringstream hv;
        hv << "bin_left,bin_right,prob\n";
        for (size_t k = 0; k < hist.probs.size(); ++k) {
            hv << fmt_g17(hist.edges[k]) << ',' << fmt_g17(hist.edges[k + 1])
               << ',' << fmt_g17(hist.probs[k]) << '\n';
        }
        if (int rc = write_file(hist_out, hv.str()); rc != kExitOk) return rc;
    }
    return kExitOk;
}

int run_crisis(const SharedOpts& o, int switch_min,
               const std::string& dump_out) {
    const Orbit orbit = iterate_orbit(o.params, o.spec);
    std::ostringstream csv;
    csv << "gamma,frac_positive,n_sign_switches,cluster_gap,merged\n";
    if (orbit.diverged) {
        csv << fmt_g17(o.params.gamma) << ",diverged,diverged,diverged,diverged\n";
        return write_file(o.out, csv.str());
    }
    const CrisisReport report = crisis_report(orbit, switch_min);
    csv << fmt_g17(o.params.gamma) << ',' << fmt_g17(report.frac_positive)
        << ',' << report.n_sign_switches << ',';
    if (report.both_signs) {
        csv << fmt_g17(report.cluster_gap);
    } else {
        csv << "na";
    }
    csv << ',' << (report.merged ? "true" : "false") << '\n';
    if (int rc = write_file(o.out, csv.str()); rc != kExitOk) return rc;

    if (!dump_out.empty()) {
        std::ostringstream dv;
        dv << "re_e4,im_e4\n";
        for (const auto& [re, im] : state_plane_dump(orbit)) {
            dv << fmt_g17(re) << ',' << fmt_g17(im) << '\n';
        }
        if (int rc = write_file(dump_out, dv.str()); rc != kExitOk) return rc;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ikeda map with balanced gain and loss: simulation and "
                 "analysis toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value configuration file");

    // eigsweep
    auto* eig = app.add_subcommand("eigsweep",
                                   "eigenvalues of the linear transfer matrix "
                                   "over a gamma range");
    double eg_min = 0.0, eg_max = 1.5;
    int eg_steps = 151;
    std::string eig_out;
    opt(eig, "gamma-min", eg_min, "range start");
    opt(eig, "gamma-max", eg_max, "range end");
    opt(eig, "steps", eg_steps, "number of samples");
    opt(eig, "out", eig_out, "output CSV path")->required();

    // orbit
    auto* orb = app.add_subcommand("orbit",
                                   "steady-state trajectory at one gamma");
    SharedOpts orb_o;
    orb_o.attach(orb);

    // bifurcation
    auto* bif = app.add_subcommand("bifurcation",
                                   "steady-state P4 samples per gamma column");
    SharedOpts bif_o;
    double bg_min = 0.6, bg_max = 1.0;
    int bg_steps = 400, bg_points = 200;
    bif_o.attach(bif, /*with_gamma=*/false);
    opt(bif, "gamma-min", bg_min, "range start");
    opt(bif, "gamma-max", bg_max, "range end");
    opt(bif, "gamma-steps", bg_steps, "number of gamma columns");
    opt(bif, "points", bg_points, "steady-state samples per column");

    // lle
    auto* lle_cmd = app.add_subcommand("lle",
                                       "largest Lyapunov exponent per gamma");
    SharedOpts lle_o;
    double lg_min = 0.6, lg_max = 1.0;
    int lg_steps = 200;
    lle_o.attach(lle_cmd, /*with_gamma=*/false);
    opt(lle_cmd, "gamma-min", lg_min, "range start");
    opt(lle_cmd, "gamma-max", lg_max, "range end");
    opt(lle_cmd, "gamma-steps", lg_steps, "number of gamma samples");

    // basin
    auto* bas = app.add_subcommand("basin",
                                   "period-class grid over gamma x input "
                                   "amplitude");
    SharedOpts bas_o;
    double sg_min = 0.6, sg_max = 1.1, se_min = 0.3, se_max = 0.9;
    int sres = 100, sthreads = 0;
    bas_o.attach(bas, /*with_gamma=*/false);
    opt(bas, "gamma-min", sg_min, "gamma range start");
    opt(bas, "gamma-max", sg_max, "gamma range end");
    opt(bas, "ein-min", se_min, "amplitude range start");
    opt(bas, "ein-max", se_max, "amplitude range end");
    opt(bas, "res", sres, "grid resolution per axis");
    opt(bas, "threads", sthreads, "worker threads (0 = hardware)");

    // ee
    auto* ee = app.add_subcommand("ee",
                                  "extreme-event statistics of the P4 series");
    SharedOpts ee_o;
    double ee_mult = 8.0;
    int ee_bins = 200;
    std::string ee_events_out, ee_hist_out;
    ee_o.spec.n_keep = 1000000;  // rare events need long records
    ee_o.attach(ee);
    opt(ee, "multiplier", ee_mult, "threshold = mean + multiplier*std");
    opt(ee, "bins", ee_bins, "histogram bin count");
    opt(ee, "events-out", ee_events_out,
        "event index CSV (default: <out>.events.csv)");
    opt(ee, "hist-out", ee_hist_out, "probability histogram CSV (optional)");

    // crisis
    auto* cri = app.add_subcommand("crisis",
                                   "attractor-merging diagnostics on Im(E4)");
    SharedOpts cri_o;
    int cri_switch_min = 10;
    std::string cri_dump_out;
    cri_o.attach(cri);
    opt(cri, "switch-min", cri_switch_min,
        "sign switches required for a merged attractor");
    opt(cri, "dump-out", cri_dump_out, "state-plane scatter CSV (optional)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eig->parsed()) return run_eigsweep(eg_min, eg_max, eg_steps, eig_out);
        if (orb->parsed()) return run_orbit(orb_o);
        if (bif->parsed())
            return run_bifurcation(bif_o, bg_min, bg_max, bg_steps, bg_points);
        if (lle_cmd->parsed()) return run_lle(lle_o, lg_min, lg_max, lg_steps);
        if (bas->parsed())
            return run_basin(bas_o, sg_min, sg_max, se_min, se_max, sres,
                             sthreads);
        if (ee->parsed())
            return run_ee(ee_o, ee_mult, ee_bins, ee_events_out, ee_hist_out);
        if (cri->parsed()) return run_crisis(cri_o, cri_switch_min, cri_dump_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}
