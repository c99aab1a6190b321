// Experiment harness for the lackadaisical-walk library: evolves instances
// to CSV, dumps closed-form predictions and eigen systems as JSON, checks
// predictions against simulation, and regenerates the bundled figure data.
//
// Exit codes: 0 success, 1 comparison tolerance failure, 2 bad flags or
// config, 3 state size over the memory cap.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lackwalk/analytics.hpp"
#include "lackwalk/ctqw.hpp"
#include "lackwalk/errors.hpp"
#include "lackwalk/fullspace.hpp"
#include "lackwalk/instance.hpp"
#include "lackwalk/subspace.hpp"

using json = nlohmann::json;
using namespace lackwalk;

namespace {

struct Flags {
    int n = 0;
    int loops = 0;
    int marked = 1;
    std::string coin = "flip";
    std::string walk = "discrete";
    std::string engine = "subspace";
    int steps = 0;        // 0: ceil(4 * predicted runtime)
    double tmax = 0.0;    // 0: 2 * predicted runtime
    int samples = 1000;
    std::string gamma = "critical";
    std::string out;
};

CoinKind parse_coin(const std::string& s) {
    if (s == "flip")
        return CoinKind::Flip;
    if (s == "skw")
        return CoinKind::Skw;
    throw DomainError("unknown coin '" + s + "' (expected flip or skw)");
}

double parse_gamma(const std::string& s, int n) {
    if (s == "critical")
        return critical_gamma(n);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception&) {
        throw DomainError("gamma must be a number or 'critical'");
    }
    if (used != s.size() || value <= 0.0)
        throw DomainError("gamma must be a positive number or 'critical'");
    return value;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_text(const std::string& out, const std::string& body) {
    if (out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw DomainError("cannot open output file " + out);
    f << body;
}

std::string discrete_csv(const EvolutionTrace& trace) {
    std::ostringstream os;
    os << "step,success_probability\n";
    for (const auto& s : trace.samples)
        os << s.step << ',' << fmt(s.success_probability) << '\n';
    return os.str();
}

std::string continuous_csv(const CtqwTrace& trace) {
    std::ostringstream os;
    os << "time,success_probability\n";
    for (const auto& s : trace.samples)
        os << fmt(s.time) << ',' << fmt(s.success_probability) << '\n';
    return os.str();
}

std::vector<double> time_grid(double tmax, int samples) {
    if (tmax <= 0.0 || samples < 1)
        throw DomainError("tmax must be > 0 and samples >= 1");
    std::vector<double> t(samples + 1);
    for (int i = 0; i <= samples; ++i)
        t[i] = tmax * i / samples;
    return t;
}

WalkKind walk_kind(const std::string& walk, const std::string& engine) {
    const bool full = engine == "full";
    if (!full && engine != "subspace")
        throw DomainError("unknown engine '" + engine + "'");
    if (walk == "discrete")
        return full ? WalkKind::DiscreteFull : WalkKind::DiscreteSubspace;
    if (walk == "ctqw")
        return full ? WalkKind::ContinuousFull : WalkKind::ContinuousSubspace;
    throw DomainError("unknown walk '" + walk + "'");
}

int default_steps(const SearchInstance& inst) {
    return std::max(1, int(std::ceil(4.0 * predict(inst).runtime)));
}

int cmd_evolve(const Flags& f) {
    const SearchInstance inst =
        validate({f.n, f.loops, f.marked, parse_coin(f.coin)});
    const WalkKind kind = walk_kind(f.walk, f.engine);
    if (!is_continuous(kind)) {
        const int steps = f.steps > 0 ? f.steps : default_steps(inst);
        const EvolutionTrace trace = kind == WalkKind::DiscreteFull
                                         ? full_evolve(inst, steps)
                                         : evolve(inst, steps);
        write_text(f.out, discrete_csv(trace));
        return 0;
    }
    const double gamma = parse_gamma(f.gamma, inst.n);
    const double tmax =
        f.tmax > 0.0
            ? f.tmax
            : 2.0 * predict(inst, WalkKind::ContinuousSubspace, gamma).runtime;
    const auto times = time_grid(tmax, f.samples);
    const CtqwTrace trace =
        kind == WalkKind::ContinuousFull
            ? ctqw_full_evolve(inst, gamma, times)
            : ctqw_evolve(build_hamiltonian(inst, gamma), times);
    write_text(f.out, continuous_csv(trace));
    return 0;
}

json instance_json(const SearchInstance& inst) {
    return {{"n", inst.n},
            {"loops", inst.loops},
            {"marked", inst.marked},
            {"coin", to_string(inst.coin)}};
}

json prediction_json(const Prediction& pred) {
    return {{"runtime", pred.runtime},
            {"peak_probability", pred.peak_probability},
            {"phase_gap", pred.phase_gap},
            {"regime",
             {{"branch", to_string(pred.regime.branch)},
              {"speedup", to_string(pred.regime.speedup)},
              {"c", pred.regime.c}}},
            {"initial_loop_probability", pred.initial_loop_probability}};
}

int cmd_predict(const Flags& f) {
    const SearchInstance inst =
        validate({f.n, f.loops, f.marked, parse_coin(f.coin)});
    const WalkKind kind = walk_kind(f.walk, f.engine);
    const double gamma =
        is_continuous(kind) ? parse_gamma(f.gamma, inst.n) : 0.0;
    const Prediction pred = predict(inst, kind, gamma);

    json body = prediction_json(pred);
    body["instance"] = instance_json(inst);
    body["walk"] = f.walk;
    if (!is_continuous(kind)) {
        const AngleSet a = angles(inst);
        json ja{{"cos_theta", a.cos_theta}, {"sin_theta", a.sin_theta}};
        if (a.cos_phi) {
            ja["cos_phi"] = *a.cos_phi;
            ja["sin_phi"] = *a.sin_phi;
            ja["cos_alpha"] = *a.cos_alpha;
            ja["sin_alpha"] = *a.sin_alpha;
        }
        body["angles"] = ja;
    } else {
        body["gamma"] = gamma;
    }
    write_text(f.out, body.dump(2) + "\n");
    return 0;
}

int cmd_eigen(const Flags& f) {
    const SearchInstance inst =
        validate({f.n, f.loops, f.marked, parse_coin(f.coin)});
    const EigenSystem sys = eigen_system(inst);
    json pairs = json::array();
    for (const auto& p : sys.pairs) {
        json vec = json::array();
        for (int i = 0; i < p.vector.size(); ++i)
            vec.push_back({{"re", p.vector(i).real()}, {"im", p.vector(i).imag()}});
        pairs.push_back({{"value", {{"re", p.value.real()}, {"im", p.value.imag()}}},
                         {"vector", vec}});
    }
    json body{{"instance", instance_json(inst)},
              {"basis", subspace_basis(inst).labels},
              {"pairs", pairs}};
    write_text(f.out, body.dump(2) + "\n");
    return 0;
}

// One comparison: exact prediction vs a simulated trace over twice the
// predicted runtime (so only the first peak is in the window).
json compare_one(const json& entry, double runtime_tol, double peak_tol,
                 bool& pass) {
    const SearchInstance inst = validate({entry.at("n").get<int>(),
                                          entry.value("loops", 0),
                                          entry.value("marked", 1),
                                          parse_coin(entry.value("coin", "flip"))});
    const std::string walk = entry.value("walk", "discrete");
    runtime_tol = entry.value("runtime_tolerance", runtime_tol);
    peak_tol = entry.value("peak_tolerance", peak_tol);

    double sim_runtime = 0.0, sim_peak = 0.0;
    Prediction pred;
    if (walk == "ctqw") {
        const double gamma = parse_gamma(entry.value("gamma", "critical"), inst.n);
        pred = predict(inst, WalkKind::ContinuousSubspace, gamma);
        const auto trace = ctqw_evolve(build_hamiltonian(inst, gamma),
                                       time_grid(2.0 * pred.runtime, 4000));
        sim_runtime = trace.peak_time;
        sim_peak = trace.peak_probability;
    } else if (walk == "discrete") {
        pred = predict(inst);
        const auto trace =
            evolve(inst, std::max(1, int(std::ceil(2.0 * pred.runtime))));
        sim_runtime = trace.peak_step;
        sim_peak = trace.peak_probability;
    } else {
        throw DomainError("unknown walk '" + walk + "' in config");
    }

    const double dev_runtime = std::abs(pred.runtime - sim_runtime);
    const double dev_peak = std::abs(pred.peak_probability - sim_peak);
    pass = dev_runtime <= runtime_tol && dev_peak <= peak_tol;
    return {{"instance", instance_json(inst)},
            {"walk", walk},
            {"predicted",
             {{"runtime", pred.runtime}, {"peak_probability", pred.peak_probability}}},
            {"simulated",
             {{"runtime", sim_runtime}, {"peak_probability", sim_peak}}},
            {"deviation", {{"runtime", dev_runtime}, {"peak", dev_peak}}},
            {"tolerance", {{"runtime", runtime_tol}, {"peak", peak_tol}}},
            {"pass", pass}};
}

int cmd_compare(const std::string& config_path, const std::string& out) {
    std::ifstream f(config_path);
    if (!f)
        throw DomainError("cannot read config file " + config_path);
    json config;
    try {
        config = json::parse(f);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("config parse error: ") + e.what());
    }
    if (!config.contains("instances") || !config["instances"].is_array() ||
        config["instances"].empty())
        throw DomainError("config requires a nonempty 'instances' array");

    const json tol = config.value("tolerances", json::object());
    const double runtime_tol = tol.value("runtime", 1.0);
    const double peak_tol = tol.value("peak", 0.025);

    json results = json::array();
    bool all_pass = true;
    for (const auto& entry : config["instances"]) {
        bool pass = false;
        results.push_back(compare_one(entry, runtime_tol, peak_tol, pass));
        all_pass = all_pass && pass;
    }
    json report{{"all_pass", all_pass}, {"results", results}};
    write_text(out, report.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

void write_figure_csv(const std::string& dir, const std::string& name,
                      const std::string& body) {
    const std::string path = dir.empty() ? name : dir + "/" + name;
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw DomainError("cannot open output file " + path);
    f << body;
}

// Figure data sets: success-probability traces for the parameter choices
// shown in the bundled README. fig7 additionally emits an l = 2N curve;
// its step-15 midpoint matches a caption that disagrees with the l = 32
// parameters printed next to it (see README).
int cmd_figure(const std::string& name, const std::string& dir) {
    auto discrete = [&](const std::string& file, const SearchInstance& inst,
                        int steps) {
        write_figure_csv(dir, file, discrete_csv(evolve(inst, steps)));
    };
    if (name == "fig2") {
        discrete("fig2_n1024_l0.csv", {1024, 0, 1, CoinKind::Flip}, 80);
        discrete("fig2_n2048_l0.csv", {2048, 0, 1, CoinKind::Flip}, 110);
    } else if (name == "fig3") {
        for (int n : {1024, 2048}) {
            const double tmax = 2.0 * 3.14159265358979323846 * std::sqrt(double(n));
            const auto trace = ctqw_evolve(
                build_hamiltonian({n, 0, 1, CoinKind::Flip}, critical_gamma(n)),
                time_grid(tmax, 1000));
            write_figure_csv(dir, "fig3_n" + std::to_string(n) + ".csv",
                             continuous_csv(trace));
        }
    } else if (name == "fig4") {
        for (int l : {1, 2, 3})
            discrete("fig4_n1024_l" + std::to_string(l) + ".csv",
                     {1024, l, 1, CoinKind::Flip}, 110);
        discrete("fig4_n2048_l2.csv", {2048, 2, 1, CoinKind::Flip}, 130);
    } else if (name == "fig5") {
        for (int l : {0, 32, 2048, 32768})
            discrete("fig5_n1024_l" + std::to_string(l) + ".csv",
                     {1024, l, 1, CoinKind::Skw}, 450);
    } else if (name == "fig6") {
        for (int l : {1, 32})
            discrete("fig6_n1024_k16_l" + std::to_string(l) + ".csv",
                     {1024, l, 16, CoinKind::Flip}, 40);
    } else if (name == "fig7") {
        for (int l : {1, 32, 2048})
            discrete("fig7_n1024_k16_l" + std::to_string(l) + ".csv",
                     {1024, l, 16, CoinKind::Skw}, 60);
    } else {
        throw DomainError("unknown figure '" + name + "' (expected fig2..fig7)");
    }
    return 0;
}

void add_instance_flags(CLI::App* cmd, Flags& f, bool need_n = true) {
    auto* n = cmd->add_option("--n", f.n, "number of vertices");
    if (need_n)
        n->required();
    cmd->add_option("--loops", f.loops, "self-loops per vertex");
    cmd->add_option("--marked", f.marked, "marked vertex count");
    cmd->add_option("--coin", f.coin, "marked coin: flip or skw");
    cmd->add_option("--out", f.out, "output file (default stdout)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lackadaisical quantum walk search toolkit"};
    app.require_subcommand(1);
    Flags f;

    auto* ev = app.add_subcommand("evolve", "simulate and emit a CSV trace");
    add_instance_flags(ev, f);
    ev->add_option("--walk", f.walk, "discrete or ctqw");
    ev->add_option("--engine", f.engine, "subspace or full");
    ev->add_option("--steps", f.steps, "discrete horizon (default 4x predicted)");
    ev->add_option("--tmax", f.tmax, "continuous horizon (default 2x predicted)");
    ev->add_option("--samples", f.samples, "continuous sample count");
    ev->add_option("--gamma", f.gamma, "jump rate, number or 'critical'");

    auto* pr = app.add_subcommand("predict", "closed-form prediction as JSON");
    add_instance_flags(pr, f);
    pr->add_option("--walk", f.walk, "discrete or ctqw");
    pr->add_option("--gamma", f.gamma, "jump rate, number or 'critical'");

    auto* eg = app.add_subcommand("eigen", "reduced-operator eigen system as JSON");
    add_instance_flags(eg, f);

    std::string config_path, out_path, figure_name, figure_dir = ".";
    auto* cp = app.add_subcommand("compare", "check predictions against simulation");
    cp->add_option("config", config_path, "JSON experiment config")->required();
    cp->add_option("--out", out_path, "report file (default stdout)");

    auto* fg = app.add_subcommand("figure", "emit CSV data for a bundled figure");
    fg->add_option("name", figure_name, "fig2 .. fig7")->required();
    fg->add_option("--out", figure_dir, "output directory (default .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (ev->parsed())
            return cmd_evolve(f);
        if (pr->parsed())
            return cmd_predict(f);
        if (eg->parsed())
            return cmd_eigen(f);
        if (cp->parsed())
            return cmd_compare(config_path, out_path);
        return cmd_figure(figure_name, figure_dir);
    } catch (const CapacityExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
