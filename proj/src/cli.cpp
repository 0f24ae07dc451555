#include "qinterp/cli.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qinterp/analysis.hpp"
#include "qinterp/encode.hpp"
#include "qinterp/errors.hpp"
#include "qinterp/imaging.hpp"
#include "qinterp/interpolate.hpp"

namespace qinterp::cli {

namespace {

using nlohmann::json;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ArgumentError("cannot write " + path);
    f << text;
    if (!f) throw ArgumentError("write failed for " + path);
}

Path path_of(const RunConfig& cfg) { return cfg.fast ? Path::Fast : Path::Gates; }

Method method_of(const std::string& name) {
    if (name == "qft") return Method::QFT;
    if (name == "qct") return Method::QCT;
    if (name == "sqct") return Method::SQCT;
    throw ArgumentError("unknown method '" + name + "' (expected qft, qct, sqct or bicubic)");
}

MetricConfig metric_of(const RunConfig& cfg) {
    MetricConfig mc;
    if (cfg.window == "global") mc.window = MetricConfig::Window::Global;
    else if (cfg.window != "uniform") throw ArgumentError("window must be 'uniform' or 'global'");
    return mc;
}

void check_common(const RunConfig& cfg) {
    if (cfg.m < 0) throw ArgumentError("--m must be non-negative");
    if (cfg.s < 1) throw ArgumentError("--s must be at least 1");
    if (!(cfg.budget_gib > 0)) throw ArgumentError("--budget-gib must be positive");
}

json report_json(const TransformReport& r) {
    return {{"gate_count", r.gate_count()}, {"depth", r.depth}, {"ancilla_residual", r.ancilla_residual}};
}

Statevector interpolate_1d(Statevector st, Method method, const RunConfig& cfg, TransformReport& report) {
    TransformResult r = [&] {
        switch (method) {
            case Method::QFT: return qft_interpolate(std::move(st), "q", cfg.m, path_of(cfg));
            case Method::QCT: return qct_interpolate(std::move(st), "q", cfg.m, path_of(cfg));
            case Method::SQCT: return s_qct_interpolate(std::move(st), "q", std::min(cfg.s, cfg.n), cfg.m, path_of(cfg));
        }
        throw ArgumentError("unknown method");
    }();
    report = std::move(r.report);
    return std::move(r.state);
}

}  // namespace

double state_bytes(int q) { return std::ldexp(16.0, q); }

void check_budget(const RunConfig& cfg, int q) {
    const double need = state_bytes(q);
    const double cap = cfg.budget_gib * std::ldexp(1.0, 30);
    if (q > kMaxQubits || need > cap) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%d qubits need %.3g GiB of amplitudes, budget is %.3g GiB", q,
                      need / std::ldexp(1.0, 30), cfg.budget_gib);
        throw ResourceError(buf, need);
    }
}

int cmd_interp_dist(const RunConfig& cfg, std::ostream& out) {
    check_common(cfg);
    if (cfg.n < 1) throw ArgumentError("--n must be at least 1");
    const Method method = method_of(cfg.method.empty() ? "qft" : cfg.method);
    check_budget(cfg, cfg.n + cfg.m + (method == Method::QFT ? 0 : 2));

    const auto dist = gaussian_distribution(cfg.n, cfg.mean, cfg.sigma);
    TransformReport report;
    const auto result = interpolate_1d(encode_distribution(dist), method, cfg, report);
    const auto target = encode_distribution(gaussian_distribution(cfg.n + cfg.m, cfg.mean, cfg.sigma));
    const auto bounds = verify_bounds(target, cfg.n);

    const std::size_t fine = result.size();
    const std::size_t stride = std::size_t{1} << cfg.m;
    const double rescale = static_cast<double>(stride);
    std::ostringstream csv;
    csv << "index,x,p_original,p_interpolated\n";
    for (std::size_t j = 0; j < fine; ++j) {
        csv << j << ',' << num(static_cast<double>(j) / static_cast<double>(fine)) << ',';
        if (j % stride == 0) csv << num(dist.values[j / stride]);
        csv << ',' << num(std::norm(result[j]) * rescale) << '\n';
    }
    if (!cfg.out.empty()) write_text(cfg.out, csv.str());

    const double td = trace_distance(target, result);
    json j = {
        {"command", "interp-dist"},
        {"method", cfg.method.empty() ? "qft" : cfg.method},
        {"n", cfg.n},
        {"m", cfg.m},
        {"mean", cfg.mean},
        {"sigma", cfg.sigma},
        {"rows_original", dist.values.size()},
        {"rows_interpolated", fine},
        {"circuit", report_json(report)},
        {"trace_distance_to_target", td},
        {"within_trace_bound", td <= bounds.bound_eq3 + 1e-12},
        {"distance_report", to_json(bounds)},
    };
    out << j.dump(2) << '\n';
    return kOk;
}

int cmd_interp_image(const RunConfig& cfg, std::ostream& out) {
    check_common(cfg);
    if (cfg.input.empty()) throw ArgumentError("--input is required");
    const auto img = load_image(cfg.input);
    const std::string method = cfg.method.empty() ? "qct" : cfg.method;
    const int factor = 1 << cfg.m;

    json j = {{"command", "interp-image"},
              {"method", method},
              {"m", cfg.m},
              {"input", {{"width", img.width}, {"height", img.height}, {"channels", img.channels}}}};
    ImageBuffer result;
    if (method == "bicubic") {
        result = bicubic_upscale(img, factor);
    } else {
        InterpSpec spec;
        spec.method = method_of(method);
        spec.m = cfg.m;
        spec.s = cfg.s;
        spec.path = path_of(cfg);
        // Axes are simulated one after the other; the second one is the widest.
        const int label = img.channels == 3 ? 2 : 0;
        const int extra = spec.method == Method::QFT ? 0 : 2;
        const int base = static_cast<int>(std::bit_width(static_cast<unsigned>(img.width)) - 1) +
                         static_cast<int>(std::bit_width(static_cast<unsigned>(img.height)) - 1);
        const int simulated = base + 2 * cfg.m + extra + label;
        check_budget(cfg, simulated);
        auto q = quantum_upscale(img, spec);
        result = std::move(q.image);
        j["s"] = cfg.s;
        j["path"] = cfg.fast ? "fast" : "gates";
        j["circuit_qubits"] = q.circuit_qubits;
        j["simulated_qubits"] = simulated;
        j["circuit"] = report_json(q.report);
    }
    j["output"] = {{"width", result.width}, {"height", result.height}, {"channels", result.channels}};
    if (!cfg.reference.empty()) {
        const auto ref = load_image(cfg.reference);
        MetricConfig global;
        global.window = MetricConfig::Window::Global;
        j["metrics"] = {{"psnr", psnr(ref, result)}, {"ssim", ssim(ref, result)}, {"ssim_global", ssim(ref, result, global)}};
    }
    if (!cfg.out.empty()) save_image(result, cfg.out);
    out << j.dump(2) << '\n';
    return kOk;
}

int cmd_table1(const RunConfig& cfg, std::ostream& out) {
    check_common(cfg);
    const auto base = load_image(cfg.input.empty() ? "data/camera.pgm" : cfg.input);
    const auto small = downscale_area(base, 2);
    const auto mc = metric_of(cfg);
    MetricConfig global;
    global.window = MetricConfig::Window::Global;

    struct Row {
        std::string name;
        ImageBuffer image;
        std::size_t gates = 0;
    };
    std::vector<Row> rows;
    rows.push_back({"bicubic", bicubic_upscale(small, 2), 0});
    for (auto [name, method] : {std::pair{"qft", Method::QFT}, {"qct", Method::QCT}, {"sqct3", Method::SQCT}}) {
        InterpSpec spec;
        spec.method = method;
        spec.m = 1;
        spec.s = 3;
        spec.path = path_of(cfg);
        auto r = quantum_upscale(small, spec);
        rows.push_back({name, std::move(r.image), r.report.gate_count()});
    }

    std::ostringstream csv;
    csv << "metric";
    for (const auto& r : rows) csv << ',' << r.name;
    csv << "\npsnr";
    json j = {{"command", "table1"}, {"window", cfg.window}, {"methods", json::object()}};
    for (const auto& r : rows) {
        const double p = psnr(base, r.image), s = ssim(base, r.image, mc), sg = ssim(base, r.image, global);
        csv << ',' << num(p);
        j["methods"][r.name] = {{"psnr", p}, {"ssim", s}, {"ssim_global", sg}, {"gate_count", r.gates}};
    }
    csv << "\nssim";
    for (const auto& r : rows) csv << ',' << num(j["methods"][r.name]["ssim"].get<double>());
    csv << "\nssim_global";
    for (const auto& r : rows) csv << ',' << num(j["methods"][r.name]["ssim_global"].get<double>());
    csv << '\n';
    if (!cfg.out.empty()) write_text(cfg.out, csv.str());
    else out << csv.str();
    if (!cfg.out.empty()) out << j.dump(2) << '\n';
    return kOk;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
    check_common(cfg);
    if (cfg.cases < 1) throw ArgumentError("--cases must be positive");
    if (cfg.max_qubits < 2) throw ArgumentError("--max-qubits must be at least 2");
    check_budget(cfg, cfg.max_qubits);

    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> normal;
    json cases = json::array();
    int filtered_violations = 0, aliased_violations = 0, aliased_exceed = 0, n_below_one = 0, premise_failures = 0;
    int exceed_n_at_least_one = 0;
    double band_limited_max = 0.0;
    for (int i = 0; i < cfg.cases; ++i) {
        const int q = 2 + i % (cfg.max_qubits - 1);
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(q - 1));
        std::vector<Amplitude> v(std::size_t{1} << q);
        for (auto& x : v) x = normal(rng);
        Statevector target = state_from_amplitudes("q", v);
        const bool band_limited = i % 4 == 3;
        if (band_limited) target = band_limit_project(target, n);

        const auto r = verify_bounds(target, n);
        filtered_violations += !r.eq3_filtered_ok;
        aliased_violations += r.eq4_premises && !r.eq3_aliased_ok;
        aliased_exceed += !r.eq3_aliased_ok;
        exceed_n_at_least_one += !r.eq3_aliased_ok && r.alias_norm_N >= 1.0;
        n_below_one += r.alias_norm_N < 1.0;
        premise_failures += !r.eq4_premises;
        if (band_limited)
            band_limited_max = std::max({band_limited_max, r.l2_distance, r.aliased_l2_distance});
        auto c = to_json(r);
        c["case"] = i;
        c["band_limited"] = band_limited;
        cases.push_back(std::move(c));
    }
    const int violations = filtered_violations + aliased_violations;
    json j = {
        {"command", "bounds"},
        {"seed", cfg.seed},
        {"cases", cases},
        {"aggregate",
         {{"count", cfg.cases},
          {"violations", violations},
          {"filtered_route_violations", filtered_violations},
          {"aliased_route_violations", aliased_violations},
          {"aliased_exceedances_premises_failed", aliased_exceed - aliased_violations},
          {"aliased_exceedances_N_at_least_one", exceed_n_at_least_one},
          {"alias_N_below_one", n_below_one},
          {"premise_failures", premise_failures},
          {"band_limited_max_distance", band_limited_max}}},
    };
    out << j.dump(2) << '\n';
    return violations == 0 ? kOk : kNumerical;
}

int cmd_unary(const RunConfig& cfg, std::ostream& out) {
    check_common(cfg);
    if (cfg.n < 1) throw ArgumentError("--n must be at least 1");
    if (cfg.n > 5) throw ResourceError("unary register of 2^" + std::to_string(cfg.n) + " qubits", std::ldexp(16.0, 40));
    const int qubits = 1 << cfg.n;
    check_budget(cfg, qubits);

    const auto dist = gaussian_distribution(cfg.n, cfg.mean, cfg.sigma);
    const auto raw = unary_uploading_pipeline(dist, path_of(cfg));
    const auto target = encode_distribution(gaussian_distribution(qubits, cfg.mean, cfg.sigma));
    const auto filtered_upload = subsample_alias(band_limit_project(target, cfg.n), cfg.n);
    const auto filtered = unary_uploading_pipeline(filtered_upload.state.amplitudes(), path_of(cfg));
    const auto split = spectral_split(target, cfg.n);

    const std::size_t points = raw.state.size();
    std::ostringstream csv;
    csv << "index,x,probability\n";
    for (std::size_t i = 0; i < points; ++i)
        csv << i << ',' << num(static_cast<double>(i) / static_cast<double>(points)) << ',' << num(std::norm(raw.state[i]))
            << '\n';
    if (!cfg.out.empty()) write_text(cfg.out, csv.str());

    const double bound = trace_bound(split.out_norm);
    const double td_raw = trace_distance(target, raw.state);
    const double td_filtered = trace_distance(target, filtered.state);
    json j = {
        {"command", "unary"},
        {"n", cfg.n},
        {"register_qubits", qubits},
        {"points", points},
        {"conversion_gate_count", unary_to_binary_gates(cfg.n).size()},
        {"reflection_gate_count", cfg.n},
        {"interpolation", report_json(raw.interpolation)},
        {"trace_bound", bound},
        {"trace_distance_filtered", td_filtered},
        {"trace_distance_raw", td_raw},
        {"within_bound_filtered", td_filtered <= bound + 1e-12},
        {"within_bound_raw", td_raw <= bound + 1e-12},
    };
    out << j.dump(2) << '\n';
    return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    bool gates = false, fast = false;
    CLI::App app{"Quantum interpolation engine"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--m", cfg.m, "Ancilla qubits per axis");
        sub->add_option("--s", cfg.s, "s-QCT block size in qubits");
        sub->add_option("--n", cfg.n, "Qubits of the coarse grid");
        sub->add_option("--method", cfg.method, "qft | qct | sqct | bicubic");
        sub->add_option("--sigma", cfg.sigma, "Gaussian width (domain is [0, 1))");
        sub->add_option("--mean", cfg.mean, "Gaussian mean");
        sub->add_option("--window", cfg.window, "SSIM window: uniform | global");
        sub->add_flag("--fast", fast, "Radix-2 fast path (default)");
        sub->add_flag("--gates", gates, "Apply circuits gate by gate");
        sub->add_option("--seed", cfg.seed, "Random seed");
        sub->add_option("--out", cfg.out, "Output file (CSV or image)");
        sub->add_option("--input", cfg.input, "Input NetPBM image");
        sub->add_option("--budget-gib", cfg.budget_gib, "Statevector memory cap in GiB");
        sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
    };
    auto* dist = app.add_subcommand("interp-dist", "Interpolate a Gaussian distribution");
    auto* image = app.add_subcommand("interp-image", "Upscale a NetPBM image");
    auto* table = app.add_subcommand("table1", "PSNR/SSIM table for the four methods");
    auto* bounds = app.add_subcommand("bounds", "Randomized sweep of the distance bounds");
    auto* unary = app.add_subcommand("unary", "Unary upload followed by interpolation");
    for (auto* sub : {dist, image, table, bounds, unary}) common(sub);
    image->add_option("--reference", cfg.reference, "Image to compare against");
    bounds->add_option("--cases", cfg.cases, "Number of random targets");
    bounds->add_option("--max-qubits", cfg.max_qubits, "Largest target size");

    std::vector<std::string> argv_store{"qinterp"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kArgument;
    }
    if (fast && gates) {
        err << "error: --fast and --gates are exclusive\n";
        return kArgument;
    }
    cfg.fast = !gates;

    try {
        if (cfg.command == "interp-dist") return cmd_interp_dist(cfg, out);
        if (cfg.command == "interp-image") return cmd_interp_image(cfg, out);
        if (cfg.command == "table1") return cmd_table1(cfg, out);
        if (cfg.command == "bounds") return cmd_bounds(cfg, out);
        if (cfg.command == "unary") return cmd_unary(cfg, out);
        err << "error: no command\n";
        return kArgument;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kArgument;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return kNumerical;
    }
}

}  // namespace qinterp::cli
