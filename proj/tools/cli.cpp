#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace hyperpi::cli {
namespace {

using catalog::Flag;
using catalog::Params;
using catalog::VerificationRecord;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ParamSpec parse_param_spec(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw UsageError("--param expects name=value or name=start:stop:count, got '" +
                         text + "'");
    }
    ParamSpec spec;
    spec.name = text.substr(0, eq);
    if (spec.name != "a" && spec.name != "b") {
        throw UsageError("unknown parameter name '" + spec.name +
                         "' (expected a or b)");
    }
    const std::string body = text.substr(eq + 1);
    std::vector<std::string> pieces;
    std::stringstream ss(body);
    std::string piece;
    while (std::getline(ss, piece, ':')) pieces.push_back(piece);
    auto to_double = [&](const std::string& s) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw UsageError("malformed number '" + s + "' in --param " + text);
        }
        if (pos != s.size()) {
            throw UsageError("malformed number '" + s + "' in --param " + text);
        }
        return v;
    };
    if (pieces.size() == 1) {
        spec.start = spec.stop = to_double(pieces[0]);
        spec.count = 1;
    } else if (pieces.size() == 3) {
        spec.start = to_double(pieces[0]);
        spec.stop = to_double(pieces[1]);
        try {
            spec.count = std::stoi(pieces[2]);
        } catch (const std::exception&) {
            throw UsageError("malformed count in --param " + text);
        }
        if (spec.count < 1) throw UsageError("range count must be >= 1");
        if (!(spec.start <= spec.stop)) {
            throw UsageError("range start must be <= stop in --param " + text);
        }
    } else {
        throw UsageError("--param expects name=value or name=start:stop:count");
    }
    return spec;
}

std::vector<double> expand(const ParamSpec& spec) {
    std::vector<double> vals;
    if (spec.count == 1) {
        vals.push_back(spec.start);
    } else {
        for (int i = 0; i < spec.count; ++i) {
            vals.push_back(spec.start +
                           (spec.stop - spec.start) * i / (spec.count - 1));
        }
    }
    return vals;
}

std::vector<Params> build_grid(const RunConfig& config,
                               const std::string& identity) {
    if (config.params.empty() || config.default_grid) {
        return catalog::default_grid(identity);
    }
    std::vector<double> as, bs;
    for (const auto& spec : config.params) {
        auto vals = expand(spec);
        if (spec.name == "a") {
            as = std::move(vals);
        } else {
            bs = std::move(vals);
        }
    }
    if (bs.empty()) throw UsageError("parameter b is required");
    std::vector<Params> grid;
    if (as.empty()) {
        for (double b : bs) grid.push_back(Params::one(b));
    } else {
        for (double a : as)
            for (double b : bs) grid.push_back(Params::two(a, b));
    }
    return grid;
}

struct Emitted {
    std::vector<VerificationRecord> records;
    std::size_t n_ok = 0, n_reduced = 0, n_out = 0;
    double max_residual = 0.0;  // over in-domain records
};

void tally(Emitted& out) {
    for (const auto& r : out.records) {
        switch (r.flag) {
            case Flag::ok: ++out.n_ok; break;
            case Flag::reduced_accuracy: ++out.n_reduced; break;
            case Flag::out_of_domain: ++out.n_out; break;
        }
        if (r.flag != Flag::out_of_domain && std::isfinite(r.residual)) {
            out.max_residual = std::max(out.max_residual, r.residual);
        }
    }
}

double route_value(const VerificationRecord& r, const char* key) {
    for (const auto& [k, v] : r.route_values) {
        if (k == key) return v;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

constexpr const char* kDiagnostics[] = {"numerator", "den_const", "den_coeff",
                                        "fd_re", "fd_im"};

void emit_csv(const Emitted& e, std::ostream& os) {
    os << "identity,a,b,pi_computed,residual,flag,numerator,den_const,"
          "den_coeff,fd_re,fd_im,note\n";
    for (const auto& r : e.records) {
        os << r.id << ',';
        os << (std::isfinite(r.params.a) ? fmt17(r.params.a) : "") << ',';
        os << (std::isfinite(r.params.b) ? fmt17(r.params.b) : "") << ',';
        os << fmt17(r.pi_computed) << ',' << fmt17(r.residual) << ','
           << catalog::to_string(r.flag);
        for (const char* key : kDiagnostics) {
            const double v = route_value(r, key);
            os << ',' << (std::isnan(v) ? std::string() : fmt17(v));
        }
        os << ',' << r.note << '\n';
    }
}

void emit_json(const Emitted& e, int exit_code, std::ostream& os) {
    nlohmann::ordered_json root;
    root["records"] = nlohmann::ordered_json::array();
    for (const auto& r : e.records) {
        nlohmann::ordered_json rec;
        rec["identity"] = r.id;
        if (std::isfinite(r.params.a)) rec["a"] = r.params.a;
        rec["b"] = r.params.b;
        if (std::isfinite(r.pi_computed)) {
            rec["pi_computed"] = r.pi_computed;
            rec["residual"] = r.residual;
        } else {
            rec["pi_computed"] = nullptr;
            rec["residual"] = nullptr;
        }
        rec["flag"] = catalog::to_string(r.flag);
        nlohmann::ordered_json diag;
        for (const auto& [k, v] : r.route_values) diag[k] = v;
        rec["route"] = diag;
        if (!r.note.empty()) rec["note"] = r.note;
        root["records"].push_back(std::move(rec));
    }
    root["summary"] = {{"total", e.records.size()},
                       {"ok", e.n_ok},
                       {"reduced_accuracy", e.n_reduced},
                       {"out_of_domain", e.n_out},
                       {"max_residual", e.max_residual},
                       {"exit", exit_code}};
    os << root.dump(2) << '\n';
}

void emit_pretty(const Emitted& e, std::ostream& os) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-15s %-10s %-10s %-22s %-10s %s\n",
                  "identity", "a", "b", "pi_computed", "residual", "flag");
    os << line;
    for (const auto& r : e.records) {
        char a_buf[24] = "-", b_buf[24] = "-";
        if (std::isfinite(r.params.a)) {
            std::snprintf(a_buf, sizeof(a_buf), "%.6g", r.params.a);
        }
        if (std::isfinite(r.params.b)) {
            std::snprintf(b_buf, sizeof(b_buf), "%.6g", r.params.b);
        }
        std::snprintf(line, sizeof(line),
                      "%-15s %-10s %-10s %-22.17g %-10.3g %s%s%s\n",
                      r.id.c_str(), a_buf, b_buf, r.pi_computed, r.residual,
                      catalog::to_string(r.flag).c_str(),
                      r.note.empty() ? "" : "  ", r.note.c_str());
        os << line;
    }
    char summary[160];
    std::snprintf(summary, sizeof(summary),
                  "summary: %zu records, %zu ok, %zu reduced_accuracy, %zu "
                  "out_of_domain, max residual %.3g\n",
                  e.records.size(), e.n_ok, e.n_reduced, e.n_out,
                  e.max_residual);
    os << summary;
}

void emit_list(RunConfig::Format format, std::ostream& os) {
    const auto infos = catalog::list_identities();
    if (format == RunConfig::Format::json) {
        nlohmann::ordered_json root = nlohmann::ordered_json::array();
        for (const auto& info : infos) {
            root.push_back({{"identity", info.id},
                            {"description", info.description},
                            {"arity", info.param_arity},
                            {"domain", info.domain}});
        }
        os << root.dump(2) << '\n';
        return;
    }
    if (format == RunConfig::Format::csv) {
        os << "identity,arity,domain,description\n";
        for (const auto& info : infos) {
            os << info.id << ',' << info.param_arity << ',' << info.domain
               << ",\"" << info.description << "\"\n";
        }
        return;
    }
    for (const auto& info : infos) {
        char line[256];
        std::snprintf(line, sizeof(line), "%-15s arity=%d  %-18s %s\n",
                      info.id.c_str(), info.param_arity, info.domain.c_str(),
                      info.description.c_str());
        os << line;
    }
}

} // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"verification front-end for the pi-identity catalog"};
    app.require_subcommand(1);

    RunConfig config;
    std::vector<std::string> param_texts;
    std::string format_text = "pretty";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--identity", config.identity,
                        "identity id, or 'all' (verify only)");
        sub->add_option("--param", param_texts,
                        "name=value or name=start:stop:count");
        sub->add_option("--tol", config.tol, "evaluation sub-tolerance")
            ->check(CLI::Range(1e-12, 1e-4));
        sub->add_option("--format", format_text, "csv | json | pretty")
            ->check(CLI::IsMember({"csv", "json", "pretty"}));
        sub->add_option("--out", config.out_path, "output path");
    };

    CLI::App* list_cmd = app.add_subcommand("list", "list catalog identities");
    list_cmd->add_option("--format", format_text, "csv | json | pretty")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));
    list_cmd->add_option("--out", config.out_path, "output path");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "evaluate identities and check residuals");
    add_common(verify_cmd);
    verify_cmd->add_flag("--default-grid", config.default_grid,
                         "use the identity's built-in grid");

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "evaluate one identity over a grid");
    add_common(sweep_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (list_cmd->parsed()) {
        config.mode = RunConfig::Mode::list;
    } else if (verify_cmd->parsed()) {
        config.mode = RunConfig::Mode::verify;
    } else {
        config.mode = RunConfig::Mode::sweep;
    }
    if (format_text == "csv") {
        config.format = RunConfig::Format::csv;
    } else if (format_text == "json") {
        config.format = RunConfig::Format::json;
    } else {
        config.format = RunConfig::Format::pretty;
    }

    if (config.mode != RunConfig::Mode::list) {
        if (config.identity.empty()) {
            throw UsageError("--identity is required");
        }
        if (config.identity != "all" && !catalog::has_identity(config.identity)) {
            throw UsageError("unknown identity '" + config.identity + "'");
        }
        if (config.mode == RunConfig::Mode::sweep && config.identity == "all") {
            throw UsageError("sweep takes a single identity; use verify for 'all'");
        }
        std::map<std::string, int> seen;
        for (const auto& text : param_texts) {
            ParamSpec spec = parse_param_spec(text);
            if (++seen[spec.name] > 1) {
                throw UsageError("parameter '" + spec.name + "' given twice");
            }
            config.params.push_back(std::move(spec));
        }
    }
    return config;
}

int run(const RunConfig& config, std::ostream& os) {
    if (config.mode == RunConfig::Mode::list) {
        emit_list(config.format, os);
        return 0;
    }

    Emitted emitted;
    std::vector<std::string> ids;
    if (config.identity == "all") {
        for (const auto& info : catalog::list_identities()) ids.push_back(info.id);
    } else {
        ids.push_back(config.identity);
    }
    for (const auto& id : ids) {
        const auto grid =
            config.identity == "all"
                ? catalog::default_grid(id)
                : build_grid(config, id);
        auto records = catalog::sweep(id, grid, config.tol);
        std::move(records.begin(), records.end(),
                  std::back_inserter(emitted.records));
    }
    tally(emitted);

    const int exit_code =
        emitted.n_reduced > 0 ? 1 : 0;  // domain exclusions are not failures
    switch (config.format) {
        case RunConfig::Format::csv: emit_csv(emitted, os); break;
        case RunConfig::Format::json: emit_json(emitted, exit_code, os); break;
        case RunConfig::Format::pretty: emit_pretty(emitted, os); break;
    }
    return exit_code;
}

int main_impl(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const RunConfig config = parse_args(args);
        if (!config.out_path.empty()) {
            std::ofstream out(config.out_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot open " << config.out_path << "\n";
                return 2;
            }
            return run(config, out);
        }
        return run(config, std::cout);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace hyperpi::cli
