#include "derivar/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "derivar/cache.hpp"
#include "derivar/diff_oracle.hpp"
#include "derivar/parser.hpp"
#include "derivar/presentation_io.hpp"
#include "derivar/products.hpp"
#include "derivar/hat.hpp"

namespace derivar {

namespace {

using Json = nlohmann::ordered_json;

struct GlobalOptions {
    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
    bool verbose = false;

    RenderFormat render_format() const {
        return format == "latex" ? RenderFormat::Latex : RenderFormat::Text;
    }
};

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

std::filesystem::path default_cache_dir() {
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "derivar";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "derivar";
    return std::filesystem::path(".derivar-cache");
}

Json tool_header(const std::string& command) {
    Json j;
    j["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}, {"schema", kSchemaVersion}};
    j["command"] = command;
    return j;
}

Json presentation_info(const OperadPresentation& p) {
    Json j;
    j["name"] = p.name;
    j["ops"] = p.ops;
    j["hash"] = hex64(p.content_hash());
    return j;
}

void dump_text(const Json& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out << pad << key << ":\n";
            dump_text(value, out, indent + 1);
        } else if (value.is_array()) {
            out << pad << key << ":";
            if (value.empty()) {
                out << " (none)\n";
                continue;
            }
            out << '\n';
            for (const auto& item : value) {
                if (item.is_object()) {
                    out << pad << "  -\n";
                    dump_text(item, out, indent + 2);
                } else {
                    out << pad << "  - " << (item.is_string() ? item.get<std::string>() : item.dump())
                        << '\n';
                }
            }
        } else if (value.is_string()) {
            out << pad << key << ": " << value.get<std::string>() << '\n';
        } else {
            out << pad << key << ": " << value.dump() << '\n';
        }
    }
}

void emit(const Json& doc, const GlobalOptions& opts, std::ostream& out) {
    if (opts.format == "json") {
        out << doc.dump(2) << '\n';
    } else {
        dump_text(doc, out, 0);
    }
}

std::vector<std::string> render_polys(const std::vector<Poly>& polys,
                                      const std::vector<std::string>& ops, RenderFormat fmt) {
    std::vector<std::string> out;
    out.reserve(polys.size());
    for (const Poly& p : polys) out.push_back(render(p, ops, fmt));
    return out;
}

std::vector<Poly> subspace_polys(const Subspace& s, int arity, int alphabet) {
    std::vector<Poly> out;
    out.reserve(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        out.push_back(poly_from_coords(arity, alphabet, s.basis().row(i)));
    return out;
}

std::vector<Rational> parse_lambdas(const std::vector<std::string>& raw) {
    if (raw.empty()) return {Rational(0)};
    std::vector<Rational> out;
    out.reserve(raw.size());
    for (const std::string& s : raw) out.push_back(rat_from_string(s));
    return out;
}

Json lambda_strings(const std::vector<Rational>& ls) {
    Json arr = Json::array();
    for (const Rational& l : ls) arr.push_back(rat_to_string(l));
    return arr;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                     start)
            .count();
    }
};

Json white_results(const WhiteResult& w, RenderFormat fmt, bool include_kernel_basis) {
    Json res;
    res["pairSymbols"] = w.alphabet.names();
    res["ambientDim"] = w.phi.cols();
    res["imageDim"] = w.image_dim;
    res["kernelDim"] = w.relations.dim();
    res["arity2KernelDim"] = w.arity2_kernel.dim();
    res["inducedDim"] = w.induced.dim();
    res["newDim"] = w.new_dim;
    res["arity2Relations"] = render_polys(subspace_polys(w.arity2_kernel, 2, w.alphabet.size()),
                                          w.alphabet.names(), fmt);
    res["newRelations"] = render_polys(w.new_generators, w.alphabet.names(), fmt);
    if (include_kernel_basis)
        res["kernelBasis"] = render_polys(subspace_polys(w.relations, w.arity, w.alphabet.size()),
                                          w.alphabet.names(), fmt);
    return res;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    GlobalOptions opts;
    CLI::App app{"Derived identities of differential algebras via the white product with the Novikov operad"};
    app.require_subcommand(1);
    app.fallthrough();

    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "latex", "json"}))
        ->capture_default_str();
    app.add_option("--cache-dir", opts.cache_dir, "Component cache directory");
    app.add_flag("--no-cache", opts.no_cache, "Bypass the component cache");
    app.add_flag("--verbose", opts.verbose, "Timing and cache diagnostics on stderr");

    // component <pres> -n N
    auto* cmd_component = app.add_subcommand("component", "Arity component of a variety");
    std::string comp_pres;
    int comp_n = 3;
    cmd_component->add_option("presentation", comp_pres, "Builtin name or presentation file")
        ->required();
    cmd_component->add_option("-n,--arity", comp_n, "Arity")->required();

    // white <P> <Q> -n N
    auto* cmd_white = app.add_subcommand("white", "White product relations of two varieties");
    std::string white_p, white_q;
    int white_n = 3;
    bool white_kernel_basis = false;
    cmd_white->add_option("P", white_p)->required();
    cmd_white->add_option("Q", white_q)->required();
    cmd_white->add_option("-n,--arity", white_n, "Arity")->required();
    cmd_white->add_flag("--kernel-basis", white_kernel_basis, "Include the full kernel basis");

    // derived <P> -n N
    auto* cmd_derived = app.add_subcommand("derived", "Derived identities (white product with nov)");
    std::string derived_p;
    int derived_n = 3;
    bool derived_kernel_basis = false;
    cmd_derived->add_option("P", derived_p)->required();
    cmd_derived->add_option("-n,--arity", derived_n, "Arity")->required();
    cmd_derived->add_flag("--kernel-basis", derived_kernel_basis, "Include the full kernel basis");

    // check <P> -f FILE [--lambda q]...
    auto* cmd_check = app.add_subcommand("check", "Verify identities by Leibniz expansion");
    std::string check_p, check_file;
    std::vector<std::string> check_lambdas;
    cmd_check->add_option("P", check_p)->required();
    cmd_check->add_option("-f,--file", check_file, "Identity file (one expression per line)")
        ->required();
    cmd_check->add_option("--lambda", check_lambdas, "Generalized-derivation scalar (repeatable)");

    // crosscheck <P> -n N [--lambda q]...
    auto* cmd_crosscheck =
        app.add_subcommand("crosscheck", "Oracle kernel vs white-product kernel");
    std::string cross_p;
    int cross_n = 3;
    std::vector<std::string> cross_lambdas;
    cmd_crosscheck->add_option("P", cross_p)->required();
    cmd_crosscheck->add_option("-n,--arity", cross_n, "Arity")->required();
    cmd_crosscheck->add_option("--lambda", cross_lambdas, "Generalized-derivation scalar (repeatable)");

    // hat-test
    auto* cmd_hat = app.add_subcommand("hat-test", "Divided-power algebra and psi-embedding checks");
    int hat_order = 4, hat_samples = 200;
    std::uint64_t hat_seed = 42;
    cmd_hat->add_option("--max-order", hat_order, "Truncation d^N = 0")->capture_default_str();
    cmd_hat->add_option("--samples", hat_samples, "Random sample count")->capture_default_str();
    cmd_hat->add_option("--seed", hat_seed, "Random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kToolName << ' ' << kToolVersion << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    // cache wiring: in-process memo always on, disk layer unless --no-cache
    if (opts.no_cache) {
        set_component_store(nullptr);
    } else {
        std::filesystem::path dir =
            opts.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(opts.cache_dir);
        set_component_store(std::make_shared<ComponentDiskCache>(dir, opts.verbose));
        if (opts.verbose) err << "cache: " << dir.string() << '\n';
    }

    Timer timer;
    int code = 2;
    try {
        const RenderFormat fmt = opts.render_format();
        if (*cmd_component) {
            OperadPresentation p = resolve_presentation(comp_pres);
            auto c = component(p, comp_n);
            Json doc = tool_header("component");
            doc["inputs"] = Json{{"presentation", presentation_info(p)}, {"arity", comp_n}};
            Json res;
            res["ambientDim"] = basis_size(comp_n, p.alphabet_size());
            res["relationDim"] = c->relations.dim();
            res["dim"] = c->dim;
            Json normal = Json::array();
            for (std::size_t idx : c->normal_basis)
                normal.push_back(render_monomial(monomial_at(comp_n, p.alphabet_size(), idx), p.ops, fmt));
            res["normalBasis"] = normal;
            res["relationBasis"] =
                render_polys(subspace_polys(c->relations, comp_n, p.alphabet_size()), p.ops, fmt);
            doc["results"] = res;
            emit(doc, opts, out);
            code = 0;
        } else if (*cmd_white || *cmd_derived) {
            const bool is_derived = static_cast<bool>(*cmd_derived);
            OperadPresentation p = resolve_presentation(is_derived ? derived_p : white_p);
            OperadPresentation q = is_derived ? builtin("nov") : resolve_presentation(white_q);
            int n = is_derived ? derived_n : white_n;
            WhiteResult w = white_relations(p, q, n);
            Json doc = tool_header(is_derived ? "derived" : "white");
            doc["inputs"] = Json{{"presentation", presentation_info(p)},
                                 {"partner", presentation_info(q)},
                                 {"arity", n}};
            doc["results"] =
                white_results(w, fmt, is_derived ? derived_kernel_basis : white_kernel_basis);
            emit(doc, opts, out);
            code = 0;
        } else if (*cmd_check) {
            OperadPresentation p = resolve_presentation(check_p);
            std::vector<Rational> lambdas = parse_lambdas(check_lambdas);
            std::ifstream in(check_file);
            if (!in) throw std::invalid_argument("cannot open identity file: " + check_file);
            std::vector<std::string> names = derived_symbol_names(p);
            Json doc = tool_header("check");
            doc["inputs"] = Json{{"presentation", presentation_info(p)},
                                 {"identitiesFile", check_file},
                                 {"lambdas", lambda_strings(lambdas)}};
            Json checks = Json::array();
            bool all_ok = true;
            std::string line;
            while (std::getline(in, line)) {
                std::string trimmed = line;
                auto first = trimmed.find_first_not_of(" \t\r");
                if (first == std::string::npos) continue;
                trimmed = trimmed.substr(first);
                if (trimmed.empty() || trimmed[0] == '#') continue;
                Poly f = parse_expr(trimmed, names);
                bool ok = true;
                for (const Rational& l : lambdas) ok = ok && is_derived_identity(p, f, l);
                all_ok = all_ok && ok;
                checks.push_back(Json{{"expr", render(f, names, fmt)}, {"verified", ok}});
            }
            doc["results"] = Json{{"checks", checks}, {"allVerified", all_ok}};
            emit(doc, opts, out);
            code = all_ok ? 0 : 1;
        } else if (*cmd_crosscheck) {
            OperadPresentation p = resolve_presentation(cross_p);
            std::vector<Rational> lambdas = parse_lambdas(cross_lambdas);
            WhiteResult w = derived_identities(p, cross_n);
            Json doc = tool_header("crosscheck");
            doc["inputs"] = Json{{"presentation", presentation_info(p)},
                                 {"arity", cross_n},
                                 {"lambdas", lambda_strings(lambdas)}};
            Json per = Json::array();
            bool all_eq = true;
            for (const Rational& l : lambdas) {
                Subspace oracle = derived_identity_space(p, cross_n, l);
                bool eq = oracle == w.relations;
                all_eq = all_eq && eq;
                per.push_back(Json{{"lambda", rat_to_string(l)},
                                   {"oracleKernelDim", oracle.dim()},
                                   {"equal", eq}});
            }
            doc["results"] = Json{{"whiteKernelDim", w.relations.dim()},
                                  {"imageDim", w.image_dim},
                                  {"perLambda", per},
                                  {"allEqual", all_eq}};
            emit(doc, opts, out);
            code = all_eq ? 0 : 1;
        } else if (*cmd_hat) {
            bool h_ok = check_h_novikov(8);
            bool psi_ok = check_psi_homomorphism(hat_samples, hat_order, hat_seed);
            Json doc = tool_header("hat-test");
            doc["inputs"] = Json{{"maxOrder", hat_order}, {"samples", hat_samples}, {"seed", hat_seed}};
            doc["results"] = Json{{"hNovikovBound", 8},
                                  {"hNovikovOk", h_ok},
                                  {"psiHomomorphismOk", psi_ok},
                                  {"allVerified", h_ok && psi_ok}};
            emit(doc, opts, out);
            code = (h_ok && psi_ok) ? 0 : 1;
        }
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        code = 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        code = 2;
    }
    if (opts.verbose) err << "elapsed: " << timer.ms() << " ms\n";
    return code;
}

}  // namespace derivar
