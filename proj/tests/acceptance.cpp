// Acceptance suite: runs every criterion end to end and prints one
// PASS/FAIL line each. Exit status is the number of failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "derivar/diff_oracle.hpp"
#include "derivar/parser.hpp"
#include "derivar/products.hpp"
#include "derivar/hat.hpp"

using namespace derivar;
using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    double seconds = 0;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(DERIVAR_BIN) + " " + args + " 2>/dev/null";
    auto start = std::chrono::steady_clock::now();
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    std::array<char, 65536> buf;
    std::size_t n;
    while ((n = ::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = ::pclose(pipe);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {WEXITSTATUS(status), out, secs};
}

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

const std::vector<std::string> kPair = {"prec", "succ"};
Poly D(const std::string& src) { return parse_expr(src, kPair); }

std::string secs(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << "s";
    return os.str();
}

}  // namespace

int main() {
    const std::string cache_dir =
        (fs::temp_directory_path() / ("derivar-acceptance-" + std::to_string(::getpid()))).string();
    const std::string cache = " --cache-dir " + cache_dir;

    const Poly eq5 = D("prec(succ(x1,x2),x3) - succ(x1,prec(x2,x3))");
    const Poly eq6 = D(
        "prec(prec(x1,x2),x3) - prec(x1,succ(x2,x3)) + succ(prec(x1,x2),x3) - succ(x1,succ(x2,x3))");
    const Poly eq1_prec = D(
        "prec(prec(x1,x2),x3) - prec(x1,prec(x2,x3)) - prec(prec(x2,x1),x3) + prec(x2,prec(x1,x3))");
    const Poly eq2_prec = D("prec(prec(x1,x2),x3) - prec(prec(x1,x3),x2)");

    // 1. Example 4: the single derived operation of Lie satisfies no identities
    {
        auto r = run_cli("--format json --no-cache derived lie -n 3");
        bool ok = r.code == 0 && r.seconds < 1.0;
        if (ok) {
            Json doc = Json::parse(r.out, nullptr, false);
            ok = !doc.is_discarded() && doc["results"]["newDim"] == 0 &&
                 doc["results"]["imageDim"] == 12 && doc["results"]["newRelations"].empty();
        }
        report(1, "derived lie -n 3: no new relations, imageDim 12", ok, secs(r.seconds));
    }

    // 2. Example 5: As o Nov relations are spanned by the two listed identities
    {
        auto start = std::chrono::steady_clock::now();
        WhiteResult w = derived_identities(builtin("as"), 3);
        bool ok = w.relations.contains(coords(eq5)) && w.relations.contains(coords(eq6)) &&
                  relations_match(w, {eq5, eq6}) && w.relations.dim() == 12;  // frozen brute-force value
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        auto r = run_cli("--format json --no-cache derived as -n 3");
        ok = ok && r.code == 0 && Json::parse(r.out)["results"]["kernelDim"] == 12 && dt < 1.0 &&
             r.seconds < 1.0;
        report(2, "derived as -n 3: kernel = span{eq5, eq6}, dim 12", ok,
               secs(std::max(dt, r.seconds)));
    }

    // 3. Com o Nov: arity-2 identification plus the Novikov axioms in prec
    {
        auto start = std::chrono::steady_clock::now();
        WhiteResult w = derived_identities(builtin("com"), 3);
        bool ok = w.arity2_kernel.contains(coords(D("succ(x1,x2) - prec(x2,x1)"))) &&
                  relations_match(w, {eq1_prec, eq2_prec}) && w.image_dim == 6 && w.new_dim == 6;
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ok = ok && dt < 1.0;
        report(3, "derived com: a succ b = b prec a, Novikov axioms generate, imageDim 6", ok,
               secs(dt));
    }

    // 4. Component dimensions against the committed brute-force script
    {
        bool ok = component(builtin("mag"), 3)->dim == 12 && component(builtin("as"), 3)->dim == 6 &&
                  component(builtin("lie"), 3)->dim == 2 && component(builtin("com"), 3)->dim == 1 &&
                  component(builtin("nov"), 3)->dim == 6 && component(builtin("nov"), 4)->dim == 20 &&
                  component(builtin("as"), 4)->dim == 24;
        report(4, "component dimensions (mag/as/lie/com/nov at 3, nov/as at 4)", ok);
    }

    // 5. the two computation routes agree for every builtin
    {
        auto start = std::chrono::steady_clock::now();
        bool ok = true;
        for (const std::string& name : builtin_names()) {
            WhiteResult w = derived_identities(builtin(name), 3);
            ok = ok && derived_identity_space(builtin(name), 3, 0) == w.relations;
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ok = ok && dt < 10.0;
        report(5, "crosscheck: derived_identity_space == white kernel for all builtins", ok,
               secs(dt));
    }

    // 6. Oracle spot checks
    {
        bool ok = is_derived_identity(builtin("as"), eq5, 0) &&
                  is_derived_identity(builtin("as"), eq6, 0) &&
                  is_derived_identity(builtin("com"), eq1_prec, 0) &&
                  is_derived_identity(builtin("com"), eq2_prec, 0) &&
                  !is_derived_identity(builtin("as"), D("prec(x1,x2)"), 0);
        report(6, "oracle spot checks (eq5, eq6, Novikov axioms in prec, negative case)", ok);
    }

    // 7. Generalized-derivation invariance
    {
        std::vector<Rational> lambdas = {rat(0), rat(1), rat(-2), rat(7, 3)};
        bool ok = lambda_invariance(builtin("as"), 3, lambdas) &&
                  lambda_invariance(builtin("com"), 3, lambdas);
        report(7, "derived identity space is invariant for lambda in {0, 1, -2, 7/3}", ok);
    }

    // 8. Hat-construction suite
    {
        auto start = std::chrono::steady_clock::now();
        bool ok = check_h_novikov(8) && check_psi_homomorphism(200, 4, 42);
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ok = ok && dt < 30.0;
        report(8, "check_h_novikov(8) and psi homomorphism (200 samples, N=4, seed 42)", ok,
               secs(dt));
    }

    // 9. Arity-4 smoke: runtime bound and consequence consistency
    {
        auto r = run_cli("--format json derived as -n 4" + cache);
        bool ok = r.code == 0 && r.seconds < 300.0;
        if (ok) {
            WhiteResult w3 = derived_identities(builtin("as"), 3);
            WhiteResult w4 = derived_identities(builtin("as"), 4);
            Json doc = Json::parse(r.out);
            ok = doc["results"]["kernelDim"] == w4.relations.dim();
            for (std::size_t i = 0; i < w3.relations.dim() && ok; ++i) {
                Poly v = poly_from_coords(3, 2, w3.relations.basis().row(i));
                for (const Monomial& g : enumerate_monomials(2, 2)) {
                    Poly gp = Poly::monomial(g, 2);
                    for (int pos = 1; pos <= 2 && ok; ++pos)
                        ok = w4.relations.contains(coords(graft_poly(gp, pos, v)));
                    for (int pos = 1; pos <= 3 && ok; ++pos)
                        ok = w4.relations.contains(coords(graft_poly(v, pos, gp)));
                }
            }
        }
        report(9, "derived as -n 4 under 5 minutes; n=3 kernel grafts land in the n=4 kernel", ok,
               secs(r.seconds));
    }

    // 10. Determinism: byte-identical reruns of every command above
    {
        const std::string data = DERIVAR_DATA_DIR;
        const std::vector<std::string> commands = {
            "--format json derived lie -n 3",
            "--format json derived as -n 3",
            "--format json derived com -n 3",
            "--format json component nov -n 3",
            "--format json crosscheck as -n 3 --lambda 0 --lambda 1",
            "--format json check com -f " + data + "/novikov_prec.ids",
            "--format json hat-test",
            "--format json derived as -n 4",
            "--format text derived as -n 3",
            "--format latex derived as -n 3",
        };
        bool ok = true;
        std::string which;
        for (const std::string& cmd : commands) {
            auto a = run_cli(cmd + cache);
            auto b = run_cli(cmd + cache);
            if (a.code != b.code || a.out != b.out || a.out.empty()) {
                ok = false;
                which = cmd;
                break;
            }
        }
        report(10, "byte-identical result documents on rerun", ok, which);
    }

    std::error_code ec;
    fs::remove_all(cache_dir, ec);

    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
              << (10 - g_failures) << "/10)" << std::endl;
    return g_failures;
}
