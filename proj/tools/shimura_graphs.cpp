// Command line driver: single runs (JSON or DOT) and batch sweeps.
//
// Exit codes: 0 success, 2 inadmissible prime ((a/p) != 1 or p | 2DN),
// 3 null-trace condition fails (t_xi(p) > 0), 4 unsupported (D,N),
// 5 internal invariant failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "shimura/report.hpp"

namespace {

shimura::Quaternion parse_xi(const std::string& text) {
    std::vector<shimura::Rat> coords;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        shimura::Rat r;
        if (r.set_str(part, 10) != 0)
            throw CLI::ValidationError("--xi", "cannot parse rational '" + part + "'");
        r.canonicalize();
        coords.push_back(r);
    }
    if (coords.size() != 4)
        throw CLI::ValidationError("--xi", "expected four comma-separated rationals c0,c1,c2,c3");
    return shimura::quat(coords[0], coords[1], coords[2], coords[3]);
}

void write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + out_path);
    os << payload;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Schottky groups, p-adic fundamental domains and reduction-graphs with lengths\n"
        "for the Shimura curve families X(Dp,N) with h(D,N) = 1"};
    long D = 0, N = 1, p = 0;
    long sweep_pmax = 200;
    int precision = 6;
    int threads = 0;
    std::string xi_text, format = "json", out_path;

    app.add_option("--D", D, "quaternion algebra discriminant");
    app.add_option("--N", N, "Eichler order level")->capture_default_str();
    app.add_option("--p", p, "odd prime, coprime to 2*D*N, with (a/p) = 1");
    app.add_option("--xi", xi_text,
                   "override xi as {1,i,j,k} rational coordinates \"c0,c1,c2,c3\"");
    app.add_option("--precision", precision, "matrix display precision k (entries mod p^k)")
        ->capture_default_str();
    app.add_option("--format", format, "output format: json or dot")
        ->check(CLI::IsMember({"json", "dot"}))
        ->capture_default_str();
    auto* sweep_opt =
        app.add_option("--sweep", sweep_pmax,
                       "batch mode: validate all families for admissible primes <= pmax "
                       "(default 200)")
            ->expected(0, 1);
    app.add_option("--threads", threads, "worker threads in sweep mode (0 = auto)")
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep_opt->count() > 0) {
            if (sweep_opt->results().empty() || sweep_opt->results()[0].empty() ||
                sweep_pmax <= 0)
                sweep_pmax = 200;
            auto t0 = std::chrono::steady_clock::now();
            std::vector<std::string> lines = shimura::sweep({sweep_pmax, threads});
            std::ostringstream os;
            bool ok = true;
            for (const std::string& line : lines) {
                os << line << "\n";
                if (line.find("FAILED") != std::string::npos) ok = false;
            }
            write_output(os.str(), out_path);
            auto t1 = std::chrono::steady_clock::now();
            std::cerr << lines.size() << " runs in "
                      << std::chrono::duration<double>(t1 - t0).count() << " s\n";
            return ok ? 0 : 5;
        }

        if (D == 0 || p == 0) {
            std::cerr << "error: --D and --p are required (or use --sweep)\n";
            return 1;
        }
        shimura::RunOptions opts{D, N, p, std::nullopt, precision};
        if (!xi_text.empty()) opts.xi_override = parse_xi(xi_text);
        shimura::RunReport report = shimura::run(opts);
        if (!report.schottky) {
            // graph stages skipped; the partial report (generators, t) is JSON-only
            write_output(shimura::emit_json(report), out_path);
            std::cerr << "pipeline time: " << report.timing_ms << " ms\n";
            std::cerr << "t_xi(" << p << ") = " << report.t_xi
                      << " > 0: null-trace condition fails, graph stages skipped\n";
            return 3;
        }
        write_output(format == "dot" ? shimura::emit_dot(report) : shimura::emit_json(report),
                     out_path);
        std::cerr << "pipeline time: " << report.timing_ms << " ms\n";
        return 0;
    } catch (const shimura::unsupported_family& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 4;
    } catch (const shimura::inadmissible_prime& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const shimura::internal_error& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 5;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
