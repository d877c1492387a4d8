// Command-line front end: homotopy-table lookups, decomposition
// certificates, the lemma oracle, and the positive Bezout solver.
//
// Exit codes are a stable contract:
//   0 success / decomposable
//   1 valid certificate but not decomposable at the requested dimension
//   2 query outside the covered homotopy range
//   3 invalid input (parity, coprimality, ranges, usage)
//   4 oracle identity failure

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include <orthotopy/orthotopy.hpp>

namespace {

int run_pi(const std::string& family_name, long long n, long long i) {
    const auto family = orthotopy::parse_family(family_name);
    if (!family) {
        std::cerr << "error: unknown family '" << family_name << "' (expected O, SO, PO, PSO)\n";
        return 3;
    }
    if ((*family == orthotopy::GroupFamily::PO || *family == orthotopy::GroupFamily::PSO) && n == 2)
        std::cerr << "note: the degree-2 projective families are taken as O(2) and SO(2)\n";
    const orthotopy::FgAbGroup g = orthotopy::pi(*family, n, i);
    std::cout << orthotopy::to_string(g) << "\n";
    if (i == n - 1 && n >= 2) {
        const orthotopy::UnstablePi u = orthotopy::first_unstable(n);
        std::cout << "kernel: " << orthotopy::to_string(u.kernel) << "\n";
        std::cout << "stable: " << orthotopy::to_string(u.stable) << "\n";
        std::cout << "split: " << (u.split ? "true" : "false") << "\n";
    }
    return 0;
}

int run_certify(long long m, long long n, long long dim, const std::string& format) {
    const orthotopy::DecompositionCertificate cert =
        orthotopy::certify({m, n, dim});
    if (format == "json")
        std::cout << orthotopy::certificate_json_string(cert);
    else
        std::cout << orthotopy::certificate_to_text(cert);
    return cert.decomposable ? 0 : 1;
}

int run_verify_lemmas(long long max_size, std::uint64_t seed) {
    const orthotopy::LemmaReport report = orthotopy::run_lemma_suite(max_size, seed);
    for (const orthotopy::LemmaCheck& line : report.lines)
        std::cout << line.name << ": " << line.checks << " checks, "
                  << (line.passed ? "pass" : "FAIL") << "\n";
    std::cout << "total: " << report.total_checks() << " checks, "
              << (report.all_passed() ? "all passed" : "FAILURES") << " (max size " << max_size
              << ", seed " << seed << ")\n";
    if (!report.all_passed()) {
        for (const orthotopy::LemmaCheck& line : report.lines)
            if (!line.passed)
                std::cerr << "identity failure: " << line.name << "; witness: " << line.witness
                          << "\n";
        return 4;
    }
    return 0;
}

int run_bezout(long long a, long long b) {
    const orthotopy::BezoutPair p = orthotopy::positive_bezout(a, b);
    std::cout << "u = " << p.u << ", v = " << p.v << ", sign = " << (p.sign > 0 ? "+1" : "-1")
              << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact homotopy tables and decomposition certificates for the complex "
                 "orthogonal-type families"};
    app.require_subcommand(1);

    std::string family;
    long long pi_n = 0, pi_i = 0;
    CLI::App* pi_cmd = app.add_subcommand("pi", "Print pi_i of a family at degree n");
    pi_cmd->add_option("--family", family, "O, SO, PO, or PSO")->required();
    pi_cmd->add_option("--n", pi_n, "family degree (n >= 1)")->required();
    pi_cmd->add_option("--i", pi_i, "homotopy degree (0 <= i <= n - 1)")->required();

    long long cm = 0, cn = 0, cdim = 0;
    std::string format = "text";
    CLI::App* certify_cmd =
        app.add_subcommand("certify", "Certify the connectivity of the joint (tensor, Tr) map");
    certify_cmd->add_option("--m", cm, "first factor degree")->required();
    certify_cmd->add_option("--n", cn, "second factor degree (odd)")->required();
    certify_cmd->add_option("--dim", cdim, "dimension of the base complex")->required();
    certify_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    long long max_size = 0;
    std::uint64_t seed = 0;
    CLI::App* lemmas_cmd =
        app.add_subcommand("verify-lemmas", "Re-check the matrix identities behind the argument");
    lemmas_cmd->add_option("--max-size", max_size, "largest block size (>= 2)")->required();
    lemmas_cmd->add_option("--seed", seed, "random seed for sample matrices")->required();

    long long ba = 0, bb = 0;
    CLI::App* bezout_cmd =
        app.add_subcommand("bezout", "Smallest positive u, v with |v*b - u*a| = 1");
    bezout_cmd->add_option("--a", ba, "first value (>= 1)")->required();
    bezout_cmd->add_option("--b", bb, "second value (>= 1, coprime to a)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0 through CLI11; real parse errors land on
        // the invalid-input code.
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (pi_cmd->parsed()) return run_pi(family, pi_n, pi_i);
        if (certify_cmd->parsed()) return run_certify(cm, cn, cdim, format);
        if (lemmas_cmd->parsed()) return run_verify_lemmas(max_size, seed);
        return run_bezout(ba, bb);
    } catch (const orthotopy::UnsupportedRangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const orthotopy::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
