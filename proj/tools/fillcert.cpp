// fillcert: exact certificates for filling-function lower bounds of
// Heisenberg-type groups, plus closed invariant form searches.
//
// Commands:
//   verify         run the lower-bound pipeline and print a certificate
//   search         basis of closed invariant forms of given degree/weight
//   exponent       the certified exponent next to the Euclidean one
//   algebra dump   print a built-in algebra (text or Algebra JSON)
//   validate-file  check a user-supplied Algebra JSON file
//   bench          timing tables for the differential and kernel search

#include "filling/certify.hpp"
#include "filling/construction.hpp"
#include "filling/families.hpp"
#include "filling/io.hpp"
#include "filling/pipeline.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

namespace {

using namespace filling;

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kInvalidInput = 3,
    kCheckFailed = 4,
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Family require_family(const std::string& text)
{
    if (auto f = parse_family(text))
        return *f;
    throw UsageError("unknown family '" + text + "' (expected complex, quaternionic or octonionic)");
}

void require_positive(int n, const char* what)
{
    if (n < 1)
        throw UsageError(std::string(what) + " must be at least 1, got " + std::to_string(n));
}

// Exit code for an algebra that fails validation (empty report means valid).
int report_violations(const GradedLieAlgebra& algebra, std::ostream& out)
{
    const auto violations = validate(algebra);
    for (const auto& v : violations) {
        out << "violation " << to_string(v.kind) << " (" << v.i << "," << v.j << "," << v.k;
        if (v.l >= 0)
            out << "," << v.l;
        out << "): " << v.message << "\n";
    }
    return violations.empty() ? kOk : kInvalidInput;
}

AlgebraPtr load_checked(const std::string& path)
{
    AlgebraPtr algebra = io::load_algebra_file(path);
    if (report_violations(*algebra, std::cerr) != kOk)
        throw io::ParseError(path + ": algebra fails validation");
    if (!is_stratified(*algebra))
        throw io::ParseError(path + ": algebra is not stratified");
    return algebra;
}

void print_certificate_text(const Certificate& cert)
{
    const char* tick = "✓";
    std::cout << "algebra      " << cert.algebra_name << "\n"
              << "degree       " << cert.degree << "\n"
              << "closed       " << tick << "\n"
              << "weight " << cert.weight_s << "     " << tick << "\n"
              << "restriction  " << tick << "\n"
              << "boundary r   " << cert.boundary_exponent_r << "\n"
              << "exponent     " << to_string(cert.exponent) << "\n";
}

struct VerifyArgs {
    std::string family;
    int n = 0;
    std::string file;
    bool json = false;
};

int run_verify(const VerifyArgs& args)
{
    Family family;
    int n = args.n;
    AlgebraPtr algebra;
    if (!args.file.empty()) {
        algebra = load_checked(args.file);
        auto [inferred, inferred_n] = infer_layout(*algebra);
        if (!args.family.empty() && require_family(args.family) != inferred)
            throw UsageError(args.file + " does not have the " + args.family + " layout");
        if (args.n != 0 && args.n != inferred_n)
            throw UsageError(args.file + " has rank " + std::to_string(inferred_n) + ", not " + std::to_string(args.n));
        family = inferred;
        n = inferred_n;
    } else {
        if (args.family.empty())
            throw UsageError("verify needs a family or --file");
        family = require_family(args.family);
        require_positive(n, "--n");
        algebra = heisenberg(family, n);
    }

    const Certificate cert = certify_heisenberg(family, n, algebra);
    if (args.json)
        std::cout << io::dump(io::certificate_to_json(cert));
    else
        print_certificate_text(cert);
    return kOk;
}

struct SearchArgs {
    std::string family;
    int n = 0;
    std::string file;
    int degree = 0;
    int weight = 0;
    bool print_basis = false;
    bool json = false;
    unsigned threads = 1;
};

int run_search(const SearchArgs& args)
{
    AlgebraPtr algebra;
    if (!args.file.empty()) {
        algebra = load_checked(args.file);
    } else {
        if (args.family.empty())
            throw UsageError("search needs --family/--n or --file");
        require_positive(args.n, "--n");
        algebra = heisenberg(require_family(args.family), args.n);
    }
    require_positive(args.degree, "--degree");

    const KernelBasis basis = closed_invariant_forms(algebra, args.degree, args.weight, {MonomialOrder::lexicographic, args.threads});
    if (args.json) {
        std::cout << io::dump(io::kernel_to_json(basis, args.print_basis));
        return kOk;
    }
    std::cout << "algebra     " << basis.algebra_name << "\n"
              << "degree      " << basis.degree << "\n"
              << "weight      " << basis.weight << "\n"
              << "space size  " << basis.space_size << "\n"
              << "dimension   " << basis.dimension() << "\n";
    if (args.print_basis)
        for (const auto& f : basis.basis)
            std::cout << io::dump(io::form_to_json(f));
    return kOk;
}

int run_exponent(const std::string& family_text, int n)
{
    const Family family = require_family(family_text);
    if (family == Family::octonionic)
        throw UsageError("no certified exponent for the octonionic family");
    require_positive(n, "--n");
    const ExponentReport r = exponent_report(n);
    std::cout << "family      " << to_string(family) << "\n"
              << "n           " << n << "\n"
              << "exponent    " << to_string(r.exponent) << "\n"
              << "euclidean   " << to_string(r.euclidean_exponent) << "\n";
    return kOk;
}

int run_dump(const std::string& family_text, int n, bool json)
{
    const Family family = require_family(family_text);
    require_positive(n, "--n");
    const AlgebraPtr algebra = heisenberg(family, n);
    if (json) {
        std::cout << io::dump(io::algebra_to_json(*algebra));
        return kOk;
    }
    std::cout << "name       " << algebra->name() << "\n"
              << "dimension  " << algebra->dimension() << "\n";
    for (int x = 0; x < algebra->dimension(); ++x)
        std::cout << "basis      " << x << " " << algebra->labels()[static_cast<std::size_t>(x)] << " layer "
                  << algebra->layer(x) << "\n";
    for (const auto& t : algebra->terms())
        std::cout << "bracket    [" << algebra->labels()[static_cast<std::size_t>(t.i)] << ", "
                  << algebra->labels()[static_cast<std::size_t>(t.j)] << "] = " << to_string(t.coeff) << " "
                  << algebra->labels()[static_cast<std::size_t>(t.k)] << "\n";
    return kOk;
}

int run_validate_file(const std::string& path)
{
    const AlgebraPtr algebra = io::load_algebra_file(path);
    if (report_violations(*algebra, std::cout) != kOk)
        return kInvalidInput;
    const bool stratified = is_stratified(*algebra);
    std::cout << "valid       yes\n"
              << "stratified  " << (stratified ? "yes" : "no") << "\n";
    return kOk;
}

std::size_t eta_space_size(int n)
{
    // 3 * C(4n, n): n layer-1 factors out of 4n, one of I, J, K.
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(4 * n), static_cast<unsigned long>(n));
    return 3 * c.get_ui();
}

int run_bench(const std::string& suite, int max_n, unsigned threads)
{
    if (suite != "differential" && suite != "kernel")
        throw UsageError("--suite must be differential or kernel");
    require_positive(max_n, "--max-n");
    using Clock = std::chrono::steady_clock;
    std::cout << std::left << std::setw(4) << "n" << std::setw(12) << "space" << std::setw(12)
              << (suite == "kernel" ? "kernel_dim" : "nonzero_d") << "seconds\n";
    for (int n = 1; n <= max_n; ++n) {
        const AlgebraPtr algebra = heisenberg(Family::quaternionic, n);
        const auto start = Clock::now();
        std::size_t space = 0;
        std::size_t result = 0;
        if (suite == "differential") {
            const auto monomials = weighted_monomials(*algebra, n + 1, n + 2);
            space = monomials.size();
            for (const auto& m : monomials)
                result += differential(InvariantForm::monomial(algebra, m.indices())).is_zero() ? 0 : 1;
            if (!differential(build_eta(algebra, n)).is_zero())
                throw std::logic_error("eta is not closed");
        } else {
            const KernelBasis basis = closed_invariant_forms(algebra, n + 1, n + 2, {MonomialOrder::lexicographic, threads});
            space = basis.space_size;
            result = basis.dimension();
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (space != eta_space_size(n))
            throw std::logic_error("monomial count disagrees with 3*C(4n,n)");
        std::cout << std::left << std::setw(4) << n << std::setw(12) << space << std::setw(12) << result
                  << std::fixed << std::setprecision(3) << seconds << "\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact certificates for filling-function lower bounds of Heisenberg groups"};
    app.require_subcommand(1, 1);
    const unsigned default_threads = std::max(1u, std::thread::hardware_concurrency());

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run the lower-bound pipeline and print the certificate");
    verify->add_option("family", verify_args.family, "complex or quaternionic");
    verify->add_option("--n", verify_args.n, "Rank n >= 1");
    verify->add_option("--file", verify_args.file, "Algebra JSON file to use instead of the built-in table");
    verify->add_flag("--json", verify_args.json, "Emit Certificate JSON");

    SearchArgs search_args;
    search_args.threads = default_threads;
    auto* search = app.add_subcommand("search", "Closed invariant forms of fixed degree and weight");
    auto* fam_opt = search->add_option("--family", search_args.family, "Built-in family");
    search->add_option("--n", search_args.n, "Rank of the built-in family");
    auto* file_opt = search->add_option("--file", search_args.file, "Algebra JSON file");
    fam_opt->excludes(file_opt);
    search->add_option("--degree", search_args.degree, "Form degree")->required();
    search->add_option("--weight", search_args.weight, "Dilation weight")->required();
    search->add_flag("--print-basis", search_args.print_basis, "Print the basis forms as Form JSON");
    search->add_flag("--json", search_args.json, "Emit JSON");
    search->add_option("--threads", search_args.threads, "Worker threads for elimination");

    std::string exponent_family;
    int exponent_n = 0;
    auto* exponent = app.add_subcommand("exponent", "Certified exponent and the Euclidean comparison");
    exponent->add_option("family", exponent_family, "complex or quaternionic")->required();
    exponent->add_option("--n", exponent_n, "Rank n >= 1")->required();

    std::string dump_family;
    int dump_n = 0;
    bool dump_json = false;
    auto* algebra_cmd = app.add_subcommand("algebra", "Built-in algebras");
    algebra_cmd->require_subcommand(1, 1);
    auto* dump = algebra_cmd->add_subcommand("dump", "Print a built-in algebra");
    dump->add_option("family", dump_family, "complex, quaternionic or octonionic")->required();
    dump->add_option("--n", dump_n, "Rank n >= 1")->required();
    dump->add_flag("--json", dump_json, "Emit Algebra JSON");

    std::string validate_path;
    auto* validate_file = app.add_subcommand("validate-file", "Validate an Algebra JSON file");
    validate_file->add_option("path", validate_path, "Algebra JSON file")->required();

    std::string bench_suite;
    int bench_max_n = 0;
    unsigned bench_threads = default_threads;
    auto* bench = app.add_subcommand("bench", "Timing tables");
    bench->add_option("--suite", bench_suite, "differential or kernel")->required();
    bench->add_option("--max-n", bench_max_n, "Largest n")->required();
    bench->add_option("--threads", bench_threads, "Worker threads for elimination");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*verify)
            return run_verify(verify_args);
        if (*search)
            return run_search(search_args);
        if (*exponent)
            return run_exponent(exponent_family, exponent_n);
        if (*dump)
            return run_dump(dump_family, dump_n, dump_json);
        if (*validate_file)
            return run_validate_file(validate_path);
        if (*bench)
            return run_bench(bench_suite, bench_max_n, bench_threads);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const io::ParseError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const UnsupportedInput& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const EmbeddingError& e) {
        std::cerr << "invalid input: embedding rejected: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const CertificationError& e) {
        std::cerr << "certificate check failed: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}
