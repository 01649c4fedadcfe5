// Serial reference vs OpenMP kernels: enumeration oracles and grid checks.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>

#include <omp.h>

#include "CLI11.hpp"

#include "qcomb/identities.hpp"
#include "qcomb/oracle.hpp"

using namespace qcomb;

namespace {

template <class F>
double best_of(int reps, F&& f)
{
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const std::string& label, double serial, double parallel, bool same)
{
    std::cout << std::left << std::setw(34) << label << std::right << std::fixed << std::setprecision(4)
              << std::setw(11) << serial << std::setw(11) << parallel << std::setw(9) << std::setprecision(2)
              << serial / parallel << "  " << (same ? "equal" : "DIFFER") << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Compare serial and OpenMP paths"};
    int reps = 3;
    int n = 9;
    int threads = 0;
    app.add_option("--reps", reps, "Repetitions per timing (best is kept)")->check(CLI::PositiveNumber);
    app.add_option("--n", n, "Ground-set size for the oracle kernels")->check(CLI::Range(1, 10));
    app.add_option("--threads", threads, "OpenMP threads; 0 keeps the default")->check(CLI::NonNegativeNumber);
    CLI11_PARSE(app, argc, argv);
    if (threads > 0) {
        omp_set_num_threads(threads);
    }

    std::cout << "threads=" << omp_get_max_threads() << " n=" << n << " reps=" << reps << '\n';
    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(11) << "serial s" << std::setw(11)
              << "omp s" << std::setw(9) << "speedup" << '\n';

    const int k = n / 2;
    for (auto fam : {StructureFamily::partitions, StructureFamily::perms, StructureFamily::lah}) {
        const int nn = fam == StructureFamily::partitions ? n + 1 : n;
        QPoly a;
        QPoly b;
        const double s = best_of(reps, [&] { a = oracle_q(fam, nn, k, 1, {}, Exec::serial); });
        const double p = best_of(reps, [&] { b = oracle_q(fam, nn, k, 1, {}, Exec::parallel); });
        row("oracle " + structure_family_name(fam) + " n=" + std::to_string(nn) + " k=" + std::to_string(k), s, p,
            a == b);
    }
    {
        const int nn = std::min(n, 8);
        MPoly a;
        MPoly b;
        const double s = best_of(reps, [&] { a = oracle_ext_lah(nn, nn / 2, {}, Exec::serial); });
        const double p = best_of(reps, [&] { b = oracle_ext_lah(nn, nn / 2, {}, Exec::parallel); });
        row("oracle ext_lah n=" + std::to_string(nn) + " k=" + std::to_string(nn / 2), s, p, a == b);
    }
    for (const char* name : {"I-T4E1", "I-GENL1", "I-T5-BIJ"}) {
        CheckOptions serial;
        serial.exec = Exec::serial;
        CheckOptions parallel;
        IdentityReport a;
        IdentityReport b;
        const double s = best_of(reps, [&] { a = check(name, serial); });
        const double p = best_of(reps, [&] { b = check(name, parallel); });
        row(std::string("grid ") + name, s, p, a == b);
    }
    return 0;
}
