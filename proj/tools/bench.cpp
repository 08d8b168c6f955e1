// Times batch checking of a set of files, serial against parallel.
//
//   ozcheck_bench [--copies N] [--repeat R] files...

#include "ozcheck/driver.hpp"
#include "ozcheck/oz_grammar.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double best_of(int repeat, F&& f)
{
    double best = 1e300;
    for (int r = 0; r < repeat; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
        best = std::min(best, dt.count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<std::string> files;
    int copies = 64;
    int repeat = 5;
    CLI::App app{"Batch checking benchmark"};
    app.add_option("files", files, "Specification files")->required()->check(CLI::ExistingFile);
    app.add_option("--copies", copies, "Times each file is repeated in the batch")->check(CLI::PositiveNumber);
    app.add_option("--repeat", repeat, "Timed runs, best is reported")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    ozcheck::RunConfig cfg;
    cfg.format = ozcheck::OutputFormat::Machine;
    for (int c = 0; c < copies; ++c)
        cfg.inputs.insert(cfg.inputs.end(), files.begin(), files.end());

    auto t0 = std::chrono::steady_clock::now();
    ozcheck::object_z_table();
    std::chrono::duration<double, std::milli> build = std::chrono::steady_clock::now() - t0;

    std::size_t serial_diags = 0, parallel_diags = 0;
    double serial = best_of(repeat, [&] {
        serial_diags = 0;
        for (const auto& r : ozcheck::check_files_serial(cfg))
            serial_diags += r.diagnostics.size();
    });
    double parallel = best_of(repeat, [&] {
        parallel_diags = 0;
        for (const auto& r : ozcheck::check_files(cfg))
            parallel_diags += r.diagnostics.size();
    });

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::cout << "table build      " << build.count() << " ms\n"
              << "files            " << cfg.inputs.size() << '\n'
              << "threads          " << threads << '\n'
              << "serial           " << serial << " ms\n"
              << "parallel         " << parallel << " ms\n"
              << "speedup          " << serial / parallel << '\n';
    if (serial_diags != parallel_diags) {
        std::cerr << "diagnostic counts differ: " << serial_diags << " vs " << parallel_diags << '\n';
        return 1;
    }
    return 0;
}
