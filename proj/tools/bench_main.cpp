// Benchmark comparing the serial reference kernels against the OpenMP ones:
// Bareiss determinants, batched chart-closure samples and batched 90x90
// minor determinants. Results are checked for exact equality as they run.

#include <omp.h>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hilb/factorization.hpp"
#include "hilb/generators.hpp"
#include "hilb/matrix.hpp"
#include "hilb/principal.hpp"

namespace {

using namespace hilb;

QMat random_matrix(int n, std::uint64_t seed, long height) {
    Rng rng(seed);
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = make_rational(rng.int_in(-height, height));
    return m;
}

struct Row {
    std::string name;
    double serial = 0.0;
    double parallel = 0.0;
};

void print(const Row& r) {
    std::cout << "  " << r.name << ": serial " << r.serial << "s, openmp " << r.parallel << "s, speedup "
              << (r.parallel > 0 ? r.serial / r.parallel : 0.0) << "x\n";
}

Row bench_det(int n, int reps, std::uint64_t seed) {
    Row row{"bareiss det " + std::to_string(n) + "x" + std::to_string(n) + " (x" + std::to_string(reps) + ")"};
    for (int rep = 0; rep < reps; ++rep) {
        QMat m = random_matrix(n, Rng::derive(seed, rep), 50);
        double t0 = omp_get_wtime();
        Rational ds = det_exact(m, Exec::Serial);
        double t1 = omp_get_wtime();
        Rational dp = det_exact(m, Exec::OpenMP);
        double t2 = omp_get_wtime();
        if (ds != dp) throw Error("serial and OpenMP determinants disagree");
        row.serial += t1 - t0;
        row.parallel += t2 - t1;
    }
    return row;
}

Row bench_chart(int d, int samples, std::uint64_t seed) {
    Row row{"chart closure d=" + std::to_string(d) + " (" + std::to_string(samples) + " samples)"};
    cached_generators(d);
    std::vector<int> serial_ok(samples), parallel_ok(samples);

    double t0 = omp_get_wtime();
    for (int s = 0; s < samples; ++s)
        serial_ok[s] = verify_on_chart(interpolate(sample_spanning(d, Rng::derive(seed, s)))).pass;
    double t1 = omp_get_wtime();
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < samples; ++s)
        parallel_ok[s] = verify_on_chart(interpolate(sample_spanning(d, Rng::derive(seed, s)))).pass;
    double t2 = omp_get_wtime();

    if (serial_ok != parallel_ok) throw Error("serial and OpenMP chart batches disagree");
    row.serial = t1 - t0;
    row.parallel = t2 - t1;
    return row;
}

Row bench_minor(int samples, std::uint64_t seed) {
    Row row{"90x90 minor dets at P_8 samples (" + std::to_string(samples) + ")"};
    const auto& m = fact::extract_m();
    fact::MinorSelection sel = fact::find_nonsingular_minor(seed);

    std::vector<Rational> serial_det(samples), parallel_det(samples);
    double t0 = omp_get_wtime();
    for (int s = 0; s < samples; ++s) {
        auto a = fact::InSetAssignment::from_coords(interpolate(sample_spanning(8, Rng::derive(seed, s))));
        serial_det[s] = fact::minor_det_at(m, sel, a, Exec::Serial);
    }
    double t1 = omp_get_wtime();
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < samples; ++s) {
        auto a = fact::InSetAssignment::from_coords(interpolate(sample_spanning(8, Rng::derive(seed, s))));
        parallel_det[s] = fact::minor_det_at(m, sel, a, Exec::Serial);
    }
    double t2 = omp_get_wtime();

    if (serial_det != parallel_det) throw Error("serial and OpenMP minor batches disagree");
    row.serial = t1 - t0;
    row.parallel = t2 - t1;
    return row;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel benchmark"};
    int det_n = 90, det_reps = 3, chart_samples = 20, minor_samples = 8;
    std::uint64_t seed = 1;
    app.add_option("--det-n", det_n, "determinant size");
    app.add_option("--det-reps", det_reps, "determinant repetitions");
    app.add_option("--chart-samples", chart_samples, "chart closure batch size");
    app.add_option("--minor-samples", minor_samples, "minor determinant batch size");
    app.add_option("--seed", seed, "seed");
    CLI11_PARSE(app, argc, argv);

    std::cout << "threads: " << omp_get_max_threads() << "\n";
    try {
        print(bench_det(det_n, det_reps, seed));
        print(bench_chart(8, chart_samples, seed));
        print(bench_minor(minor_samples, seed));
    } catch (const std::exception& e) {
        std::cerr << "benchmark failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
