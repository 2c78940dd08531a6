// Compares the OpenMP kernels against their serial references on the
// sizes the oracle actually hits (dim 256..1024) plus the sign-rule sweep.
#include <chrono>
#include <cstdio>
#include <random>

#include "qk0/algebra_table.hpp"
#include "qk0/wedderburn.hpp"

using namespace qk0;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

FpMatrix random_matrix(const PrimeField& F, std::uint32_t n, std::mt19937_64& rng) {
    FpMatrix M(F, n, n);
    std::uniform_int_distribution<std::uint32_t> dist(0, F.modulus() - 1);
    for (auto& v : M.a) v = dist(rng);
    return M;
}

void bench_pair(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n", name, serial_ms,
                parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

} // namespace

int main() {
    PrimeField F(65521);
    std::mt19937_64 rng(20240901);

    {
        const std::uint32_t n = 512;
        FpMatrix A = random_matrix(F, n, rng), B = random_matrix(F, n, rng);
        auto t0 = std::chrono::steady_clock::now();
        FpMatrix C1 = fp_mul_serial(A, B);
        double serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        FpMatrix C2 = fp_mul(A, B);
        double parallel = ms_since(t0);
        if (!(C1 == C2)) std::puts("fp_mul MISMATCH");
        bench_pair("fp_mul 512x512", serial, parallel);
    }

    {
        const std::uint32_t n = 512;
        FpMatrix A = random_matrix(F, n, rng);
        auto t0 = std::chrono::steady_clock::now();
        std::uint32_t r1 = fp_rank_serial(A);
        double serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        std::uint32_t r2 = fp_rank(A);
        double parallel = ms_since(t0);
        if (r1 != r2) std::puts("fp_rank MISMATCH");
        bench_pair("fp_rank 512x512", serial, parallel);
    }

    {
        PrimeField F7(7);
        SignatureForm q{5, 4}; // dim 512
        CliffordSpec<PrimeField> spec(signature_coeffs(F7, q));
        auto table = clifford_table(spec);
        auto t0 = std::chrono::steady_clock::now();
        FpMatrix G1 = trace_form_gram_serial(table);
        double serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        FpMatrix G2 = trace_form_gram(table);
        double parallel = ms_since(t0);
        if (!(G1 == G2)) std::puts("trace_form_gram MISMATCH");
        bench_pair("trace_form_gram dim 512", serial, parallel);
    }

    {
        // Sign-rule sweep at rank 12: all 2^24 basis pairs.
        PrimeField F7(7);
        SignatureForm q{6, 6};
        CliffordSpec<PrimeField> spec(signature_coeffs(F7, q), 12);
        const std::uint32_t dim = spec.dim();
        auto t0 = std::chrono::steady_clock::now();
        std::uint64_t acc1 = 0;
        for (std::uint32_t s = 0; s < dim; ++s)
            for (std::uint32_t t = 0; t < dim; ++t) acc1 += basis_mul(s, t, spec).first;
        double serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        std::uint64_t acc2 = 0;
#pragma omp parallel for schedule(static) reduction(+ : acc2)
        for (std::int64_t s = 0; s < std::int64_t(dim); ++s)
            for (std::uint32_t t = 0; t < dim; ++t)
                acc2 += basis_mul(std::uint32_t(s), t, spec).first;
        double parallel = ms_since(t0);
        if (acc1 != acc2) std::puts("sign sweep MISMATCH");
        bench_pair("sign sweep rank 12", serial, parallel);
    }

    return 0;
}
