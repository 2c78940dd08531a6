#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qk0/rational.hpp"
#include "qk0/real_geometry.hpp"
#include "qk0/render.hpp"
#include "qk0/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

int run_compute(unsigned plus, unsigned minus, const std::string& field_desc) {
    qk0::FieldProfile profile = qk0::parse_field_descriptor(field_desc);
    std::cout << qk0::compute_line(profile, {plus, minus}) << '\n';
    return kExitOk;
}

int run_table(const std::string& field_desc, const std::string& kind_str, unsigned r,
              unsigned max_n) {
    qk0::FieldProfile profile = qk0::parse_field_descriptor(field_desc);
    qk0::TableKind kind = qk0::parse_table_kind(kind_str);
    if (max_n > 512) throw qk0::Error(qk0::Errc::InvalidArgument, "--max-n exceeds 512");
    for (const auto& row : qk0::table_rows(profile, kind, r, max_n)) std::cout << row << '\n';
    return kExitOk;
}

int run_verify(const std::vector<std::uint32_t>& primes, unsigned max_rank, bool witnesses) {
    if (max_rank > 10) throw qk0::Error(qk0::Errc::InvalidArgument, "--max-rank exceeds 10");
    std::vector<qk0::PrimeField> fields;
    for (auto p : primes) fields.emplace_back(p); // rejects 2 and composites

    std::vector<qk0::VerificationRecord> records;
    for (const auto& field : fields) {
        auto batch = qk0::run_prime_sweep(field, max_rank);
        records.insert(records.end(), batch.begin(), batch.end());
    }
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        return std::tuple(a.form.plus, a.form.minus, a.prime) <
               std::tuple(b.form.plus, b.form.minus, b.prime);
    });
    std::size_t mismatches = 0;
    for (const auto& rec : records) {
        if (!rec.match) ++mismatches;
        std::cout << qk0::record_line(rec) << '\n';
    }

    std::size_t witness_failures = 0, witness_count = 0;
    if (witnesses) {
        auto report = [&](const auto& outcomes) {
            for (const auto& o : outcomes) {
                ++witness_count;
                if (!o.pass) ++witness_failures;
                std::cout << qk0::witness_certificate(o) << '\n';
            }
        };
        report(qk0::run_witness_suite(qk0::RationalField{}));
        for (const auto& field : fields) report(qk0::run_witness_suite(field));
    }

    std::cout << "SUMMARY cases=" << records.size() << " mismatches=" << mismatches
              << " witnesses=" << witness_count << " witness_failures=" << witness_failures
              << '\n';
    return (mismatches == 0 && witness_failures == 0) ? kExitOk : kExitMismatch;
}

int run_real_geometry(unsigned plus, unsigned minus) {
    std::cout << qk0::real_geometry_line({plus, minus}) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reduced K0 of the quadric rings k[x,y]/(x1^2+..+xn^2-y1^2-..-ym^2-1)"};
    app.require_subcommand(1);

    unsigned plus = 0, minus = 0;
    std::string field_desc;
    auto* compute = app.add_subcommand("compute", "classify one form");
    compute->add_option("--plus", plus, "count of +1 coefficients")->required();
    compute->add_option("--minus", minus, "count of -1 coefficients")->required();
    compute->add_option("--field", field_desc,
                        "field descriptor: level-1 | level-2 | level-inf | Fp:<p> | Q")
        ->required();

    std::string kind = "paper-8r";
    unsigned table_r = 0, table_max_n = 8;
    auto* table = app.add_subcommand("table", "print classification tables");
    table->add_option("--field", field_desc, "field descriptor")->required();
    table->add_option("--kind", kind, "definite-plus | definite-minus | paper-8r | paper-4r");
    table->add_option("--r", table_r, "period index for the paper-* kinds");
    table->add_option("--max-n", table_max_n, "row count for the definite-* kinds (<= 512)");

    std::vector<std::uint32_t> primes{5, 13, 17, 7, 11, 19};
    unsigned max_rank = 8;
    bool witnesses = false;
    auto* verify = app.add_subcommand("verify", "oracle vs symbolic sweep");
    verify->add_option("--primes", primes, "odd primes for the structure-constant oracle")
        ->delimiter(',');
    verify->add_option("--max-rank", max_rank, "sweep all n+m up to this rank (<= 10)");
    verify->add_flag("--witnesses", witnesses, "also run the explicit isomorphism suite");

    auto* real = app.add_subcommand("real-geometry", "Euler class / Chow group over R");
    real->add_option("--plus", plus)->required();
    real->add_option("--minus", minus)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(plus, minus, field_desc);
        if (table->parsed()) return run_table(field_desc, kind, table_r, table_max_n);
        if (verify->parsed()) return run_verify(primes, max_rank, witnesses);
        if (real->parsed()) return run_real_geometry(plus, minus);
    } catch (const qk0::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
