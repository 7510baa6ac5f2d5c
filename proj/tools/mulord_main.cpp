// mulord: exact multiplicative-order arithmetic, Euler-product
// constants with certified tail bounds, and sieve surveys.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mulord/constants.hpp"
#include "mulord/decompose.hpp"
#include "mulord/kummer.hpp"
#include "mulord/order.hpp"
#include "mulord/report.hpp"
#include "mulord/survey.hpp"

namespace {

using namespace mulord;

struct Common {
    std::string format = "json";
    std::string out_path;
    int workers = env_workers();
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", c.out_path, "write the report to a file instead of stdout");
    cmd->add_option("--workers", c.workers, "worker threads (default: MULORD_WORKERS or 1)")
        ->check(CLI::Range(1, 1024));
}

void emit(const std::string& text, const Common& c) {
    if (c.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw domain_error("cannot open output file: " + c.out_path);
    f << text;
}

void require_json(const Common& c) {
    if (c.format != "json") {
        throw CLI::ValidationError("--format",
                                   "csv is only available for tabular reports "
                                   "(degree tables, density, census, sk-ek)");
    }
}

json constant_json(const ConstantValue& v) {
    return json{{"cutoff", v.cutoff},
                {"prime_count", v.prime_count},
                {"value", certified_decimal(v.value, v.tail_bound)},
                {"tail_bound", bound_str(v.tail_bound)},
                {"raw_product", real_str(v.raw_product)},
                {"raw_tail_bound", bound_str(v.raw_tail_bound)},
                {"tail_corrected", v.tail_corrected}};
}

std::string rat_str(const BigRat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// ---- subcommand runners ----

void run_constants(u64 b_cutoff, u64 c_cutoff, const Common& c) {
    require_json(c);
    Report rep("constants");
    rep.params()["b_cutoff"] = b_cutoff;
    rep.params()["c_cutoff"] = c_cutoff;
    rep.results()["B"] = constant_json(euler_product_B(b_cutoff, c.workers));
    rep.results()["c"] = constant_json(euler_product_c(c_cutoff, c.workers));
    rep.seal();
    emit(rep.to_json(), c);
}

void run_cg(const std::string& gs, u64 c_cutoff, u64 series_K, const Common& c) {
    require_json(c);
    RationalG g = parse_g(gs);
    GDecomposition d = decompose(g);
    CgValue cf = cg_closed_form(d, c_cutoff, c.workers);
    Report rep("cg");
    rep.params()["g"] = to_string(g);
    rep.params()["c_cutoff"] = c_cutoff;
    if (series_K) rep.params()["series_K"] = series_K;
    rep.results()["multiplier"] = rat_str(cf.multiplier);
    rep.results()["value"] = certified_decimal(cf.value, cf.tail_bound);
    rep.results()["tail_bound"] = bound_str(cf.tail_bound);
    if (series_K) {
        CgValue sv = cg_series(d, series_K);
        rep.results()["series"] = json{{"K", series_K},
                                       {"value", real_str(sv.value)},
                                       {"tail_bound", bound_str(sv.tail_bound)},
                                       {"abs_diff", bound_str(abs(sv.value - cf.value))}};
    }
    rep.seal();
    emit(rep.to_json(), c);
}

void run_decompose(const std::string& gs, const Common& c) {
    require_json(c);
    GDecomposition d = decompose(parse_g(gs));
    Report rep("decompose");
    rep.params()["g"] = to_string(d.g);
    rep.results() = json{{"g", to_string(d.g)},
                         {"sign", d.sign},
                         {"h", d.h},
                         {"e", d.e},
                         {"g0", to_string(d.g0)},
                         {"g1", d.g1},
                         {"g2", to_string(RationalG{i64(d.g2_num), i64(d.g2_den)})},
                         {"delta", d.delta},
                         {"n_g", d.n_g}};
    rep.seal();
    emit(rep.to_json(), c);
}

void run_degree(const std::string& gs, u64 k, u64 upto, const Common& c) {
    GDecomposition d = decompose(parse_g(gs));
    if (upto == 0) {
        require_json(c);
        ExactKummerDegree kd = kummer_degree(d, k);
        Report rep("degree");
        rep.params()["g"] = to_string(d.g);
        rep.params()["k"] = k;
        rep.results() = json{{"k", k},
                             {"degree", u128_to_string(kd.degree)},
                             {"epsilon", epsilon_str(kd.epsilon)}};
        rep.seal();
        emit(rep.to_json(), c);
        return;
    }
    if (c.format == "csv") {
        Csv csv;
        csv.comment("op", "degree");
        csv.comment("g", to_string(d.g));
        csv.comment("upto", std::to_string(upto));
        csv.row({"k", "degree", "epsilon"});
        for (u64 kk = 1; kk <= upto; ++kk) {
            ExactKummerDegree kd = kummer_degree(d, kk);
            csv.row({std::to_string(kk), u128_to_string(kd.degree), epsilon_str(kd.epsilon)});
        }
        emit(csv.str(), c);
        return;
    }
    Report rep("degree");
    rep.params()["g"] = to_string(d.g);
    rep.params()["upto"] = upto;
    json table = json::array();
    for (u64 kk = 1; kk <= upto; ++kk) {
        ExactKummerDegree kd = kummer_degree(d, kk);
        table.push_back(json{{"k", kk},
                             {"degree", u128_to_string(kd.degree)},
                             {"epsilon", epsilon_str(kd.epsilon)}});
    }
    rep.results()["table"] = std::move(table);
    rep.seal();
    emit(rep.to_json(), c);
}

void run_order(const std::string& gs, u64 n, const Common& c) {
    require_json(c);
    RationalG g = parse_g(gs);
    Report rep("order");
    rep.params()["g"] = to_string(g);
    rep.params()["n"] = n;
    rep.results()["order"] = order_mod(g, n);
    rep.seal();
    emit(rep.to_json(), c);
}

void run_prime_avg(const std::string& gs, u64 x, const Common& c) {
    require_json(c);
    RationalG g = parse_g(gs);
    PrimeScanResult r = prime_average(g, x, c.workers);
    Report rep("prime-avg");
    rep.params()["g"] = to_string(g);
    rep.params()["x"] = x;
    rep.results() = json{{"x", r.x},
                         {"prime_count", r.prime_count},
                         {"sum_orders", r.sum_orders},
                         {"average", real_str(Real(r.sum_orders) / Real(r.prime_count))}};
    rep.seal();
    emit(rep.to_json(), c);
}

void run_t_avg(const std::string& gs, u64 x, const Common& c) {
    require_json(c);
    RationalG g = parse_g(gs);
    IntegerScanResult r = scan_integers(g, x, c.workers);
    Report rep("t-avg");
    rep.params()["g"] = to_string(g);
    rep.params()["x"] = x;
    rep.results() = json{{"x", r.x},
                         {"coprime_count", r.coprime_count},
                         {"sum_orders", r.sum_orders},
                         {"t_average", real_str(Real(r.sum_orders) / Real(r.x))},
                         {"lambda_sum", r.sum_lambda},
                         {"lambda_average", real_str(Real(r.sum_lambda) / Real(r.x))},
                         {"x_over_log_x", real_str(Real(r.x) / log(Real(r.x)))}};
    rep.seal();
    emit(rep.to_json(), c);
}

void run_density(const std::string& gs, u64 x, u32 k_max, const Common& c) {
    RationalG g = parse_g(gs);
    GDecomposition d = decompose(g);
    PrimeScanRequest req;
    req.g = g;
    req.x = x;
    req.k_max = k_max;
    PrimeScanResult r = scan_primes(req, c.workers);
    struct RowV {
        u64 k, count;
        Real observed, expected;
    };
    std::vector<RowV> rows;
    for (u32 k = 1; k <= k_max; ++k) {
        ExactKummerDegree kd = kummer_degree(d, k);
        rows.push_back({k, r.density[k], Real(r.density[k]) / Real(r.prime_count),
                        Real(1) / Real(u64(kd.degree))});
    }
    if (c.format == "csv") {
        Csv csv;
        csv.comment("op", "density");
        csv.comment("g", to_string(g));
        csv.comment("x", std::to_string(x));
        csv.row({"k", "count", "observed", "expected"});
        for (const auto& row : rows) {
            csv.row({std::to_string(row.k), std::to_string(row.count),
                     real_str(row.observed, 15), real_str(row.expected, 15)});
        }
        emit(csv.str(), c);
        return;
    }
    Report rep("density");
    rep.params()["g"] = to_string(g);
    rep.params()["x"] = x;
    rep.params()["k_max"] = k_max;
    rep.results()["prime_count"] = r.prime_count;
    json table = json::array();
    for (const auto& row : rows) {
        table.push_back(json{{"k", row.k},
                             {"count", row.count},
                             {"observed", real_str(row.observed, 15)},
                             {"expected", real_str(row.expected, 15)}});
    }
    rep.results()["table"] = std::move(table);
    rep.seal();
    emit(rep.to_json(), c);
}

void run_census(const std::string& gs, u64 x, std::vector<u64> Ls, const Common& c) {
    RationalG g = parse_g(gs);
    if (Ls.empty()) Ls = {1, 2, 4, 8, 16};
    PrimeScanRequest req;
    req.g = g;
    req.x = x;
    req.Ls = Ls;
    PrimeScanResult r = scan_primes(req, c.workers);
    if (c.format == "csv") {
        Csv csv;
        csv.comment("op", "census");
        csv.comment("g", to_string(g));
        csv.comment("x", std::to_string(x));
        csv.row({"L", "count", "fraction"});
        for (size_t j = 0; j < Ls.size(); ++j) {
            csv.row({std::to_string(Ls[j]), std::to_string(r.census[j]),
                     real_str(Real(r.census[j]) / Real(r.prime_count), 15)});
        }
        emit(csv.str(), c);
        return;
    }
    Report rep("census");
    rep.params()["g"] = to_string(g);
    rep.params()["x"] = x;
    rep.params()["L"] = Ls;
    rep.results()["prime_count"] = r.prime_count;
    json table = json::array();
    for (size_t j = 0; j < Ls.size(); ++j) {
        table.push_back(json{{"L", Ls[j]},
                             {"count", r.census[j]},
                             {"fraction", real_str(Real(r.census[j]) / Real(r.prime_count), 15)}});
    }
    rep.results()["table"] = std::move(table);
    rep.seal();
    emit(rep.to_json(), c);
}

void run_sk_ek(const std::string& gs, u64 x, u64 D, u64 c2_cutoff, const Common& c) {
    RationalG g = parse_g(gs);
    PrimeScanRequest req;
    req.g = g;
    req.x = x;
    req.D = D;
    PrimeScanResult r = scan_primes(req, c.workers);

    ConstantValue c2 = euler_product_C2(c2_cutoff, c.workers);
    Real base = exp(-euler_gamma()) * c2.value;
    Real y = log(log(Real(x)));
    Real model_scale = y / log(y);

    struct RowV {
        u64 k, count;
        Real ek, pk, model, ratio;
    };
    std::vector<RowV> rows;
    u64 partition_total = 0;
    for (u64 k = 1; 2 * k <= D; ++k) {
        if (D % (2 * k) != 0) continue;
        partition_total += r.sk_count[k];
        BigRat mult(1, BigInt(k));
        for (const auto& qe : factorize(k)) {
            if (qe.p > 2) mult *= BigRat(qe.p - 1, qe.p - 2);
        }
        Real pk = base * to_real(mult);
        Real model = pk * model_scale;
        rows.push_back({k, r.sk_count[k], r.ek_sum[k], pk, model, r.ek_sum[k] / model});
    }

    if (c.format == "csv") {
        Csv csv;
        csv.comment("op", "sk-ek");
        csv.comment("g", to_string(g));
        csv.comment("x", std::to_string(x));
        csv.comment("D", std::to_string(D));
        csv.row({"k", "count", "ek_sum", "pk", "pk_model", "ek_over_model"});
        for (const auto& row : rows) {
            csv.row({std::to_string(row.k), std::to_string(row.count), real_str(row.ek),
                     real_str(row.pk), real_str(row.model), real_str(row.ratio, 15)});
        }
        emit(csv.str(), c);
        return;
    }
    Report rep("sk-ek");
    rep.params()["g"] = to_string(g);
    rep.params()["x"] = x;
    rep.params()["D"] = D;
    rep.params()["c2_cutoff"] = c2_cutoff;
    rep.results()["note"] =
        "fixed even modulus D stands in for the x-dependent grouping modulus; "
        "S_k counts odd primes p <= x with gcd(p-1, D) = 2k, E_k sums p^-a over "
        "prime powers p^a <= x with p in S_k";
    rep.results()["prime_count"] = r.prime_count;
    rep.results()["partition_total"] = partition_total;
    rep.results()["y"] = real_str(y);
    rep.results()["model_scale"] = real_str(model_scale);
    json table = json::array();
    for (const auto& row : rows) {
        table.push_back(json{{"k", row.k},
                             {"count", row.count},
                             {"ek_sum", real_str(row.ek)},
                             {"pk", real_str(row.pk)},
                             {"pk_model", real_str(row.model)},
                             {"ek_over_model", real_str(row.ratio, 15)}});
    }
    rep.results()["table"] = std::move(table);
    rep.seal();
    emit(rep.to_json(), c);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiplicative-order statistics, Kummer degrees, and "
                 "Euler-product constants with certified tails"};
    app.require_subcommand(1);

    Common common;

    // constants
    u64 b_cutoff = 1'000'000, c_cutoff = 1'000'000;
    auto* sc_constants = app.add_subcommand("constants", "evaluate B and c with tail bounds");
    sc_constants->add_option("--b-cutoff", b_cutoff, "prime cutoff for B")->check(CLI::Range(u64(100), u64(1) << 40));
    sc_constants->add_option("--c-cutoff", c_cutoff, "prime cutoff for c")->check(CLI::Range(u64(100), u64(1) << 40));
    add_common(sc_constants, common);
    sc_constants->callback([&] { run_constants(b_cutoff, c_cutoff, common); });

    // cg
    std::string cg_g;
    u64 cg_cutoff = 1'000'000, cg_series_K = 0;
    auto* sc_cg = app.add_subcommand("cg", "closed-form c_g (exact multiplier times c)");
    sc_cg->add_option("--g", cg_g, "rational base, \"a\" or \"a/b\"")->required();
    sc_cg->add_option("--c-cutoff", cg_cutoff, "prime cutoff for c");
    sc_cg->add_option("--series", cg_series_K, "cross-check against the degree series up to K");
    add_common(sc_cg, common);
    sc_cg->callback([&] { run_cg(cg_g, cg_cutoff, cg_series_K, common); });

    // decompose
    std::string dec_g;
    auto* sc_dec = app.add_subcommand("decompose", "canonical decomposition of g");
    sc_dec->add_option("--g", dec_g, "rational base")->required();
    add_common(sc_dec, common);
    sc_dec->callback([&] { run_decompose(dec_g, common); });

    // degree
    std::string deg_g;
    u64 deg_k = 0, deg_upto = 0;
    auto* sc_deg = app.add_subcommand("degree", "Kummer degree D_g(k)");
    sc_deg->add_option("--g", deg_g, "rational base")->required();
    sc_deg->add_option("--k", deg_k, "single k");
    sc_deg->add_option("--upto", deg_upto, "table for k = 1..K");
    add_common(sc_deg, common);
    sc_deg->callback([&] {
        if (deg_k == 0 && deg_upto == 0) {
            throw CLI::ValidationError("degree", "provide --k or --upto");
        }
        run_degree(deg_g, deg_k, deg_upto, common);
    });

    // order
    std::string ord_g;
    u64 ord_n = 0;
    auto* sc_ord = app.add_subcommand("order", "multiplicative order of g mod n");
    sc_ord->add_option("--g", ord_g, "rational base")->required();
    sc_ord->add_option("--n", ord_n, "modulus")->required();
    add_common(sc_ord, common);
    sc_ord->callback([&] { run_order(ord_g, ord_n, common); });

    // prime-avg
    std::string pa_g;
    u64 pa_x = 0;
    auto* sc_pa = app.add_subcommand("prime-avg", "average of ell_g(p) over primes p <= x");
    sc_pa->add_option("--g", pa_g, "rational base")->required();
    sc_pa->add_option("--x", pa_x, "upper bound")->required();
    add_common(sc_pa, common);
    sc_pa->callback([&] { run_prime_avg(pa_g, pa_x, common); });

    // t-avg
    std::string ta_g;
    u64 ta_x = 0;
    auto* sc_ta = app.add_subcommand("t-avg", "average of ell_g(n) over n <= x, with lambda average");
    sc_ta->add_option("--g", ta_g, "rational base")->required();
    sc_ta->add_option("--x", ta_x, "upper bound")->required();
    add_common(sc_ta, common);
    sc_ta->callback([&] { run_t_avg(ta_g, ta_x, common); });

    // density
    std::string den_g;
    u64 den_x = 0;
    u32 den_kmax = 12;
    auto* sc_den = app.add_subcommand("density", "index densities: primes with k | i_g(p)");
    sc_den->add_option("--g", den_g, "rational base")->required();
    sc_den->add_option("--x", den_x, "upper bound")->required();
    sc_den->add_option("--kmax", den_kmax, "table for k = 1..kmax");
    add_common(sc_den, common);
    sc_den->callback([&] { run_density(den_g, den_x, den_kmax, common); });

    // census
    std::string cen_g;
    u64 cen_x = 0;
    std::vector<u64> cen_L;
    auto* sc_cen = app.add_subcommand("census", "primes with ell_g(p) <= (p-1)/L");
    sc_cen->add_option("--g", cen_g, "rational base")->required();
    sc_cen->add_option("--x", cen_x, "upper bound")->required();
    sc_cen->add_option("--L", cen_L, "thresholds (default 1 2 4 8 16)");
    add_common(sc_cen, common);
    sc_cen->callback([&] { run_census(cen_g, cen_x, cen_L, common); });

    // sk-ek
    std::string sk_g;
    u64 sk_x = 0, sk_D = 24, sk_c2 = 100'000;
    auto* sc_sk = app.add_subcommand("sk-ek", "partition by gcd(p-1, D) with E_k reciprocal sums");
    sc_sk->add_option("--g", sk_g, "rational base")->required();
    sc_sk->add_option("--x", sk_x, "upper bound")->required();
    sc_sk->add_option("--D", sk_D, "even grouping modulus");
    sc_sk->add_option("--c2-cutoff", sk_c2, "prime cutoff for the twin-prime constant");
    add_common(sc_sk, common);
    sc_sk->callback([&] { run_sk_ek(sk_g, sk_x, sk_D, sk_c2, common); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const mulord::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
