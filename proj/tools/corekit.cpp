// corekit command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 refusal to enumerate an infinite family.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corekit/corekit.hpp"
#include "corekit/json.hpp"
#include "corekit/render.hpp"
#include "corekit/sweeps.hpp"

namespace {

using corekit::Int;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfinite = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
    if (!condition) throw UsageError(message);
}

corekit::EnumerationLimits enumeration_limits(std::optional<Int> flag) {
    corekit::EnumerationLimits limits;
    if (const char* env = std::getenv("COREKIT_MAX_ENUM_BOUND")) {
        try {
            limits.max_bound = std::stoll(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("COREKIT_MAX_ENUM_BOUND is not an integer: ") + env);
        }
    }
    if (flag) limits.max_bound = *flag;
    return limits;
}

struct KappaArgs {
    Int k = 0;
    std::string family = "triple";
    std::string format = "ascii";
};

int cmd_kappa(const KappaArgs& a) {
    require(a.k >= 1, "--k must be at least 1");
    const corekit::Partition p = a.family == "pair" ? corekit::kappa_pair(a.k) : corekit::kappa_triple(a.k);
    if (a.format == "json") {
        std::cout << corekit::Json(p).dump() << '\n';
    } else {
        std::cout << corekit::render_young(p) << "size=" << corekit::size(p) << '\n';
    }
    return kExitOk;
}

int cmd_catalan(Int k) {
    require(k >= 1, "--k must be at least 1");
    std::cout << corekit::catalan_pair_to_json(corekit::make_catalan_core_pair(k)).dump() << '\n';
    return kExitOk;
}

struct AbacusArgs {
    Int k = 0;
    std::string format = "ascii";
};

int cmd_abacus(const AbacusArgs& a) {
    require(a.k >= 2, "--k must be at least 2");
    const corekit::TAbacus abacus = corekit::kappa_bar_abacus(a.k);
    if (a.format == "json")
        std::cout << corekit::abacus_to_json(abacus).dump() << '\n';
    else
        std::cout << corekit::render_abacus(abacus, a.k - 1);
    return kExitOk;
}

struct QuotientArgs {
    Int t = 0;
    std::optional<std::string> partition;
    std::optional<Int> kappa_pair_k;
    std::string format = "ascii";
};

int cmd_quotient(const QuotientArgs& a) {
    require(a.partition.has_value() != a.kappa_pair_k.has_value(),
            "give exactly one of --partition or --kappa-pair");
    corekit::Partition p;
    Int t = a.t;
    if (a.kappa_pair_k) {
        require(*a.kappa_pair_k >= 1, "--kappa-pair must be at least 1");
        p = corekit::kappa_pair(*a.kappa_pair_k);
        if (t == 0) t = 2 * *a.kappa_pair_k;
    } else {
        try {
            p = corekit::parse_exponential(*a.partition);
        } catch (const corekit::ParseError& e) {
            throw UsageError(std::string("bad partition: ") + e.what());
        }
    }
    require(t >= 2, "--t must be at least 2");
    const corekit::QuotientDecomposition d = corekit::decompose(p, t);
    if (a.format == "json")
        std::cout << corekit::quotient_to_json(d).dump() << '\n';
    else
        std::cout << corekit::render_quotient(d);
    return kExitOk;
}

int cmd_square(Int m, const corekit::RenderConfig& config) {
    require(m >= 1, "--m must be at least 1");
    std::cout << corekit::render_square_split(corekit::square_split(m), config);
    return kExitOk;
}

struct BijectionArgs {
    Int k = 0;
    std::string mode = "labels";
};

int cmd_bijection(const BijectionArgs& a, const corekit::RenderConfig& config) {
    require(a.k >= 1, "--k must be at least 1");
    const corekit::CellMap map = corekit::build_bijection(a.k);
    if (a.mode == "trace")
        std::cout << corekit::cell_map_to_json(map).dump() << '\n';
    else
        std::cout << corekit::render_cell_map(map, config);
    return kExitOk;
}

struct VerifyArgs {
    Int k_max = 10;
    std::vector<std::string> suites;
    std::uint64_t seed = corekit::kDefaultSeed;
    Int trials = 1000;
    std::optional<Int> max_bound;
};

int cmd_verify(const VerifyArgs& a) {
    require(a.k_max >= 1, "--k-max must be at least 1");
    std::vector<std::string> suites = a.suites;
    if (suites.empty()) suites = {"theorem3", "theorem6", "remarks", "bijection", "eq1", "maximal"};
    const auto limits = enumeration_limits(a.max_bound);

    bool all = true;
    for (const auto& name : suites) {
        corekit::SuiteResult r;
        if (name == "theorem3") r = corekit::sweep_theorem3(a.k_max);
        else if (name == "theorem6") r = corekit::sweep_theorem6(a.k_max);
        else if (name == "remarks") r = corekit::sweep_remarks(a.k_max);
        else if (name == "bijection") r = corekit::sweep_bijection(a.k_max);
        else if (name == "eq1") r = corekit::sweep_eq1(a.seed, a.trials);
        else r = corekit::sweep_maximal(a.k_max, limits);
        std::cout << r.name << ": " << r.passed << '/' << r.total << (r.ok() ? " PASS" : " FAIL") << '\n';
        all = all && r.ok();
    }
    return all ? kExitOk : kExitVerifyFailed;
}

struct EnumerateArgs {
    std::vector<Int> moduli;
    bool list = false;
    std::string format = "ascii";
    std::optional<Int> max_bound;
};

int cmd_enumerate(const EnumerateArgs& a) {
    std::optional<corekit::CoreFamilySpec> spec;
    try {
        spec.emplace(a.moduli);
    } catch (const corekit::InvalidArgument& e) {
        throw UsageError(e.what());
    }
    if (!corekit::has_finitely_many(*spec)) {
        std::cerr << "infinitely many simultaneous cores (gcd=" << spec->gcd()
                  << "); a family is finite only when the gcd of its moduli is 1\n";
        return kExitInfinite;
    }
    const auto result = corekit::enumerate_cores(*spec, enumeration_limits(a.max_bound));
    if (a.format == "json") {
        std::cout << corekit::enumeration_to_json(result).dump() << '\n';
        return kExitOk;
    }
    const auto top = result.maximal_cores();
    std::cout << "count=" << result.count() << " max_size=" << result.max_size();
    if (top.size() == 1) {
        std::cout << " max_core=" << corekit::format_exponential(top.front());
    } else {
        std::cout << " max cores: ";
        for (std::size_t i = 0; i < top.size(); ++i)
            std::cout << (i ? "," : "") << corekit::format_exponential(top[i]);
    }
    std::cout << '\n';
    if (a.list)
        for (const auto& c : result.cores) std::cout << corekit::format_exponential(c) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"corekit: t-cores, abaci, simultaneous cores and the factor-4 bijection"};
    app.require_subcommand(1);

    corekit::RenderConfig render;
    bool unicode = false;
    auto add_render_flags = [&](CLI::App* sub) {
        sub->add_option("--width", render.cell_width, "characters per cell")->check(CLI::PositiveNumber);
        sub->add_flag("--unicode", unicode, "draw Part 1 cells as a bullet");
    };

    KappaArgs kappa;
    auto* kappa_cmd = app.add_subcommand("kappa", "draw kappa_pair(k) or kappa_triple(k)");
    kappa_cmd->add_option("--k", kappa.k)->required();
    kappa_cmd->add_option("--family", kappa.family)->check(CLI::IsMember({"pair", "triple"}));
    kappa_cmd->add_option("--format", kappa.format)->check(CLI::IsMember({"ascii", "json"}));

    Int catalan_k = 0;
    auto* catalan_cmd = app.add_subcommand("catalan", "both maximal cores and the triple abacus as JSON");
    catalan_cmd->add_option("--k", catalan_k)->required();

    AbacusArgs abacus;
    auto* abacus_cmd = app.add_subcommand("abacus", "draw the 2k-abacus of kappa_triple(k)");
    abacus_cmd->add_option("--k", abacus.k)->required();
    abacus_cmd->add_option("--format", abacus.format)->check(CLI::IsMember({"ascii", "json"}));

    QuotientArgs quotient;
    auto* quotient_cmd = app.add_subcommand("quotient", "t-core and t-quotient of a partition");
    quotient_cmd->add_option("--t", quotient.t);
    quotient_cmd->add_option("--partition", quotient.partition, "exponential notation, e.g. (5,3^2,1)");
    quotient_cmd->add_option("--kappa-pair", quotient.kappa_pair_k, "use kappa_pair(K); t defaults to 2K");
    quotient_cmd->add_option("--format", quotient.format)->check(CLI::IsMember({"ascii", "json"}));

    Int square_m = 0;
    auto* square_cmd = app.add_subcommand("square", "split an m x m square into two staircases");
    square_cmd->add_option("--m", square_m)->required();
    add_render_flags(square_cmd);

    BijectionArgs bijection;
    auto* bijection_cmd = app.add_subcommand("bijection", "labelled dissection or JSON cell map");
    bijection_cmd->add_option("--k", bijection.k)->required();
    bijection_cmd->add_option("--mode", bijection.mode)->check(CLI::IsMember({"labels", "trace"}));
    add_render_flags(bijection_cmd);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "run property sweeps");
    verify_cmd->add_option("--k-max", verify.k_max);
    verify_cmd->add_option("--suites", verify.suites)
        ->delimiter(',')
        ->check(CLI::IsMember({"theorem3", "theorem6", "remarks", "bijection", "eq1", "maximal"}));
    verify_cmd->add_option("--seed", verify.seed);
    verify_cmd->add_option("--trials", verify.trials)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-bound", verify.max_bound);

    EnumerateArgs enumerate;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list simultaneous cores for the given moduli");
    enumerate_cmd->add_option("moduli", enumerate.moduli)->required();
    enumerate_cmd->add_flag("--list", enumerate.list, "print every core");
    enumerate_cmd->add_option("--format", enumerate.format)->check(CLI::IsMember({"ascii", "json"}));
    enumerate_cmd->add_option("--max-bound", enumerate.max_bound);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (unicode) render.part1_glyph = "•";

    try {
        if (*kappa_cmd) return cmd_kappa(kappa);
        if (*catalan_cmd) return cmd_catalan(catalan_k);
        if (*abacus_cmd) return cmd_abacus(abacus);
        if (*quotient_cmd) return cmd_quotient(quotient);
        if (*square_cmd) return cmd_square(square_m, render);
        if (*bijection_cmd) return cmd_bijection(bijection, render);
        if (*verify_cmd) return cmd_verify(verify);
        if (*enumerate_cmd) return cmd_enumerate(enumerate);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const corekit::InfiniteFamily& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfinite;
    } catch (const corekit::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
