#include "wps/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

namespace {

struct RawArgs {
    std::string chi, omega, sigma, theory = "integral", format = "text", route = "thom",
                only;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    int truncation = 0;
    bool has_seed = false, has_count = false, has_truncation = false;
};

wps::Theory parse_theory(const std::string &s)
{
    if (s == "integral")
        return wps::Theory::integral;
    if (s == "ktheory")
        return wps::Theory::ktheory;
    if (s == "generic")
        return wps::Theory::generic;
    throw wps::invalid_input("unknown theory '" + s + "' (integral | ktheory | generic)");
}

int run(const std::string &command, const RawArgs &raw)
{
    wps::Request req;
    req.command = command;
    try {
        if (!raw.chi.empty())
            req.chi = wps::WeightVector::parse(raw.chi);
        if (!raw.omega.empty())
            req.omega = wps::WeightVector::parse(raw.omega);
        if (!raw.sigma.empty())
            req.sigma = wps::WeightVector::parse(raw.sigma);
        req.theory = parse_theory(raw.theory);
        if (raw.format == "json")
            req.json = true;
        else if (raw.format != "text")
            throw wps::invalid_input("unknown format '" + raw.format + "' (text | json)");
        req.route = raw.route;
        if (raw.has_seed)
            req.seed = raw.seed;
        if (raw.has_count)
            req.count = raw.count;
        if (raw.has_truncation)
            req.truncation = raw.truncation;
        if (!raw.only.empty())
            req.only = raw.only;
    } catch (const wps::invalid_input &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    wps::CommandResult res = wps::dispatch(req);
    if (!res.err.empty())
        std::cerr << res.err;
    if (!res.out.empty())
        std::cout << res.out;
    return res.status;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"exact cohomology and homology of weighted projective spaces"};
    app.require_subcommand(1);

    RawArgs raw;
    auto add_common = [&](CLI::App *cmd, bool needs_chi) {
        auto *chi = cmd->add_option("--chi", raw.chi, "weight vector, e.g. 3,4,5");
        if (needs_chi)
            chi->required();
        cmd->add_option("--format", raw.format, "output format: text | json");
    };
    auto add_theory = [&](CLI::App *cmd) {
        cmd->add_option("--theory", raw.theory, "coefficients: integral | ktheory | generic");
        cmd->add_option("--truncation", raw.truncation,
                        "generation bound for the generic coefficient ring")
            ->each([&](const std::string &) { raw.has_truncation = true; });
    };

    add_common(app.add_subcommand("invariants", "gcd/lcm, divisibility class, l_j and m_j"),
               true);
    add_common(app.add_subcommand("lens",
                                  "cohomology of the weighted lens space L(chi_n; chi')"),
               true);
    auto *pres = app.add_subcommand(
        "presentation", "iterated-Thom presentation of E*(P(chi)) for divisive chi");
    add_common(pres, true);
    add_theory(pres);
    add_common(app.add_subcommand("kawasaki", "Kawasaki's integral model of H*(P(chi))"),
               true);
    auto *reas = app.add_subcommand(
        "reassemble", "prime-by-prime reassembly of E*(P(chi)) inside E*(CP^n)");
    add_common(reas, true);
    add_theory(reas);
    auto *hom = app.add_subcommand("homology", "homology coalgebra E_*(P(chi))");
    add_common(hom, true);
    add_theory(hom);
    hom->add_option("--route", raw.route,
                    "thom (dualize the presentation) | assemble (K-theory intersection)");
    auto *maps = app.add_subcommand("maps", "p-primary decomposition and power-map calculus");
    add_common(maps, true);
    maps->add_option("--omega", raw.omega, "source weights of e(chi/omega)");
    maps->add_option("--sigma", raw.sigma, "middle weights for the composition check");
    auto *ver = app.add_subcommand("verify", "run the exact property suite");
    add_common(ver, false);
    ver->add_option("--seed", raw.seed, "seed for the deterministic sampler")
        ->each([&](const std::string &) { raw.has_seed = true; });
    ver->add_option("--count", raw.count, "number of random weight vectors")
        ->each([&](const std::string &) { raw.has_count = true; });
    ver->add_option("--only", raw.only, "run a single named property");

    CLI11_PARSE(app, argc, argv);
    return run(app.get_subcommands().front()->get_name(), raw);
}
