#include "orelab/scenario.hpp"

#include "orelab/element_io.hpp"
#include "orelab/error.hpp"
#include "orelab/gaussian.hpp"
#include "orelab/ideal.hpp"
#include "orelab/prng.hpp"
#include "orelab/radical.hpp"
#include "orelab/ring_kinds.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace orelab {

using nlohmann::json;

namespace {

struct Run {
    ScenarioReport& report;

    void check(std::string description, bool ok, std::string witness = {}) {
        report.checks.push_back({std::move(description), ok, ok ? "" : std::move(witness)});
    }
    void check(std::string description, const CheckResult& res) {
        check(std::move(description), res.ok, res.witness);
    }
    bool all_ok() const {
        return std::all_of(report.checks.begin(), report.checks.end(),
                           [](const CheckRecord& c) { return c.ok; });
    }
};

int param_int(const json& p, const char* key, int fallback) {
    return p.contains(key) ? p.at(key).get<int>() : fallback;
}

/// Scenario sampling default, overridable by bounds.samples.
int sampling_default(const ScenarioConfig& cfg, int fallback) {
    return cfg.bounds.samples > 0 ? cfg.bounds.samples : fallback;
}

std::string set_to_string(const Ring& ring, const std::vector<RingElement>& elems) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) out << ", ";
        out << ring.format(elems[i]);
    }
    out << '}';
    return out.str();
}

std::vector<RingElement> parse_element_set(const RingPtr& ring, const json& arr) {
    std::vector<RingElement> out;
    for (const auto& e : arr) out.push_back(element_from_json(ring, e));
    std::sort(out.begin(), out.end(), ElementLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// scenario bodies; the verified context and seeded streams come from the
// shared prologue

void run_axioms(const ScenarioConfig& cfg, const OreContextPtr& ctx, Run& run) {
    const Ring& R = *ctx->ring;
    const int triples = param_int(cfg.params, "triples", sampling_default(cfg, 200));
    SplitMix64 rng(SplitMix64::mix(cfg.seed, 2));
    bool add_assoc = true, mul_assoc = true, distrib = true;
    std::string w1, w2, w3;
    for (int i = 0; i < triples; ++i) {
        const RingElement a = R.random_element(rng);
        const RingElement b = R.random_element(rng);
        const RingElement c = R.random_element(rng);
        if (add_assoc && R.add(R.add(a, b), c) != R.add(a, R.add(b, c))) {
            add_assoc = false;
            w1 = "(" + R.format(a) + ", " + R.format(b) + ", " + R.format(c) + ")";
        }
        if (mul_assoc && R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c))) {
            mul_assoc = false;
            w2 = "(" + R.format(a) + ", " + R.format(b) + ", " + R.format(c) + ")";
        }
        if (distrib && (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)) ||
                        R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c)))) {
            distrib = false;
            w3 = "(" + R.format(a) + ", " + R.format(b) + ", " + R.format(c) + ")";
        }
    }
    const std::string on = " on " + std::to_string(triples) + " seeded triples";
    run.check("additive associativity" + on, add_assoc, w1);
    run.check("multiplicative associativity" + on, mul_assoc, w2);
    run.check("distributivity" + on, distrib, w3);
}

void run_qleibniz(const ScenarioConfig& cfg, const OreContextPtr& ctx, Run& run) {
    const int max_k = param_int(cfg.params, "max_k", 10);
    const int samples = param_int(cfg.params, "samples", sampling_default(cfg, 100));
    SplitMix64 rng(SplitMix64::mix(cfg.seed, 2));

    // Gaussian table identities up to 12: Pascal boundary and symmetry
    {
        GaussianTable t(12);
        bool ok = true;
        for (int k = 0; k <= 12 && ok; ++k) {
            for (int j = 0; j <= k && ok; ++j) {
                ok = t.poly(k, j) == t.poly(k, k - j);
            }
        }
        run.check("Gaussian symmetry C(k,j) = C(k,k-j) for k <= 12", ok);

        // root-of-unity collapse when q has finite multiplicative order
        if (ctx->qskew) {
            const Ring& F = *ctx->qskew->q.owner();
            const RingElement q = ctx->qskew->q;
            int order = 0;
            RingElement qp = q;
            for (int m = 1; m <= 16; ++m) {
                if (qp == F.one()) {
                    order = m;
                    break;
                }
                qp = F.mul(qp, q);
            }
            if (order > 0) {
                bool collapse = true;
                std::string witness;
                for (int k = 0; k * order <= 12 && collapse; ++k) {
                    for (int j = 0; j <= k && collapse; ++j) {
                        const RingElement lhs = q_binomial(k * order, j * order, q);
                        const RingElement rhs = F.from_integer(t.eval_at_one(k, j));
                        if (lhs != rhs) {
                            collapse = false;
                            witness = "C(" + std::to_string(k * order) + "," +
                                      std::to_string(j * order) + ")_q = " + F.format(lhs) +
                                      ", C(k,j) = " + F.format(rhs);
                        }
                    }
                }
                run.check("root-of-unity collapse C(km,jm)_q = C(k,j), q of order " +
                              std::to_string(order),
                          collapse, witness);
            }
        }
    }

    for (int k = 0; k <= max_k; ++k) {
        bool ok = true;
        std::string witness;
        for (int i = 0; i < samples && ok; ++i) {
            const RingElement r = ctx->ring->random_element(rng);
            const OrePoly closed = q_leibniz(k, r, ctx);
            const OrePoly iterated = x_power_mul(k, OrePoly::constant(ctx, r));
            if (closed != iterated) {
                ok = false;
                witness = "q_leibniz != iterated relation at r = " + ctx->ring->format(r);
                break;
            }
            if (k <= 16 && word_expansion(k, r, ctx) != iterated) {
                ok = false;
                witness = "word expansion != iterated relation at r = " + ctx->ring->format(r);
            }
        }
        run.check("x^" + std::to_string(k) + "·r: closed form = iterated = words on " +
                      std::to_string(samples) + " samples",
                  ok, witness);
    }
}

void run_associativity(const ScenarioConfig& cfg, const OreContextPtr& ctx, Run& run) {
    const int triples = param_int(cfg.params, "triples", sampling_default(cfg, 500));
    const int max_deg = param_int(cfg.params, "max_deg", 4);
    SplitMix64 rng(SplitMix64::mix(cfg.seed, 2));
    bool assoc = true, distrib = true;
    std::string w1, w2;
    for (int i = 0; i < triples; ++i) {
        const OrePoly f = random_poly(ctx, rng, max_deg);
        const OrePoly g = random_poly(ctx, rng, max_deg);
        const OrePoly h = random_poly(ctx, rng, max_deg);
        if (assoc && ore_mul(ore_mul(f, g), h) != ore_mul(f, ore_mul(g, h))) {
            assoc = false;
            w1 = "f = " + f.str() + ", g = " + g.str() + ", h = " + h.str();
        }
        if (distrib && (ore_mul(f, g + h) != ore_mul(f, g) + ore_mul(f, h) ||
                        ore_mul(f + g, h) != ore_mul(f, h) + ore_mul(g, h))) {
            distrib = false;
            w2 = "f = " + f.str() + ", g = " + g.str() + ", h = " + h.str();
        }
    }
    const std::string on = " on " + std::to_string(triples) + " seeded triples";
    run.check("associativity (fg)h = f(gh)" + on, assoc, w1);
    run.check("distributivity" + on, distrib, w2);
}

void run_sigma_star(const ScenarioConfig& cfg, const OreContextPtr& ctx, Run& run) {
    const int pairs = param_int(cfg.params, "pairs", sampling_default(cfg, 200));
    const int max_deg = param_int(cfg.params, "max_deg", 4);
    SplitMix64 rng(SplitMix64::mix(cfg.seed, 2));
    bool mult = true, add = true, inverse = true;
    std::string w1, w2, w3;
    for (int i = 0; i < pairs; ++i) {
        const OrePoly f = random_poly(ctx, rng, max_deg);
        const OrePoly g = random_poly(ctx, rng, max_deg);
        if (mult && sigma_star(ore_mul(f, g)) != ore_mul(sigma_star(f), sigma_star(g))) {
            mult = false;
            w1 = "f = " + f.str() + ", g = " + g.str();
        }
        if (add && sigma_star(f + g) != sigma_star(f) + sigma_star(g)) {
            add = false;
            w2 = "f = " + f.str() + ", g = " + g.str();
        }
        if (inverse && (sigma_star_inverse(sigma_star(f)) != f ||
                        sigma_star(sigma_star_inverse(f)) != f)) {
            inverse = false;
            w3 = "f = " + f.str();
        }
    }
    const std::string on = " on " + std::to_string(pairs) + " seeded pairs";
    run.check("sigma* multiplicativity" + on, mult, w1);
    run.check("sigma* additivity" + on, add, w2);
    run.check("sigma* two-sided inverse" + on, inverse, w3);
}

void run_char_p(const ScenarioConfig& cfg, const OreContextPtr& ctx, Run& run) {
    const int m = cfg.params.at("m").get<int>();
    const int samples = param_int(cfg.params, "samples", sampling_default(cfg, 200));
    SplitMix64 rng(SplitMix64::mix(cfg.seed, 2));
    bool ok = true;
    std::string witness;
    int done = 0;
    for (int i = 0; i < samples && ok; ++i) {
        const RingElement a = ctx->ring->random_element(rng);
        try {
            const CheckResult res = check_central_commutation(a, m, ctx);
            ok = res.ok;
            witness = res.witness;
        } catch (const PreconditionError& e) {
            ok = false;
            witness = e.what();
        }
        ++done;
    }
    run.check("x^{m p^m} commutes with " + std::to_string(done) + " sampled elements (m = " +
                  std::to_string(m) + ")",
              ok, witness);
}

void run_geometric(const ScenarioConfig& cfg, const OreContextPtr& ctx, Run& run) {
    const RingElement a = element_from_json(ctx->ring, cfg.params.at("a"));
    const int k = cfg.params.at("k").get<int>();
    const Ring& R = *ctx->ring;

    const auto index = nilpotence_index(a);
    run.check("a nilpotent", index.has_value(),
              index ? "" : R.format(a) + " has no vanishing power within bound");
    if (!index) return;

    RadicalBounds bounds{cfg.bounds.degree, cfg.bounds.terms};
    try {
        const OrePoly g = geometric_quasi_inverse(a, k, ctx);
        const OrePoly f = OrePoly::monomial(ctx, a, k);
        const OrePoly s = f + g;
        run.check("two-sided quasi-inverse identities, exact",
                  (s + ore_mul(f, g)).is_zero() && (s + ore_mul(g, f)).is_zero());
        run.check("series degree = (nilpotence index - 1)·k",
                  g.is_zero() ? *index == 1
                              : g.degree() == static_cast<int>(*index - 1) * k,
                  "degree " + std::to_string(g.degree()));
        const auto neumann = neumann_quasi_inverse(f, bounds);
        run.check("agrees with the Neumann route",
                  neumann.found() && *neumann.inverse == g,
                  neumann.found() ? "outputs differ" : "Neumann route did not terminate");
    } catch (const PreconditionError& e) {
        run.check("geometric construction preconditions", false, e.what());
    }
}

void run_thm31(const ScenarioConfig& cfg, const OreContextPtr& ctx, Run& run) {
    const RingElement a = element_from_json(ctx->ring, cfg.params.at("a"));
    const int n = cfg.params.at("n").get<int>();
    RadicalBounds bounds{cfg.bounds.degree, cfg.bounds.terms};

    const OrePoly axn = OrePoly::monomial(ctx, a, n);
    const auto res = neumann_quasi_inverse(axn, bounds);
    run.check("a·x^n has a terminating Neumann series", res.found(), res.note);
    if (!res.found()) return;
    const OrePoly& f = *res.inverse;

    const bool fallback = cfg.params.contains("exhaustive_fallback") &&
                          cfg.params.at("exhaustive_fallback").get<bool>();
    try {
        const EquationReport equations = thm31_equation_check(a, n, f);
        for (const auto& e : equations.equations) {
            run.check(e.name, e.ok, e.detail);
        }
        const WitnessChain chain = thm31_witness_chain(a, n, f, fallback);
        for (const auto& s : chain.steps) {
            run.check(s.name, s.ok, s.detail);
        }
        run.check("closing product a·r_chain lies in the nilradical",
                  chain.final_in_nilradical);
        run.check("product-length cap unreached", !chain.cap_bound);
    } catch (const PreconditionError& e) {
        run.check("hypotheses", false, e.what());
    }
}

void run_example35(const ScenarioConfig& cfg, const OreContextPtr& ctx, Run& run) {
    const auto& ds = static_cast<const DirectSumShiftRing&>(*ctx->ring);
    std::vector<int> widths = {1, 2, 3};
    if (cfg.params.contains("widths")) {
        widths = cfg.params.at("widths").get<std::vector<int>>();
    }
    const int tuples = param_int(cfg.params, "tuples", sampling_default(cfg, 100));
    const int witness_width =
        param_int(cfg.params, "witness_width", *std::max_element(widths.begin(), widths.end()));
    SplitMix64 rng(SplitMix64::mix(cfg.seed, 2));

    const RingElement unit = ds.base()->has_identity() ? ds.base()->one()
                                                       : ds.base()->spanning_set().front();
    auto supported = [&](int w) {
        std::vector<std::int64_t> idx;
        std::vector<RingElement> val;
        for (int i = 0; i < w; ++i) {
            idx.push_back(i);
            val.push_back(unit);
        }
        return ds.make_supported(std::move(idx), std::move(val));
    };

    for (int w : widths) {
        const RingElement a = supported(w);
        bool ok = true;
        std::string witness;
        for (int t = 0; t < tuples && ok; ++t) {
            std::vector<OrePoly> fs;
            for (int i = 0; i < w + 1; ++i) fs.push_back(random_poly(ctx, rng, 2));
            const CheckResult res = example35_check(a, fs);
            ok = res.ok;
            witness = res.witness;
        }
        run.check("width " + std::to_string(w) + ": all " + std::to_string(w + 1) +
                      "-factor products vanish over " + std::to_string(tuples) + " tuples",
                  ok, witness);
    }

    if (cfg.params.contains("witness_factors")) {
        // explicit polynomial literals whose product must survive
        std::vector<OrePoly> fs;
        for (const auto& jf : cfg.params.at("witness_factors")) {
            fs.push_back(poly_from_json(ctx, jf));
        }
        const RingElement a = supported(static_cast<int>(fs.size()));
        run.check("declared " + std::to_string(fs.size()) + "-factor witness is nonzero",
                  !example35_check(a, fs).ok, "the declared witness product vanished");
    }
    if (witness_width > 0) {
        const RingElement a = supported(witness_width);
        bool found = false;
        for (int t = 0; t < 2000 && !found; ++t) {
            std::vector<OrePoly> fs;
            for (int i = 0; i < witness_width; ++i) fs.push_back(random_poly(ctx, rng, 2));
            found = !example35_check(a, fs).ok;
        }
        run.check("width " + std::to_string(witness_width) + ": a nonzero " +
                      std::to_string(witness_width) + "-factor witness exists",
                  found, "no witness within the search budget");
    }
}

void run_iset(const ScenarioConfig& cfg, const OreContextPtr& ctx, Run& run) {
    const int samples = param_int(cfg.params, "samples", sampling_default(cfg, 32));
    RadicalBounds bounds{cfg.bounds.degree, cfg.bounds.terms};
    const ISetReport rep =
        i_set_explore(ctx, bounds, samples, SplitMix64::mix(cfg.seed, 2));

    std::vector<RingElement> members;
    for (const auto& c : rep.candidates) members.push_back(c.element);
    const std::string listing = set_to_string(*ctx->ring, members);

    run.check("candidate set ideal closure (" + listing + ")", rep.ideal_check);
    run.check("sigma(candidate_I) = candidate_I", rep.sigma_invariance);
    run.check("D(candidate_I) within candidate_I", rep.d_stability);

    if (cfg.params.contains("expected")) {
        const auto expected = parse_element_set(ctx->ring, cfg.params.at("expected"));
        run.check("candidate_I matches the expected set", members == expected,
                  "got " + listing + ", expected " + set_to_string(*ctx->ring, expected));
    }
    if (cfg.params.contains("expect_all") && cfg.params.at("expect_all").get<bool>()) {
        run.check("every probed element entered candidate_I",
                  static_cast<int>(rep.candidates.size()) == rep.probed,
                  std::to_string(rep.candidates.size()) + " of " + std::to_string(rep.probed));
    }
}

void run_radical_oracle(const ScenarioConfig& cfg, const OreContextPtr& ctx, Run& run) {
    const RingPtr& ring = ctx->ring;
    const Ideal J = jacobson_radical(ring);
    const Ideal N = nilradical(ring);
    const std::vector<RingElement> Z = center(ring);

    run.check("nilradical = jacobson radical, J = " + J.format(),
              J.elements() == N.elements(), "N = " + N.format());

    const RingPtr semisimple = quotient(ring, J);
    run.check("J(R/J) = 0 after re-computation", jacobson_radical(semisimple).size() == 1);

    struct Expectation {
        const char* key;
        const std::vector<RingElement>* got;
    };
    const std::vector<RingElement>& j_elems = J.elements();
    const std::vector<RingElement>& n_elems = N.elements();
    for (const auto& [key, got] : std::initializer_list<Expectation>{
             {"expected_jacobson", &j_elems},
             {"expected_nilradical", &n_elems},
             {"expected_center", &Z}}) {
        if (!cfg.params.contains(key)) continue;
        const auto expected = parse_element_set(ring, cfg.params.at(key));
        run.check(std::string(key) + " matches", *got == expected,
                  "got " + set_to_string(*ring, *got) + ", expected " +
                      set_to_string(*ring, expected));
    }
}

}  // namespace

namespace {

ScenarioReport run_scenario_impl(const ScenarioConfig& cfg, bool maps_only);

}  // namespace

ScenarioReport run_scenario(const ScenarioConfig& cfg) { return run_scenario_impl(cfg, false); }

ScenarioReport run_map_checks(const ScenarioConfig& cfg) { return run_scenario_impl(cfg, true); }

namespace {

ScenarioReport run_scenario_impl(const ScenarioConfig& cfg, bool maps_only) {
    ScenarioReport report;
    report.name = cfg.name;
    report.seed = cfg.seed;
    Run run{report};
    const auto start = std::chrono::steady_clock::now();

    try {
        const RingPtr ring = make_ring(cfg.ring);
        const AutoPtr sigma = build_automorphism(ring, cfg.sigma);
        const DerivPtr deriv = build_derivation(ring, sigma, cfg.deriv);
        const VerificationSet set = make_verification_set(ring, SplitMix64::mix(cfg.seed, 1));

        run.check("automorphism axioms (" + set.description + ")",
                  check_automorphism(*sigma, set));
        run.check("Leibniz identity D(ab) = sigma(a)D(b) + D(a)b",
                  check_sigma_derivation(*deriv, set));

        std::optional<QSkewCert> cert;
        if (cfg.q) {
            const RingElement q = element_from_string(ring->scalar_field(), *cfg.q);
            const CheckResult res = check_q_skew(*sigma, *deriv, q, set);
            run.check("q-skew identity D sigma = q sigma D (q = " +
                          q.owner()->format(q) + ")",
                      res);
            if (res.ok) cert = QSkewCert{q, set.description};
        }

        if (run.all_ok() && !maps_only) {
            const OreContextPtr ctx = make_ore_context(ring, sigma, deriv, cert);
            if (cfg.kind == "axioms") {
                run_axioms(cfg, ctx, run);
            } else if (cfg.kind == "qleibniz") {
                run_qleibniz(cfg, ctx, run);
            } else if (cfg.kind == "associativity") {
                run_associativity(cfg, ctx, run);
            } else if (cfg.kind == "sigma-star") {
                run_sigma_star(cfg, ctx, run);
            } else if (cfg.kind == "char-p-commutation") {
                run_char_p(cfg, ctx, run);
            } else if (cfg.kind == "geometric-qi") {
                run_geometric(cfg, ctx, run);
            } else if (cfg.kind == "thm31") {
                run_thm31(cfg, ctx, run);
            } else if (cfg.kind == "example35") {
                run_example35(cfg, ctx, run);
            } else if (cfg.kind == "iset") {
                run_iset(cfg, ctx, run);
            } else if (cfg.kind == "radical-oracle") {
                run_radical_oracle(cfg, ctx, run);
            } else {
                throw UsageError("unknown scenario kind " + cfg.kind);
            }
        }
        report.status = run.all_ok() ? "pass" : "fail";
    } catch (const std::exception& e) {
        report.status = "error";
        report.error = e.what();
    }

    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

}  // namespace

std::vector<ScenarioReport> run_scenarios(const std::vector<ScenarioConfig>& configs,
                                          int parallelism) {
    std::vector<ScenarioReport> reports(configs.size());
    if (configs.empty()) return reports;

    const int workers = std::max(1, std::min<int>(parallelism, configs.size()));
    if (workers == 1) {
        for (std::size_t i = 0; i < configs.size(); ++i) reports[i] = run_scenario(configs[i]);
        return reports;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= configs.size()) return;
                reports[i] = run_scenario(configs[i]);
            }
        });
    }
    for (auto& t : pool) t.join();
    return reports;
}

}  // namespace orelab
