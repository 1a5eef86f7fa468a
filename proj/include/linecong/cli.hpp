#pragma once

// Command-line front end. One subcommand per verifiable claim; every
// randomized experiment is reproducible from --seed and reports carry a
// `replay` field with the exact invocation. Exit codes: 0 success, 1
// verification failure (with certificate), 2 usage error, 3 genericity
// exhaustion.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linecong/bracket.hpp"
#include "linecong/coincidence.hpp"
#include "linecong/congruence.hpp"
#include "linecong/errors.hpp"
#include "linecong/report.hpp"
#include "linecong/schubert.hpp"

namespace linecong {

inline constexpr std::uint64_t kDefaultSeed = 24601;
inline constexpr std::uint64_t kDefaultPrime = 10007;
inline constexpr int kMaxSupportedN = 12;

namespace cli_detail {

struct Session {
    int n = 0;
    bool rational = false;
    std::uint64_t prime = kDefaultPrime;
    bool prime_explicit = false;
    std::uint64_t seed = kDefaultSeed;
    std::size_t samples = 100;
    std::size_t trials = 100;
    std::string omega_path;
    std::string out_path;
    std::string format = "json";
    std::string center;
    std::string oracle = "both";
};

inline void check_n(int n) {
    if (n < 2) throw std::invalid_argument("--n must be at least 2");
    if (n > kMaxSupportedN)
        throw std::invalid_argument(
            "--n larger than 12 is rejected: exact enumeration beyond that is not a "
            "desk-scale computation (resource warning)");
}

inline void check_modular(const Session& s) {
    if (s.rational) throw std::invalid_argument("this subcommand requires a prime field");
    checked_prime(s.prime);
    if (s.prime <= static_cast<std::uint64_t>(s.n) + 2)
        throw std::invalid_argument("--prime must exceed n+2");
}

// The tensor for a modular experiment: read from --omega (adopting the
// file's modulus into the session after consistency checks), or generated
// deterministically from the seed.
inline Bracket<Fp> modular_bracket(Session& s) {
    if (s.omega_path.empty()) {
        check_modular(s);
        return random_trace_free(s.n, Fp(0, s.prime), s.seed);
    }
    if (s.rational)
        throw std::invalid_argument("this subcommand requires a prime field");
    std::ifstream in(s.omega_path);
    if (!in) throw std::invalid_argument("cannot open omega file: " + s.omega_path);
    std::string header_line;
    if (!std::getline(in, header_line)) throw parse_error("empty omega file");
    OmegaHeader h = parse_omega_header(header_line);
    if (h.rational)
        throw std::invalid_argument("omega file is over Q; this subcommand needs F_p");
    if (h.n != s.n)
        throw std::invalid_argument("omega file has n=" + std::to_string(h.n) +
                                    ", flags requested n=" + std::to_string(s.n));
    if (s.prime_explicit && h.p != s.prime)
        throw std::invalid_argument("omega file modulus " + std::to_string(h.p) +
                                    " conflicts with --prime " + std::to_string(s.prime));
    s.prime = h.p;
    if (s.prime <= static_cast<std::uint64_t>(s.n) + 2)
        throw std::invalid_argument("omega file modulus must exceed n+2 for sampling");
    return read_omega_entries(in, h.n, Fp(0, h.p));
}

inline std::string replay_string(const std::string& command, const Session& s,
                                 bool with_samples, bool with_trials) {
    std::ostringstream os;
    os << command << " --n " << s.n;
    if (s.rational)
        os << " --rational";
    else
        os << " --prime " << s.prime;
    os << " --seed " << s.seed;
    if (with_samples) os << " --samples " << s.samples;
    if (with_trials) os << " --trials " << s.trials;
    if (!s.omega_path.empty()) os << " --omega " << s.omega_path;
    if (!s.center.empty()) os << " --center " << s.center;
    return os.str();
}

inline void deliver(const Session& s, std::ostream& out, const std::string& text) {
    if (s.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(s.out_path);
    if (!f) throw std::invalid_argument("cannot open output path: " + s.out_path);
    f << text;
}

inline void deliver_report(const Session& s, std::ostream& out, const Json& j) {
    std::ostringstream os;
    emit_report(os, j, s.format);
    deliver(s, out, os.str());
}

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

inline Vec<Fp> parse_center(const std::string& text, int n, std::uint64_t p) {
    Vec<Fp> c;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) c.push_back(Fp::from_signed(std::stoll(item), p));
    if (c.size() != static_cast<std::size_t>(n) + 3)
        throw std::invalid_argument("--center needs n+3 comma-separated integers");
    return c;
}

inline Json plane_json(const Plane<Fp>& pl) {
    Json j;
    Json a = Json::array(), b = Json::array();
    for (const Fp& x : pl.a) a.push_back(x.value());
    for (const Fp& x : pl.b) b.push_back(x.value());
    j["a"] = a;
    j["b"] = b;
    j["plucker"] = coords_string(pl.canonical());
    return j;
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using cli_detail::Session;
    CLI::App app{"exact verification toolkit for line congruences and linear sections of "
                 "Grassmannians"};
    app.require_subcommand(1);
    Session s;
    long long catalan_k = 0;
    int hodge_p = 0, hodge_q = 0;

    auto add_common = [&](CLI::App* cmd, bool needs_n = true) {
        if (needs_n) cmd->add_option("--n", s.n, "dimension parameter n")->required();
        cmd->add_option("--out", s.out_path, "write output to this path instead of stdout");
        cmd->add_option("--format", s.format, "report format")
            ->check(CLI::IsMember({"json", "tsv"}));
    };
    auto add_field = [&](CLI::App* cmd) {
        CLI::Option* prime =
            cmd->add_option("--prime", s.prime, "odd prime modulus (default 10007)")
                ->each([&s](const std::string&) { s.prime_explicit = true; });
        cmd->add_flag("--rational", s.rational, "work over Q instead of F_p")
            ->excludes(prime);
    };
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", s.seed, "64-bit seed (default 24601)");
    };
    auto add_omega = [&](CLI::App* cmd) {
        cmd->add_option("--omega", s.omega_path, "read the tensor from this omega file");
    };

    CLI::App* c_catalan = app.add_subcommand("catalan", "Catalan number c_k");
    c_catalan->add_option("--k", catalan_k, "index k >= 0")->required();
    add_common(c_catalan, false);

    CLI::App* c_moduli = app.add_subcommand("moduli-dim", "moduli dimension (n+3)(n^2-4)/2");
    add_common(c_moduli);

    CLI::App* c_pn = app.add_subcommand("pn-coeffs",
                                        "coefficients of the Euler generating function");
    add_common(c_pn);

    CLI::App* c_euler = app.add_subcommand("euler", "Euler characteristic of the section");
    add_common(c_euler);
    c_euler->add_option("--oracle", s.oracle, "series | schubert | both (default)")
        ->check(CLI::IsMember({"series", "schubert", "both"}));

    CLI::App* c_betti = app.add_subcommand("betti", "middle Betti number b_n");
    add_common(c_betti);

    CLI::App* c_hodge = app.add_subcommand("hodge-low", "Hodge number below the middle");
    add_common(c_hodge);
    c_hodge->add_option("--p", hodge_p, "Hodge index p")->required();
    c_hodge->add_option("--q", hodge_q, "Hodge index q")->required();

    CLI::App* c_dim = app.add_subcommand("dim-sn", "dimension of the trace-free section space");
    add_common(c_dim);
    add_field(c_dim);

    CLI::App* c_gen = app.add_subcommand("gen-omega", "generate a generic trace-free tensor");
    add_common(c_gen);
    add_field(c_gen);
    add_seed(c_gen);

    CLI::App* c_verify = app.add_subcommand(
        "verify-equivalence", "sample the stable-plane family and verify the linear-section "
                              "equivalence pointwise");
    add_common(c_verify);
    add_field(c_verify);
    add_seed(c_verify);
    add_omega(c_verify);
    c_verify->add_option("--samples", s.samples, "number of sampled points (default 100)");

    CLI::App* c_order = app.add_subcommand("congruence-order",
                                           "order statistics of the line congruence");
    add_common(c_order);
    add_field(c_order);
    add_seed(c_order);
    add_omega(c_order);
    c_order->add_option("--trials", s.trials, "number of random centers (default 100)");

    CLI::App* c_det = app.add_subcommand("det-hypersurface",
                                         "determinantal image hypersurface of degree n+1");
    add_common(c_det);
    add_field(c_det);
    add_seed(c_det);
    add_omega(c_det);

    CLI::App* c_sample = app.add_subcommand("sample-y", "sample stable planes");
    add_common(c_sample);
    add_field(c_sample);
    add_seed(c_sample);
    add_omega(c_sample);
    c_sample->add_option("--samples", s.samples, "number of planes (default 100)");

    CLI::App* c_line = app.add_subcommand("change-line",
                                          "re-split with a new projection center line");
    add_common(c_line);
    add_field(c_line);
    add_seed(c_line);
    add_omega(c_line);
    c_line->add_option("--samples", s.samples, "number of sampled points (default 100)");
    c_line->add_option("--center", s.center,
                       "comma-separated coordinates of the new center (n+3 values)");

    std::vector<const char*> argv;
    argv.push_back("linecong");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        using namespace cli_detail;
        if (app.got_subcommand(c_catalan)) {
            if (catalan_k < 0) throw std::invalid_argument("--k must be non-negative");
            deliver(s, out, catalan(catalan_k).str() + "\n");
            return 0;
        }
        check_n(s.n);
        if (app.got_subcommand(c_moduli)) {
            deliver(s, out, moduli_dimension(s.n).str() + "\n");
            return 0;
        }
        if (app.got_subcommand(c_pn)) {
            Json j;
            j["command"] = "pn-coeffs";
            j["n"] = s.n;
            Json coeffs = Json::array();
            Int e = 0;
            std::vector<Int> p = pn_coefficients(s.n);
            for (int k = 0; k < static_cast<int>(p.size()); ++k) {
                coeffs.push_back(p[k].str());
                e += p[k] * catalan(k);
            }
            j["coeffs"] = coeffs;
            j["eulerFromSeries"] = e.str();
            deliver_report(s, out, j);
            return 0;
        }
        if (app.got_subcommand(c_euler)) {
            if (s.oracle == "series") {
                deliver(s, out, euler_series(s.n).str() + "\n");
                return 0;
            }
            if (s.oracle == "schubert") {
                deliver(s, out, euler_schubert(s.n).str() + "\n");
                return 0;
            }
            Int from_series = euler_series(s.n);
            Int from_schubert = euler_schubert(s.n);
            if (from_series == from_schubert) {
                deliver(s, out, from_series.str() + "\n");
                return 0;
            }
            Json j;
            j["command"] = "euler";
            j["n"] = s.n;
            j["mismatch"] = true;
            j["eulerFromSeries"] = from_series.str();
            j["eulerFromSchubert"] = from_schubert.str();
            j["replay"] = "euler --n " + std::to_string(s.n) + " --oracle both";
            deliver_report(s, out, j);
            return 1;
        }
        if (app.got_subcommand(c_betti)) {
            deliver(s, out, middle_betti(s.n).str() + "\n");
            return 0;
        }
        if (app.got_subcommand(c_hodge)) {
            deliver(s, out, hodge_low(s.n, hodge_p, hodge_q).str() + "\n");
            return 0;
        }
        if (app.got_subcommand(c_dim)) {
            std::size_t dim;
            if (s.rational) {
                dim = trace_free_dimension(s.n, Rational(0));
            } else {
                check_modular(s);
                dim = trace_free_dimension(s.n, Fp(0, s.prime));
            }
            deliver(s, out, std::to_string(dim) + "\n");
            return 0;
        }
        if (app.got_subcommand(c_gen)) {
            std::ostringstream os;
            if (s.rational) {
                Bracket<Rational> w = random_trace_free(s.n, Rational(0), s.seed);
                write_omega_header(os, s.n, true, 0, s.seed);
                write_omega_entries(os, w);
            } else {
                check_modular(s);
                Bracket<Fp> w = random_trace_free(s.n, Fp(0, s.prime), s.seed);
                write_omega_header(os, s.n, false, s.prime, s.seed);
                write_omega_entries(os, w);
            }
            deliver(s, out, os.str());
            return 0;
        }

        // The remaining subcommands are sampling experiments over F_p;
        // modular_bracket validates the field (flags or omega file header).
        Stopwatch timer;
        if (app.got_subcommand(c_verify)) {
            Bracket<Fp> w = modular_bracket(s);
            EquivalenceReport rep = verify_equivalence(w, s.samples, s.seed);
            Json j;
            j["command"] = "verify-equivalence";
            j["n"] = s.n;
            j["p"] = s.prime;
            j["seed"] = s.seed;
            j["samples"] = rep.samples;
            j["passes"] = rep.passes;
            j["failures"] = rep.failures;
            j["draws"] = rep.draws;
            j["rootlessDraws"] = rep.rootless_draws;
            j["degenerateDraws"] = rep.degenerate_draws;
            j["firstFailureCertificate"] =
                rep.first_failure ? Json(*rep.first_failure) : Json(nullptr);
            j["seedMixing"] = std::string(kSeedMixing);
            j["replay"] = replay_string("verify-equivalence", s, true, false);
            j["elapsedMs"] = timer.ms();
            deliver_report(s, out, j);
            return rep.failures == 0 ? 0 : 1;
        }
        if (app.got_subcommand(c_order)) {
            Bracket<Fp> w = modular_bracket(s);
            OrderReport rep = order_statistic(w, s.trials, s.seed);
            Json j;
            j["command"] = "congruence-order";
            j["n"] = s.n;
            j["p"] = s.prime;
            j["seed"] = s.seed;
            j["trials"] = rep.trials;
            j["expectedOrder"] = s.n + 1;
            j["allAlgebraicCountsCorrect"] = rep.all_algebraic_counts_correct;
            j["squarefreeCount"] = rep.squarefree_count;
            Json hist = Json::object();
            for (const auto& [lines, freq] : rep.rational_histogram)
                hist[std::to_string(lines)] = freq;
            j["rationalLineHistogram"] = hist;
            j["seedMixing"] = std::string(kSeedMixing);
            j["replay"] = replay_string("congruence-order", s, false, true);
            j["elapsedMs"] = timer.ms();
            deliver_report(s, out, j);
            return rep.all_algebraic_counts_correct ? 0 : 1;
        }
        if (app.got_subcommand(c_det)) {
            if (s.n > 8)
                throw std::invalid_argument(
                    "det-hypersurface beyond n=8 exceeds desk-scale symbolic computation "
                    "(resource warning)");
            Bracket<Fp> w = modular_bracket(s);
            Hypersurface<Fp> z = determinantal_hypersurface(w);
            if (s.format == "json") {
                Json j;
                j["command"] = "det-hypersurface";
                j["n"] = s.n;
                j["p"] = s.prime;
                j["seed"] = s.seed;
                j["degree"] = *z.equation.degree();
                j["termCount"] = z.equation.terms().size();
                Json terms = Json::array();
                for (const auto& [e, c] : z.equation.terms()) {
                    Json t;
                    Json exps = Json::array();
                    for (auto x : e) exps.push_back(static_cast<int>(x));
                    t["exponents"] = exps;
                    t["coeff"] = c.value();
                    terms.push_back(t);
                }
                j["terms"] = terms;
                j["replay"] = replay_string("det-hypersurface", s, false, false);
                j["elapsedMs"] = timer.ms();
                deliver_report(s, out, j);
            } else {
                std::ostringstream os;
                write_hypersurface(os, z, s.prime);
                deliver(s, out, os.str());
            }
            return 0;
        }
        if (app.got_subcommand(c_sample)) {
            Bracket<Fp> w = modular_bracket(s);
            SampledPlanes sampled = sample_stable_planes(w, s.samples, s.seed);
            Json j;
            j["command"] = "sample-y";
            j["n"] = s.n;
            j["p"] = s.prime;
            j["seed"] = s.seed;
            j["samples"] = sampled.planes.size();
            j["draws"] = sampled.draws;
            j["rootlessDraws"] = sampled.rootless_draws;
            j["degenerateDraws"] = sampled.degenerate_draws;
            Json planes = Json::array();
            for (const Plane<Fp>& pl : sampled.planes) planes.push_back(cli_detail::plane_json(pl));
            j["planes"] = planes;
            j["seedMixing"] = std::string(kSeedMixing);
            j["replay"] = replay_string("sample-y", s, true, false);
            j["elapsedMs"] = timer.ms();
            deliver_report(s, out, j);
            return 0;
        }
        if (app.got_subcommand(c_line)) {
            Bracket<Fp> w = modular_bracket(s);
            Vec<Fp> center;
            bool user_center = !s.center.empty();
            if (user_center) {
                center = parse_center(s.center, s.n, s.prime);
            } else {
                Rng rng(mix_seed(s.seed, 0xC0FFEEull));
                center = random_vector(w.dim(), Fp(0, s.prime), rng);
                center.push_back(Fp(1, s.prime));
            }
            ChangeLineReport rep = change_line(w, center, s.samples, s.seed);
            Json j;
            j["command"] = "change-line";
            j["n"] = s.n;
            j["p"] = s.prime;
            j["seed"] = s.seed;
            Json cj = Json::array();
            for (const Fp& x : center) cj.push_back(x.value());
            j["center"] = cj;
            j["classesDiffer"] = rep.classes_differ;
            j["samples"] = rep.samples;
            j["passes"] = rep.passes;
            j["failures"] = rep.failures;
            j["firstFailureCertificate"] =
                rep.first_failure ? Json(*rep.first_failure) : Json(nullptr);
            j["seedMixing"] = std::string(kSeedMixing);
            j["replay"] = replay_string("change-line", s, true, false);
            j["elapsedMs"] = timer.ms();
            deliver_report(s, out, j);
            bool ok = rep.failures == 0 && (user_center || rep.classes_differ);
            return ok ? 0 : 1;
        }
        err << "no subcommand executed\n";
        return 2;
    } catch (const genericity_error& e) {
        err << "genericity exhaustion: " << e.what() << "\n";
        return 3;
    } catch (const center_error& e) {
        err << "center error: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const field_error& e) {
        err << "field error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace linecong
