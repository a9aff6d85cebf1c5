// Command line front end: batch computations and verification suites with
// machine-readable output.  JSON documents carry "schema":"1"; exit codes
// are 0 for success or match, 1 for a verification mismatch, 2 for usage
// errors.
#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "ssv/acceptance.hpp"
#include "ssv/serialize.hpp"

namespace {

using ssv::Json;

struct Flags {
    std::string family = "B";
    int n = 1;
    long m = 1;
    long k = 1;
    long depth = 4;
    int trials = 20;
    unsigned long long seed = 20240817ULL;
    std::string method = "h";
    std::string format = "json";
};

void emit(const Flags& fl, Json doc, const std::string& text) {
    if (fl.format == "text") {
        std::cout << text << "\n";
    } else {
        doc["schema"] = "1";
        std::cout << doc.dump() << "\n";
    }
}

ssv::AlgebraSpec spec_of(const Flags& fl) {
    return ssv::AlgebraSpec(ssv::parse_family(fl.family), fl.n);
}

ssv::GlKind kind_of(const Flags& fl) {
    if (fl.method == "a" || fl.method == "antisym") return ssv::GlKind::A;
    if (fl.method == "h" || fl.method == "sym") return ssv::GlKind::H;
    throw ssv::ParseError("unknown method '" + fl.method + "' (expected a or h)");
}

// The full phi polynomial for any family; gl dispatches on the method flag.
ssv::TauPolynomial phi_of(const Flags& fl) {
    ssv::AlgebraSpec g = spec_of(fl);
    if (g.is_gl()) return ssv::gl_phi_coefficients(g.matrix_size(), fl.m, kind_of(fl));
    return ssv::phi_coefficients(g, fl.m);
}

std::string tau_poly_text(const ssv::TauPolynomial& p) {
    std::string out;
    for (size_t a = 0; a < p.coeffs.size(); ++a) {
        if (!out.empty()) out += "\n";
        out += "tau^" + std::to_string(p.degree() - static_cast<long>(a)) + ": " +
               p.coeffs[a].str();
    }
    return out;
}

// The W-algebra generator family at (f, n), subscripts 2..m (1..m for gl);
// type D uses the pseudo-differential coefficients and gains the pfaffian
// generator at subscript n.
std::vector<std::pair<long, ssv::MuPoly>> generator_list(ssv::Family f, int n, long m) {
    using ssv::Family;
    std::vector<std::pair<long, ssv::MuPoly>> out;
    if (f == Family::D) {
        auto e = ssv::pseudo_diff_miura_D(n, m);
        for (long k = 2; k < static_cast<long>(e.size()); ++k) out.push_back({k, e[k]});
        if (m >= n) out.push_back({n, ssv::pfaffian_generator(n)});
        return out;
    }
    long len = f == Family::A ? n : (f == Family::B ? 2 * n + 1 : 2 * n);
    auto e = ssv::miura_generators(f, n, std::min(m, len));
    for (long k = f == Family::A ? 1 : 2; k < static_cast<long>(e.size()); ++k)
        out.push_back({k, e[k]});
    return out;
}

Json outcome_json(const ssv::AcceptanceOutcome& o) {
    return Json{{"name", o.name}, {"pass", o.pass}, {"detail", o.detail}, {"millis", o.millis}};
}

std::string outcome_text(const ssv::AcceptanceOutcome& o) {
    return std::string(o.pass ? "pass" : "FAIL") + "  " + o.name + "  " +
           std::to_string(o.millis) + "ms  " + o.detail;
}

int run_verify(const Flags& fl, const std::string& suite, bool spec_given) {
    using Clock = std::chrono::steady_clock;
    // single identities driven by flags
    auto single = [&](const ssv::VerifyReport& r, long long ms) {
        Json doc = ssv::to_json(r);
        doc["timings"] = Json{{"compute_ms", ms}};
        emit(fl, doc,
             std::string(r.match ? "match" : "MISMATCH") + " (" + std::to_string(ms) +
                 "ms)\nlhs:  " + r.lhs + "\nrhs:  " + r.rhs + "\ndiff: " + r.diff);
        return r.match ? 0 : 1;
    };
    if (suite == "main-theorem") {
        auto t0 = Clock::now();
        ssv::AlgebraSpec g = spec_of(fl);
        ssv::VerifyReport r = g.is_gl() ? ssv::verify_glN_images(g.matrix_size(), fl.m, kind_of(fl))
                                        : ssv::verify_main_theorem(g, fl.m);
        auto t1 = Clock::now();
        return single(r, std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    }
    if (suite == "pfaffian") {
        auto t0 = Clock::now();
        ssv::VerifyReport r = ssv::verify_pfaffian_image(ssv::AlgebraSpec(ssv::Family::D, fl.n));
        auto t1 = Clock::now();
        return single(r, std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    }
    if (suite == "current-algebra" && spec_given) {
        auto t0 = Clock::now();
        ssv::VerifyReport r = ssv::current_algebra_verify(spec_of(fl), fl.m, fl.depth);
        auto t1 = Clock::now();
        return single(r, std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    }
    // acceptance items
    std::vector<ssv::AcceptanceCheck> checks = ssv::acceptance_checks();
    std::vector<ssv::AcceptanceOutcome> ran;
    if (suite == "all") {
        ran = ssv::run_acceptance();
    } else {
        for (const auto& c : checks)
            if (c.name == suite) ran.push_back(ssv::run_check(c));
        if (ran.empty()) {
            std::string names = "all";
            for (const auto& c : checks) names += ", " + c.name;
            throw ssv::ParseError("unknown suite '" + suite + "' (expected one of: " + names +
                                  "; or main-theorem, pfaffian, current-algebra with flags)");
        }
    }
    bool pass = true;
    Json items = Json::array();
    std::string text;
    for (const auto& o : ran) {
        pass = pass && o.pass;
        items.push_back(outcome_json(o));
        if (!text.empty()) text += "\n";
        text += outcome_text(o);
    }
    emit(fl, Json{{"pass", pass}, {"items", items}}, text);
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Segal-Sugawara vector toolkit"};
    app.require_subcommand(1);
    Flags fl;

    auto add_spec = [&](CLI::App* c) {
        c->add_option("--family", fl.family, "algebra family: A, B, C or D");
        c->add_option("--n", fl.n, "rank parameter (matrix size for family A)");
    };
    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", fl.format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* symmetrizer = app.add_subcommand("symmetrizer", "Brauer symmetrizer S^(m)");
    add_spec(symmetrizer);
    symmetrizer->add_option("--m", fl.m, "tensor factors");
    add_common(symmetrizer);

    CLI::App* sugawara = app.add_subcommand("sugawara", "Segal-Sugawara vectors");
    CLI::App* phi = sugawara->add_subcommand("phi", "coefficients of tr S^(m)(F+tau)^m");
    add_spec(phi);
    phi->add_option("--m", fl.m, "degree");
    phi->add_option("--method", fl.method, "gl family: a (antisym) or h (sym)");
    add_common(phi);
    sugawara->require_subcommand(1);

    CLI::App* hc = app.add_subcommand("hc", "Harish-Chandra image of the phi polynomial");
    add_spec(hc);
    hc->add_option("--m", fl.m, "degree");
    hc->add_option("--method", fl.method, "gl family: a (antisym) or h (sym)");
    add_common(hc);

    CLI::App* pfaffian = app.add_subcommand("pfaffian", "type D pfaffian vector and its image");
    pfaffian->add_option("--n", fl.n, "rank");
    add_common(pfaffian);

    CLI::App* screen = app.add_subcommand("walg-screen",
                                          "apply all screenings to the generator family");
    add_spec(screen);
    screen->add_option("--m", fl.m, "largest generator subscript");
    add_common(screen);

    CLI::App* miura = app.add_subcommand("miura", "Miura expansion coefficients");
    add_spec(miura);
    miura->add_option("--m", fl.m, "largest subscript");
    add_common(miura);

    CLI::App* chars = app.add_subcommand("characters", "index words of the trace characters");
    CLI::App* count = chars->add_subcommand("count", "number of index words");
    add_spec(count);
    count->add_option("--m", fl.m, "word length");
    add_common(count);
    CLI::App* words = chars->add_subcommand("words", "list the index words");
    add_spec(words);
    words->add_option("--m", fl.m, "word length");
    add_common(words);
    CLI::App* kappa = chars->add_subcommand("kappa", "extended-sum vanishing over random points");
    kappa->add_option("--n", fl.n, "rank");
    kappa->add_option("--trials", fl.trials, "number of random assignments");
    kappa->add_option("--seed", fl.seed, "random seed");
    add_common(kappa);
    chars->require_subcommand(1);

    CLI::App* harmonic = app.add_subcommand("harmonic", "harmonic basis of the m-th component");
    add_spec(harmonic);
    harmonic->add_option("--m", fl.m, "degree");
    add_common(harmonic);

    CLI::App* casimir = app.add_subcommand("casimir", "Harish-Chandra image of the 2k-th Casimir");
    add_spec(casimir);
    casimir->add_option("--k", fl.k, "half degree");
    add_common(casimir);

    CLI::App* verify = app.add_subcommand("verify", "verification suites; 'all' runs every one");
    std::string suite;
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    add_spec(verify);
    verify->add_option("--m", fl.m, "degree");
    verify->add_option("--depth", fl.depth, "loop depth for the current-algebra comparison");
    verify->add_option("--method", fl.method, "gl family: a (antisym) or h (sym)");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (symmetrizer->parsed()) {
            ssv::TensorOperator s =
                ssv::brauer_symmetrizer(spec_of(fl), static_cast<int>(fl.m));
            std::string text = "trace " + s.trace().str();
            for (const auto& [rc, v] : s.entries()) {
                text += "\n";
                for (int x : ssv::decode_multi_index(rc.first, s.matrix_size(), s.factors()))
                    text += std::to_string(x);
                text += " <- ";
                for (int x : ssv::decode_multi_index(rc.second, s.matrix_size(), s.factors()))
                    text += std::to_string(x);
                text += "  " + v.str();
            }
            emit(fl, Json{{"operator", ssv::to_json(s)}, {"trace", s.trace().str()}}, text);
            return 0;
        }
        if (phi->parsed()) {
            ssv::TauPolynomial p = phi_of(fl);
            emit(fl, Json{{"phi", ssv::to_json(p)}}, tau_poly_text(p));
            return 0;
        }
        if (hc->parsed()) {
            ssv::TauPolynomial p = phi_of(fl);
            ssv::Pi0Tau image;
            for (long a = 0; a <= p.degree(); ++a)
                image += ssv::hc_chi(p.coeffs[static_cast<size_t>(a)]) *
                         ssv::Pi0Tau::tau(p.degree() - a);
            emit(fl, Json{{"image", ssv::to_json(image)}, {"image_str", image.str()}},
                 image.str());
            return 0;
        }
        if (pfaffian->parsed()) {
            ssv::UElement e = ssv::pfaffian_ssv(ssv::AlgebraSpec(ssv::Family::D, fl.n));
            ssv::Pi0Tau image = ssv::hc_chi(e);
            emit(fl,
                 Json{{"element", ssv::to_json(e)},
                      {"image", ssv::to_json(image)},
                      {"image_str", image.str()}},
                 "element: " + e.str() + "\nimage:   " + image.str());
            return 0;
        }
        if (screen->parsed()) {
            ssv::Family f = ssv::parse_family(fl.family);
            std::vector<ssv::MuPoly> elems;
            for (const auto& [k, p] : generator_list(f, fl.n, fl.m)) elems.push_back(p);
            ssv::AnnihilationReport rep = ssv::verify_annihilation(f, fl.n, elems);
            emit(fl,
                 Json{{"elements", elems.size()}, {"report", ssv::to_json(rep)}},
                 std::to_string(elems.size()) + " elements: " + rep.str());
            return rep.match ? 0 : 1;
        }
        if (miura->parsed()) {
            ssv::Family f = ssv::parse_family(fl.family);
            Json gens = Json::array();
            std::string text;
            for (const auto& [k, p] : generator_list(f, fl.n, fl.m)) {
                gens.push_back(Json{{"index", k}, {"element", ssv::to_json(p)}});
                if (!text.empty()) text += "\n";
                text += "E_" + std::to_string(k) + " = " + ssv::mu_str(p);
            }
            emit(fl, Json{{"generators", gens}}, text);
            return 0;
        }
        if (count->parsed() || words->parsed()) {
            ssv::CharSum cs = ssv::char_sum(spec_of(fl), fl.m);
            if (count->parsed()) {
                emit(fl, Json{{"count", cs.count}}, "count = " + std::to_string(cs.count));
            } else {
                std::string text = "count = " + std::to_string(cs.count);
                for (const auto& w : cs.words) {
                    text += "\n";
                    for (size_t t = 0; t < w.size(); ++t)
                        text += (t ? " " : "") + std::to_string(w[t]);
                }
                emit(fl, ssv::to_json(cs), text);
            }
            return 0;
        }
        if (kappa->parsed()) {
            bool ok = ssv::kappa_vanishing_check(fl.n, fl.trials, fl.seed);
            emit(fl,
                 Json{{"pass", ok}, {"trials", fl.trials}, {"seed", fl.seed}},
                 std::string(ok ? "pass" : "FAIL") + " (" + std::to_string(fl.trials) +
                     " trials, seed " + std::to_string(fl.seed) + ")");
            return ok ? 0 : 1;
        }
        if (harmonic->parsed()) {
            ssv::AlgebraSpec g = spec_of(fl);
            ssv::HarmonicBasis hb = ssv::harmonic_basis(g, static_cast<int>(fl.m));
            Json basis = Json::array();
            std::string text;
            for (size_t v = 0; v < hb.size(); ++v) {
                Json entry{{"tuple", hb.tuples[v]}};
                std::string line;
                if (g.orthogonal()) {
                    entry["element"] = ssv::to_json(hb.polys[v]);
                    line = ssv::z_str(hb.polys[v]);
                } else {
                    entry["element"] = ssv::to_json(hb.wedges[v]);
                    line = hb.wedges[v].str();
                }
                basis.push_back(std::move(entry));
                if (!text.empty()) text += "\n";
                text += line;
            }
            emit(fl, Json{{"count", hb.size()}, {"basis", basis}}, text);
            return 0;
        }
        if (casimir->parsed()) {
            ssv::MuPoly image = ssv::multiset_image(spec_of(fl), fl.k);
            emit(fl, Json{{"image", ssv::to_json(image)}, {"image_str", ssv::mu_str(image)}},
                 ssv::mu_str(image));
            return 0;
        }
        if (verify->parsed()) {
            bool spec_given = verify->count("--family") > 0;
            return run_verify(fl, suite, spec_given);
        }
    } catch (const ssv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
