// End-to-end acceptance checklist.  Each criterion prints one [PASS]/[FAIL]
// line; the process exits 0 only when every criterion behaves as documented,
// including the known sign defect in the literal adjoint identity (criterion
// 6), which is expected to fail literally while holding after a global sign
// flip of the right side.  See README.md for the analysis.

#include <bit>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <koszul.hpp>

using namespace koszul;

namespace {

struct Criterion {
    int id;
    bool pass;
    std::string text;
};

std::vector<Criterion> results;

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", s);
    return buf;
}

void record(int id, bool pass, const std::string& text) {
    results.push_back({id, pass, text});
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << text
              << "\n";
}

Poly var(uint32_t n, uint32_t k) { return Poly::variable(n, k); }

// ---- criterion 1: nilpotency of dbar, iota_s and dbar_s ----

void criterion_nilpotency() {
    Timer t;
    Rng rng(101);
    std::size_t instances = 0;
    std::string witness;
    for (long rep = 0; rep < 34 && witness.empty(); ++rep)
        for (uint32_t n = 1; n <= 3 && witness.empty(); ++n) {
            SectionContext ctx = random_section(rng, n);
            Form f = random_e_form(rng, ctx);
            ++instances;
            if (!dbar(dbar(f)).is_zero()) witness = "dbar^2";
            if (!iota_s(iota_s(f, ctx), ctx).is_zero()) witness = "iota_s^2";
            if (!dbar_s(dbar_s(f, ctx), ctx).is_zero()) witness = "dbar_s^2";
        }
    double el = t.seconds();
    bool pass = witness.empty() && instances >= 100 && el < 10.0;
    std::string text = "nilpotency dbar^2 = iota_s^2 = dbar_s^2 = 0 on " +
                       std::to_string(instances) + " random section/form instances, n <= 3 (" +
                       secs(el) + ")";
    if (!witness.empty()) text += "; first nonzero square: " + witness;
    if (el >= 10.0) text += "; over the 10s budget";
    record(1, pass, text);
}

// ---- criterion 2: the contraction/transfer anticommutator is the identity ----

void criterion_commutator() {
    Timer t;
    Rng rng(202);
    std::size_t count = 0;
    bool ok = true;
    for (long rep = 0; rep < 17 && ok; ++rep)
        for (uint32_t n = 1; n <= 3 && ok; ++n) {
            SectionContext ctx = random_section(rng, n);
            Form f = random_e_form(rng, ctx);
            ++count;
            ok = iota_s(t_s(f, ctx), ctx) + t_s(iota_s(f, ctx), ctx) == f;
        }
    double el = t.seconds();
    bool pass = ok && count >= 50 && el < 30.0;
    std::string text = "iota_s t_s + t_s iota_s = 1 on " + std::to_string(count) +
                       " random fraction-coefficient forms, n <= 3 (" + secs(el) + ")";
    if (el >= 30.0) text += "; over the 30s budget";
    record(2, pass, text);
}

// ---- criterion 3: homotopy identity dbar_s r_rho + r_rho dbar_s = 1 - t_rho ----

void criterion_homotopy() {
    Timer t;
    bool ok = true;
    std::size_t cases = 0;
    std::string witness;
    for (uint32_t n = 1; n <= 2 && ok; ++n) {
        std::vector<Poly> comps;
        for (uint32_t k = 0; k < n; ++k)
            comps.push_back(var(n, k) + Poly::constant(n, GaussRat(long(k) + 1)));
        SectionContext ctx = SectionContext::make(std::move(comps));
        for (uint32_t q = 0; q <= n && ok; ++q)
            for (uint32_t l = 0; l <= n && ok; ++l) {
                // one alpha per bidegree: every (q, l) word, each with its own
                // generic fraction coefficient
                Form alpha(n);
                long tag = 1;
                for (const ExteriorWord& w : all_words(n, false, true, true, false)) {
                    if (std::popcount(w.anti) != int(q) || std::popcount(w.covec) != int(l))
                        continue;
                    Poly num = var(n, 0) + GaussRat(tag) * Poly::conj_variable(n, n - 1) +
                               Poly::constant(n, GaussRat(tag + 1));
                    alpha.add_term(w, Frac(num, 1, ctx.norm));
                    ++tag;
                }
                CheckReport rep = check_homotopy(alpha, ctx);
                cases += rep.cases;
                if (!rep.pass) {
                    ok = false;
                    witness = "n=" + std::to_string(n) + " bidegree (" + std::to_string(q) +
                              "," + std::to_string(l) + ")";
                }
            }
    }
    double el = t.seconds();
    bool pass = ok && el < 120.0;
    std::string text =
        "dbar_s r_rho + r_rho dbar_s = 1 - t_rho on all bidegrees (q,l), q,l <= n <= 2, "
        "with a generic cutoff jet (" +
        secs(el) + ")";
    if (!ok) text += "; failed at " + witness;
    if (el >= 120.0) text += "; over the 2min budget";
    record(3, pass, text);
}

// ---- criterion 4: star involution and the defining property ----

void criterion_star() {
    Timer t;
    bool ok = true;
    std::string witness;
    for (uint32_t n = 1; n <= 4 && ok; ++n) {
        CheckReport rep = check_star_involution(n, FrameData(n));
        if (!rep.pass) {
            ok = false;
            witness = "involution n=" + std::to_string(n) + ": " + rep.witness;
        }
    }
    for (uint32_t n = 1; n <= 3 && ok; ++n) {
        CheckReport rep = check_star_defining_property(n, FrameData(n));
        if (!rep.pass) {
            ok = false;
            witness = "defining property n=" + std::to_string(n) + ": " + rep.witness;
        }
    }
    double el = t.seconds();
    bool pass = ok && el < 60.0;
    std::string text =
        "star involution on every word (n <= 4) and the defining pairing property on "
        "every pair (n <= 3) (" +
        secs(el) + ")";
    if (!ok) text += "; " + witness;
    if (el >= 60.0) text += "; over the 1min budget";
    record(4, pass, text);
}

// ---- criterion 5: closed-form contraction equals the duality oracle ----

void criterion_contraction() {
    Timer t;
    bool ok = true;
    std::size_t pairs = 0;
    std::string witness;
    for (uint32_t n = 1; n <= 3 && ok; ++n) {
        std::vector<ExteriorWord> sources = all_words(n, true, true, false, true);
        std::vector<ExteriorWord> args = all_words(n, true, true, true, false);
        for (const ExteriorWord& wu : sources) {
            for (const ExteriorWord& wt : args) {
                ++pairs;
                if (contract(Form::word(n, wu), Form::word(n, wt)) !=
                    oracle_contract(n, wu, wt)) {
                    ok = false;
                    witness = word_str(wu) + " _| " + word_str(wt);
                    break;
                }
            }
            if (!ok) break;
        }
    }
    double el = t.seconds();
    std::string text = "contraction agrees with the duality-inversion oracle on all " +
                       std::to_string(pairs) + " word pairs, n <= 3 (" + secs(el) + ")";
    if (!ok) text += "; first mismatch " + witness;
    record(5, ok, text);
}

// ---- criterion 6: the literal pointwise adjoint identity (known defect) ----

struct AdjointOutcome {
    bool literal_failed_everywhere = true;
    bool signed_held_everywhere = true;
    std::string first_witness;
};

AdjointOutcome criterion_adjoint() {
    Timer t;
    Rng rng(606);
    AdjointOutcome out;
    std::size_t runs = 0;
    for (uint32_t n = 1; n <= 3; ++n)
        for (long rep = 0; rep < 10; ++rep) {
            std::vector<GaussRat> svals;
            bool nonzero = false;
            while (!nonzero) {
                svals.clear();
                for (uint32_t k = 0; k < n; ++k) {
                    svals.push_back(rng.gauss_coeff());
                    if (!svals.back().is_zero()) nonzero = true;
                }
            }
            AdjointReport ar = check_pointwise_adjoint(n, svals, FrameData(n));
            ++runs;
            if (ar.literal_pass) out.literal_failed_everywhere = false;
            if (!ar.signed_pass) out.signed_held_everywhere = false;
            if (out.first_witness.empty() && !ar.literal_witness.empty())
                out.first_witness = "n=" + std::to_string(n) + " pair " + ar.literal_witness;
        }
    double el = t.seconds();
    bool literal_pass = !out.literal_failed_everywhere;
    std::string text =
        "literal adjoint <iota_s a, b> = <a, *V iota_s *V b> over all basis pairs, 10 "
        "random rational fiber values per n, n <= 3 (" +
        secs(el) + ", " + std::to_string(runs) + " runs)";
    if (!literal_pass) text += "; fails on every run, first mismatch at " + out.first_witness;
    record(6, literal_pass, text);
    if (!literal_pass && out.signed_held_everywhere)
        std::cout << "       every mismatched pair satisfies the identity after a global "
                     "sign flip of the right side\n";
    return out;
}

// ---- criterion 7: vanishing verdicts with explicit dimensions ----

void criterion_vanishing() {
    Timer t;
    bool ok = true;
    std::string witness;
    uint32_t D = 12;

    auto expect_pass = [&](std::vector<Poly> s, std::size_t h0, const char* name) {
        if (!ok) return;
        VanishingReport rep = check_vanishing(build_koszul(s), D);
        if (!rep.pass || !rep.h0 || *rep.h0 != h0) {
            ok = false;
            witness = std::string(name) + " expected PASS with h0 = " + std::to_string(h0);
        }
    };
    Poly x1 = var(1, 0);
    Poly x = var(2, 0), y = var(2, 1);
    expect_pass({x, y}, 1, "(x, y)");
    expect_pass({x * x, y * y * y}, 6, "(x^2, y^3)");
    expect_pass({x * y, x * x + y * y}, 4, "(x y, x^2 + y^2)");
    expect_pass({x1 * x1 - Poly::one(1)}, 2, "(x^2 - 1)");

    if (ok) {
        VanishingReport rep = check_vanishing(build_koszul({x, x}), D);
        if (rep.pass || rep.witness.empty()) {
            ok = false;
            witness = "(x, x) expected FAIL with a homology witness";
        }
    }
    double el = t.seconds();
    bool pass = ok && el < 60.0;
    std::string text =
        "vanishing verdicts: h0 = 1, 6, 4, 2 on the four regular examples and FAIL with "
        "an explicit degree-1 homology witness on (x, x), degree bound 12 (" +
        secs(el) + ")";
    if (!ok) text += "; " + witness;
    if (el >= 60.0) text += "; over the 1min budget";
    record(7, pass, text);
}

// ---- criterion 8: transformation-law residue equals the zero-sum oracle ----

void criterion_residue_oracle() {
    Timer t;
    Rng rng(808);
    bool ok = true;
    std::size_t agreements = 0;
    std::string witness;

    auto agree = [&](const std::vector<Poly>& s, uint32_t n, const char* name) {
        if (!ok) return;
        GroebnerBasis gb = buchberger(s, {});
        PurePowerData ppd = pure_power_data(gb, 16);
        std::vector<std::vector<GaussRat>> origin = {
            std::vector<GaussRat>(n, GaussRat(0))};
        for (long k = 0; k < 3 && ok; ++k) {
            Poly num = random_holo_poly(rng, n, 4, 4);
            if (grothendieck_residue(num, ppd) != residue_sum_oracle(num, s, origin)) {
                ok = false;
                witness = std::string(name) + " with numerator " +
                          num.str(std::vector<std::string>(n, "z"));
            }
            ++agreements;
        }
    };

    Poly x = var(2, 0), y = var(2, 1);
    agree({x, y}, 2, "(x, y)");
    agree({GaussRat(2) * x, GaussRat(3) * y}, 2, "(2x, 3y)");
    for (long k = 0; k < 5 && ok; ++k) {
        uint32_t n = uint32_t(1 + k % 3);
        std::vector<Poly> s;
        for (uint32_t j = 0; j < n; ++j) {
            GaussRat a(0);
            while (a.is_zero()) a = rng.int_coeff();
            s.push_back(a * var(n, j));
        }
        agree(s, n, "random diagonal");
    }
    double el = t.seconds();
    std::string text = "transformation-law residue equals the simple-zero sum on (x, y), "
                       "(2x, 3y) and 5 random diagonal sections, " +
                       std::to_string(agreements) + " numerators of degree <= 4 (" +
                       secs(el) + ")";
    if (!ok) text += "; first disagreement " + witness;
    record(8, ok, text);
}

// ---- criterion 9: the Jacobian residue computes the quotient dimension ----

void criterion_euler_trace() {
    Timer t;
    bool ok = true;
    std::string witness;

    auto law = [&](std::vector<Poly> s, const char* name) {
        if (!ok) return;
        GaussRat res = grothendieck_residue(jacobian(s), pure_power_data(buchberger(s, {}), 16));
        GaussRat dim{long(h0_dimension(s))};
        if (res != dim) {
            ok = false;
            witness = std::string(name) + ": residue " + res.str() + " vs dimension " +
                      dim.str();
        }
    };
    Poly x1 = var(1, 0);
    Poly x = var(2, 0), y = var(2, 1);
    law({x, y}, "(x, y)");
    law({x * x, y * y * y}, "(x^2, y^3)");
    law({x * y, x * x + y * y}, "(x y, x^2 + y^2)");
    if (ok) {
        std::vector<Poly> split = {x1 * x1 - Poly::one(1)};
        std::vector<std::vector<GaussRat>> pm = {{GaussRat(1)}, {GaussRat(-1)}};
        GaussRat res = residue_sum_oracle(jacobian(split), split, pm);
        if (res != GaussRat(long(h0_dimension(split)))) {
            ok = false;
            witness = "(x^2 - 1): oracle residue " + res.str();
        }
    }
    double el = t.seconds();
    std::string text =
        "residue of det(ds/dz) equals the quotient dimension (1, 6, 4 by the "
        "transformation law; 2 for (x^2 - 1) by the zero-sum oracle) (" +
        secs(el) + ")";
    if (!ok) text += "; " + witness;
    record(9, ok, text);
}

// ---- criterion 10: trace-pairing Gram matrices have full rank ----

void criterion_pairing_rank() {
    Timer t;
    bool ok = true;
    std::string witness;

    auto full_rank = [&](std::vector<Poly> s, std::size_t mu, const char* name) {
        if (!ok) return;
        GramMatrix g = trace_pairing_matrix(buchberger(s, {}), 32);
        NondegenerateReport rep = check_nondegenerate(g);
        if (!rep.pass || rep.dim != mu || rep.rank != mu) {
            ok = false;
            witness = std::string(name) + " expected full rank " + std::to_string(mu) +
                      ", got rank " + std::to_string(rep.rank) + " of " +
                      std::to_string(rep.dim);
        }
    };
    Poly x1 = var(1, 0);
    Poly x = var(2, 0), y = var(2, 1);
    full_rank({x, y}, 1, "(x, y)");
    full_rank({x1 * x1}, 2, "(x^2)");
    full_rank({x * y, x * x + y * y}, 4, "(x y, x^2 + y^2)");
    full_rank({x * x, y * y * y}, 6, "(x^2, y^3)");

    if (ok) {
        GramMatrix g = trace_pairing_matrix(
            buchberger({x * y, x * x + y * y}, {}), 32);
        for (std::size_t c = 0; c < g.basis.size(); ++c)
            g.entries.at(2, c) = GaussRat(0);
        NondegenerateReport rep = check_nondegenerate(g);
        if (rep.pass || rep.rank != 3) {
            ok = false;
            witness = "zeroed-row control not caught";
        }
    }
    double el = t.seconds();
    std::string text =
        "fraction-free Gram rank is mu = 1, 2, 4, 6 on the regular examples and the "
        "zeroed-row control FAILs (" +
        secs(el) + ")";
    if (!ok) text += "; " + witness;
    record(10, ok, text);
}

// ---- criterion 11: byte-identical reports on repeated runs ----

std::string run_capture(const std::string& cmd, int& code) {
    std::string full = cmd + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) {
        code = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

void criterion_determinism(const std::string& cli) {
    Timer t;
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "koszul_acceptance";
    fs::create_directories(dir);
    fs::path spec = dir / "circle.json";
    {
        std::ofstream out(spec, std::ios::binary | std::ios::trunc);
        out << R"({"n": 2, "variables": ["x", "y"], "section": ["x*y", "x^2+y^2"]})";
    }
    std::vector<std::string> cmds = {
        cli + " --format json cohomology " + spec.string(),
        cli + " pairing " + spec.string(),
        cli + " --format json residue " + spec.string() + " --numerator x^2",
        cli + " verify-identities --seed 7 --n-max 2",
    };
    bool ok = true;
    std::string witness;
    for (const std::string& cmd : cmds) {
        int code_a = 0, code_b = 0;
        std::string a = run_capture(cmd, code_a);
        std::string b = run_capture(cmd, code_b);
        if (a.empty() || a != b || code_a != code_b) {
            ok = false;
            witness = cmd;
            break;
        }
    }
    double el = t.seconds();
    std::string text = "repeated runs of every command produce byte-identical reports (" +
                       secs(el) + ")";
    if (!ok) text += "; differs for: " + witness;
    record(11, ok, text);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    criterion_nilpotency();
    criterion_commutator();
    criterion_homotopy();
    criterion_star();
    criterion_contraction();
    AdjointOutcome adjoint = criterion_adjoint();
    criterion_vanishing();
    criterion_residue_oracle();
    criterion_euler_trace();
    criterion_pairing_rank();
    criterion_determinism(argv[1]);

    std::size_t passed = 0;
    for (const Criterion& c : results)
        if (c.pass) ++passed;
    std::cout << "\n" << passed << " of " << results.size() << " criteria pass\n";

    // Criterion 6 is expected to fail in its literal form: the identity holds
    // after a global sign flip of the right side, on every pair.  The exit
    // code certifies that everything else passes and that the failure is
    // exactly the analyzed one, so a behavior change in either direction
    // breaks the build.
    bool expected_profile = adjoint.literal_failed_everywhere &&
                            adjoint.signed_held_everywhere;
    for (const Criterion& c : results)
        if (c.id != 6 && !c.pass) expected_profile = false;
    if (expected_profile) {
        std::cout << "the single failure is the literal adjoint identity, which holds "
                     "after a global sign flip of the right side on every pair; this "
                     "matches the documented analysis\n";
        return 0;
    }
    std::cout << "behavior deviates from the documented analysis\n";
    return 1;
}
