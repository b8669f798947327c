#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul_complex.hpp"
#include "parse.hpp"
#include "report.hpp"
#include "residue.hpp"
#include "spec_file.hpp"
#include "verify.hpp"

namespace koszul {

struct CommandResult {
    OrderedJson report;
    int exit_code = 0;
};

inline OrderedJson spec_echo(const SectionSpec& spec) {
    OrderedJson j;
    j["n"] = std::to_string(spec.n);
    j["variables"] = spec.variables;
    j["section"] = spec.section_text;
    j["order"] = order_kind_name(spec.order.kind);
    j["degree_bound"] = std::to_string(spec.degree_bound);
    j["power_bound"] = std::to_string(spec.power_bound);
    return j;
}

namespace detail {

inline const char* bound_kind_name(const BoundExceeded& e) {
    if (dynamic_cast<const NotLocalAtOrigin*>(&e)) return "not-local-at-origin";
    if (dynamic_cast<const NotZeroDimensional*>(&e)) return "not-zero-dimensional";
    return "bound-exceeded";
}

// Runs the command body; a computational bound turning out too small is not a
// crash but an ERROR report with exit code 2.
template <typename Fn>
CommandResult guarded(OrderedJson doc, Fn&& body) {
    CommandResult out;
    try {
        body(doc);
        out.report = std::move(doc);
    } catch (const BoundExceeded& e) {
        OrderedJson err;
        err["kind"] = bound_kind_name(e);
        err["message"] = e.what();
        doc["error"] = std::move(err);
        doc["status"] = "ERROR";
        out.report = std::move(doc);
        out.exit_code = 2;
    }
    return out;
}

inline std::string monomial_text(uint32_t n, const ExpVec& exps,
                                 const std::vector<std::string>& names) {
    return Poly::from_exponents(n, exps, GaussRat(1)).str(names);
}

}  // namespace detail

inline CommandResult cmd_cohomology(const SectionSpec& spec, const std::string& digest) {
    OrderedJson doc = report_skeleton("cohomology", digest);
    doc["spec"] = spec_echo(spec);
    return detail::guarded(std::move(doc), [&](OrderedJson& d) {
        KoszulComplex kc = build_koszul(spec.section);
        VanishingReport rep = check_vanishing(kc, spec.degree_bound, spec.order);
        OrderedJson res;
        res["regular_sequence"] = rep.zero_dimensional ? "true" : "false";
        if (rep.h0) res["h0_dim"] = std::to_string(*rep.h0);
        res["certified_window"] = "0.." + std::to_string(rep.table.window_max);
        OrderedJson rows = OrderedJson::array();
        for (uint32_t j = 0; j <= kc.n; ++j) {
            OrderedJson row;
            row["j"] = std::to_string(j);
            OrderedJson dims = OrderedJson::array();
            for (std::size_t d : rep.table.dims[j]) dims.push_back(std::to_string(d));
            row["dims_by_degree"] = std::move(dims);
            row["stabilized"] = rep.table.stabilized[j] ? "true" : "false";
            rows.push_back(std::move(row));
        }
        res["homology"] = std::move(rows);
        res["vanishing"] = rep.pass ? "PASS" : "FAIL";
        if (!rep.witness.empty()) res["witness"] = rep.witness;
        d["results"] = std::move(res);
        d["status"] = rep.pass ? "PASS" : "FAIL";
    });
}

inline CommandResult cmd_pairing(const SectionSpec& spec, const std::string& digest) {
    OrderedJson doc = report_skeleton("pairing", digest);
    doc["spec"] = spec_echo(spec);
    return detail::guarded(std::move(doc), [&](OrderedJson& d) {
        GroebnerBasis gb = buchberger(spec.section, spec.order);
        GramMatrix g = trace_pairing_matrix(gb, spec.power_bound);
        NondegenerateReport nr = check_nondegenerate(g);
        OrderedJson res;
        OrderedJson basis = OrderedJson::array();
        for (const ExpVec& b : g.basis)
            basis.push_back(detail::monomial_text(spec.n, b, spec.variables));
        res["basis"] = std::move(basis);
        OrderedJson rows = OrderedJson::array();
        for (std::size_t r = 0; r < g.basis.size(); ++r) {
            OrderedJson row = OrderedJson::array();
            for (std::size_t c = 0; c < g.basis.size(); ++c)
                row.push_back(g.entries.at(r, c).str());
            rows.push_back(std::move(row));
        }
        res["gram"] = std::move(rows);
        res["dimension"] = std::to_string(nr.dim);
        res["rank"] = std::to_string(nr.rank);
        res["nondegenerate"] = nr.pass ? "PASS" : "FAIL";
        d["results"] = std::move(res);
        d["status"] = nr.pass ? "PASS" : "FAIL";
    });
}

inline CommandResult cmd_residue(const SectionSpec& spec, const std::string& digest,
                                 const std::string& numerator_text,
                                 const std::optional<std::string>& zeros_text) {
    OrderedJson doc = report_skeleton("residue", digest);
    doc["spec"] = spec_echo(spec);
    return detail::guarded(std::move(doc), [&](OrderedJson& d) {
        Poly numerator = parse_poly(numerator_text, spec.variables, false);
        OrderedJson res;
        res["numerator"] = numerator_text;
        if (zeros_text) {
            auto zeros = parse_zero_list(*zeros_text, spec.n);
            GaussRat value = residue_sum_oracle(numerator, spec.section, zeros);
            res["path"] = "simple-zero-sum";
            OrderedJson pts = OrderedJson::array();
            for (const auto& p : zeros) {
                std::string txt = "(";
                for (std::size_t k = 0; k < p.size(); ++k) {
                    if (k) txt += ", ";
                    txt += p[k].str();
                }
                pts.push_back(txt + ")");
            }
            res["zeros"] = std::move(pts);
            res["value"] = value.str();
        } else {
            GroebnerBasis gb = buchberger(spec.section, spec.order);
            PurePowerData ppd = [&] {
                try {
                    return pure_power_data(gb, spec.power_bound);
                } catch (const NotLocalAtOrigin& e) {
                    throw NotLocalAtOrigin(std::string(e.what()) +
                                           "; or pass --zeros with the exact simple "
                                           "zeros to use the summation oracle");
                }
            }();
            GaussRat value = grothendieck_residue(numerator, ppd);
            res["path"] = "transformation-law";
            OrderedJson powers = OrderedJson::array();
            for (uint32_t p : ppd.powers) powers.push_back(std::to_string(p));
            res["pure_powers"] = std::move(powers);
            OrderedJson cof = OrderedJson::array();
            for (const auto& row : ppd.cofactors) {
                OrderedJson jrow = OrderedJson::array();
                for (const Poly& p : row) jrow.push_back(p.str(spec.variables));
                cof.push_back(std::move(jrow));
            }
            res["cofactors"] = std::move(cof);
            res["det_transition"] = ppd.det_transition.str(spec.variables);
            res["value"] = value.str();
        }
        d["results"] = std::move(res);
        d["status"] = "PASS";
    });
}

inline CommandResult cmd_verify(uint64_t seed, uint32_t n_max) {
    std::string params =
        "verify-identities seed=" + std::to_string(seed) + " n_max=" + std::to_string(n_max);
    OrderedJson doc = report_skeleton("verify-identities", digest_string(params));
    BatteryResult br = run_battery(seed, n_max);
    OrderedJson res;
    res["seed"] = std::to_string(seed);
    res["n_max"] = std::to_string(n_max);
    OrderedJson fams = OrderedJson::array();
    std::size_t failed = 0;
    for (const FamilyResult& fr : br.families) {
        OrderedJson f;
        f["name"] = fr.name;
        f["bound"] = std::to_string(fr.bound);
        f["cases"] = std::to_string(fr.cases);
        f["status"] = fr.skipped ? "SKIPPED" : (fr.pass ? "PASS" : "FAIL");
        if (!fr.witness.empty()) f["witness"] = fr.witness;
        if (!fr.note.empty()) f["note"] = fr.note;
        if (!fr.skipped && !fr.pass) ++failed;
        fams.push_back(std::move(f));
    }
    res["families"] = std::move(fams);
    res["families_reported"] = std::to_string(br.families.size());
    res["families_failed"] = std::to_string(failed);
    doc["results"] = std::move(res);
    doc["status"] = br.pass ? "PASS" : "FAIL";
    return CommandResult{std::move(doc), 0};
}

}  // namespace koszul
