#pragma once

// JSON forms of the library's values and reports. Big integers and
// rationals are written as decimal strings; objects keep insertion order
// so output is byte-stable.

#include <hilex/enumerators.hpp>
#include <hilex/gf_identities.hpp>
#include <hilex/type_b.hpp>

#include <json.hpp>

namespace hilex {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition &p) { return Json(p.parts()); }

inline Json to_json(const BiPartition &b) { return Json{{"plus", b.plus.parts()}, {"minus", b.minus.parts()}}; }

inline Json to_json(const DescentSet &d) { return Json(d.positions()); }

inline const char *status(bool pass) { return pass ? "pass" : "fail"; }

template <typename Key>
Json class_values_json(const ClassFunction<Key> &chi)
{
    Json values = Json::array();
    for (std::size_t i = 0; i < chi.size(); ++i) {
        values.push_back(Json{{"nu", to_json(chi.keys()[i])}, {"value", chi.value(i).str()}});
    }
    return values;
}

template <typename Key>
Json to_json(const ClassFunction<Key> &chi)
{
    return Json{{"n", chi.n()}, {"values", class_values_json(chi)}};
}

inline Json to_json(const MonomialKey &k)
{
    auto family = [](const MonomialKey::Factors &f) {
        Json o = Json::object();
        for (const auto &[v, e] : f) {
            o[v.str()] = e;
        }
        return o;
    };
    return Json{{"s", family(k.s())}, {"t", family(k.t())}};
}

inline Json to_json(const TruncatedSeries &a)
{
    Json arr = Json::array();
    for (const auto &[k, c] : a.terms()) {
        Json rec = to_json(k);
        rec["coeff"] = to_string(c);
        arr.push_back(std::move(rec));
    }
    return arr;
}

inline Json to_json(const DescentHistogram &h)
{
    Json arr = Json::array();
    for (const auto &[d, c] : h) {
        arr.push_back(Json{{"descents", to_json(d)}, {"count", std::to_string(c)}});
    }
    return arr;
}

inline Json to_json(const std::optional<Discrepancy> &d)
{
    if (!d) {
        return nullptr;
    }
    return Json{{"key", to_json(d->key)}, {"lhs", to_string(d->lhs)}, {"rhs", to_string(d->rhs)}, {"where", d->where}};
}

inline Json to_json(const IdentityReport &r)
{
    Json j{{"check", "gf"},
           {"identity", to_string(r.id)},
           {"weight", r.weight},
           {"status", status(r.pass)},
           {"basis", r.basis},
           {"terms_compared", r.terms_compared}};
    if (r.substitution_weight >= 0) {
        j["substitution_weight"] = r.substitution_weight;
    }
    j["first_discrepancy"] = to_json(r.first_discrepancy);
    return j;
}

inline Json to_json(const ClassComparison &c)
{
    return Json{{"status", status(c.pass)}, {"left", class_values_json(c.left)}, {"right", class_values_json(c.right)}};
}

inline Json to_json(const EquidReport &r)
{
    return Json{{"check", "equid"},
                {"n", r.n},
                {"status", status(r.pass)},
                {"totals", {{"oc", std::to_string(r.oc_total)}, {"ec", std::to_string(r.ec_total)}}},
                {"histograms", {{"oc", to_json(r.oc_plain)}, {"ec_complement", to_json(r.ec_complement)}}}};
}

inline Json to_json(const OpEpReport &r)
{
    return Json{{"check", "op-ep"},
                {"n", r.n},
                {"status", status(r.pass)},
                {"op_psi_vs_sign_ep_psi", to_json(r.op_vs_sign_ep)},
                {"op_tau_vs_ep_psi", to_json(r.twisted_op_vs_ep)}};
}

inline Json to_json(const ScharfReport &r)
{
    return Json{{"check", "scharf"},
                {"n", r.n},
                {"k", r.k},
                {"status", status(r.pass)},
                {"basis", "externally cited, computationally verified"},
                {"roots_vs_psi", to_json(r.plain)},
                {"signed_roots_vs_tau", to_json(r.signed_)}};
}

inline Json to_json(const InducedOddReport &r)
{
    return Json{{"check", "induced-odd"},
                {"n", r.n},
                {"status", status(r.pass)},
                {"odd_roots_vs_induced", to_json(r.induced)},
                {"not_induced_from_below",
                 {{"dim_even", r.dim_even.str()}, {"dim_from_below", r.dim_from_below.str()}, {"confirmed", r.not_induced_from_below}}}};
}

inline Json to_json(const InducedComparison &r, int n, FusionTarget target)
{
    return Json{{"check", "induced-b"},
                {"n", n},
                {"target", target == FusionTarget::even ? "S_2n" : "S_2n+1"},
                {"status", status(r.pass)},
                {"induced_eta", class_values_json(r.induced)},
                {"op_psi_sum", class_values_json(r.expected)}};
}

inline Json to_json(const PositiveOnlyCount &r, int n)
{
    const bool pass = r.bijection_ok && r.count == double_factorial(2 * n - 1);
    return Json{{"check", "positive-b"},
                {"n", n},
                {"status", status(pass)},
                {"count", r.count.str()},
                {"matchings", r.matchings.str()},
                {"bijection", r.bijection_ok}};
}

inline Json to_json(const CitedGfReport &r)
{
    Json entries = Json::array();
    for (const auto &e : r.entries) {
        entries.push_back(Json{{"k", e.k}, {"signed", e.with_sign}, {"status", status(!e.first_discrepancy)},
                               {"first_discrepancy", to_json(e.first_discrepancy)}});
    }
    return Json{{"check", "cited-gf"},
                {"weight", r.weight},
                {"status", status(r.pass)},
                {"basis", "externally cited, computationally verified"},
                {"entries", entries}};
}

inline Json to_json(const std::vector<DoubleRow> &rows)
{
    Json arr = Json::array();
    bool pass = true;
    for (const auto &r : rows) {
        pass = pass && r.pass;
        arr.push_back(Json{{"n", r.n},
                           {"status", status(r.pass)},
                           {"from_characters", r.from_characters.str()},
                           {"from_class_sizes", r.from_class_sizes.str()},
                           {"from_product", r.from_product.str()},
                           {"formula", r.formula.str()}});
    }
    return Json{{"check", "double"}, {"status", status(pass)}, {"rows", arr}};
}

inline Json to_json(const KernelReport &r)
{
    return Json{{"check", "kernel"},
                {"status", status(r.pass())},
                {"mobius_sum", status(r.mobius_pass)},
                {"mobius_max", r.mobius_max},
                {"wreath_cycle_structure", status(r.cycle_structure_pass)},
                {"wreath_cycle_collapse", status(r.collapse_pass)},
                {"failures", r.failures}};
}

} // namespace hilex
