#pragma once

// Command-line front end. run() is separate from main() so the tests can
// drive it with captured streams.

#include <hilex/serialize.hpp>

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hilex::cli {

enum Exit { ok = 0, check_failed = 1, usage = 2, cap_exceeded = 3 };

inline const char *verb_list = "char, char-b, roots, verify, gf, tables";

struct RunConfig {
    std::string format = "json";
    unsigned jobs = 1;
    bool unsafe_large = false;

    std::string lambda, plus, minus, mode = "plain", identity, check, table, filter = "all";
    int n = -1;
    int k = 0;
    int weight = -1;
    bool odd = false;
    bool with_sign = false;
    bool eta = false;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline std::vector<int> parse_parts(const std::string &text)
{
    std::vector<int> parts;
    if (text.empty()) {
        return parts;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != item.size() || v < 1) {
            throw UsageError("bad part list: " + text);
        }
        parts.push_back(v);
    }
    return parts;
}

inline int need(int value, const char *flag)
{
    if (value < 0) {
        throw UsageError(std::string("missing ") + flag);
    }
    return value;
}

// ---- output ----

inline std::string params_of(const Json &r)
{
    std::string s;
    for (const char *key : {"identity", "n", "k", "weight", "target"}) {
        if (r.contains(key)) {
            s += std::string(" ") + key + "=" + (r[key].is_string() ? r[key].get<std::string>() : r[key].dump());
        }
    }
    return s;
}

inline void print_summary(const Json &r, std::ostream &out)
{
    if (r.contains("reports")) {
        for (const auto &sub : r["reports"]) {
            print_summary(sub, out);
        }
        out << r["check"].get<std::string>() << params_of(r) << ": " << r["status"].get<std::string>() << "\n";
        return;
    }
    out << r["check"].get<std::string>() << params_of(r) << ": " << r["status"].get<std::string>();
    if (r.contains("totals")) {
        out << " (oc " << r["totals"]["oc"].get<std::string>() << ", ec " << r["totals"]["ec"].get<std::string>() << ")";
    }
    if (r.contains("first_discrepancy") && !r["first_discrepancy"].is_null()) {
        out << " first discrepancy " << r["first_discrepancy"].dump();
    }
    out << "\n";
}

template <typename Key>
void print_class_table(const std::string &title, const ClassFunction<Key> &chi, std::ostream &out)
{
    out << title << "\n";
    std::vector<std::string> head{"nu"}, row{"value"};
    for (std::size_t i = 0; i < chi.size(); ++i) {
        head.push_back(chi.keys()[i].str());
        row.push_back(chi.value(i).str());
    }
    std::vector<std::size_t> width(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) {
        width[c] = std::max(head[c].size(), row[c].size());
    }
    for (const auto *line : {&head, &row}) {
        for (std::size_t c = 0; c < line->size(); ++c) {
            out << std::left << std::setw(static_cast<int>(width[c]) + (c + 1 < line->size() ? 2 : 0)) << (*line)[c];
        }
        out << "\n";
    }
}

// ---- verbs ----

inline Json verify_one(const std::string &check, const RunConfig &cfg, const Context &ctx)
{
    if (check == "equid") {
        return to_json(verify_equid(need(cfg.n, "--n"), ctx));
    }
    if (check == "op-ep") {
        return to_json(verify_op_ep(need(cfg.n, "--n"), ctx));
    }
    if (check == "scharf") {
        const int n = need(cfg.n, "--n");
        if (cfg.k > 0) {
            return to_json(verify_scharf(n, cfg.k, ctx));
        }
        Json all{{"check", "scharf"}, {"n", n}, {"status", "pass"}, {"reports", Json::array()}};
        for (int k : {1, 2, 3, 4, 5, 6, 12}) {
            Json r = to_json(verify_scharf(n, k, ctx));
            if (r["status"] != "pass") {
                all["status"] = "fail";
            }
            all["reports"].push_back(std::move(r));
        }
        return all;
    }
    if (check == "induced-b") {
        const int n = need(cfg.n, "--n");
        Json all{{"check", "induced-b"}, {"n", n}, {"status", "pass"}, {"reports", Json::array()}};
        for (auto target : {FusionTarget::even, FusionTarget::odd}) {
            require_perm_cap(2 * n + (target == FusionTarget::odd ? 1 : 0), ctx);
            Json r = to_json(verify_induced_to_even(n, target, ctx), n, target);
            if (r["status"] != "pass") {
                all["status"] = "fail";
            }
            all["reports"].push_back(std::move(r));
        }
        return all;
    }
    if (check == "induced-odd") {
        return to_json(verify_induced_to_odd(need(cfg.n, "--n"), ctx));
    }
    if (check == "positive-b") {
        const int n = need(cfg.n, "--n");
        return to_json(positive_only_count(n, ctx), n);
    }
    if (check == "summation-b") {
        return to_json(verify_summation_bn(cfg.weight < 0 ? 4 : cfg.weight, ctx));
    }
    if (check == "kernel") {
        return to_json(verify_kernel());
    }
    if (check == "cited-gf") {
        return to_json(verify_cited_gf_remarks(cfg.weight < 0 ? 6 : cfg.weight, ctx));
    }
    if (check == "double") {
        return to_json(verify_double(cfg.n < 0 ? 8 : cfg.n, ctx));
    }
    if (check == "gf") {
        const auto id = parse_identity(cfg.identity);
        if (!id) {
            throw UsageError("unknown identity '" + cfg.identity + "'");
        }
        if (*id == IdentityId::summation_bn) {
            return to_json(verify_summation_bn(need(cfg.weight, "--weight"), ctx));
        }
        return to_json(verify_identity(*id, need(cfg.weight, "--weight"), ctx));
    }
    if (check == "all") {
        const int n = cfg.n < 0 ? 5 : cfg.n;
        const int w = cfg.weight < 0 ? 5 : cfg.weight;
        Json all{{"check", "all"}, {"n", n}, {"weight", w}, {"status", "pass"}, {"reports", Json::array()}};
        auto add = [&](Json r) {
            if (r["status"] != "pass") {
                all["status"] = "fail";
            }
            all["reports"].push_back(std::move(r));
        };
        RunConfig sub = cfg;
        sub.n = n;
        sub.weight = w;
        add(verify_one("equid", sub, ctx));
        add(verify_one("op-ep", sub, ctx));
        add(verify_one("scharf", sub, ctx));
        for (int m = 1; 2 * m + 1 <= n && m <= 3; ++m) {
            sub.n = m;
            add(verify_one("induced-odd", sub, ctx));
            add(verify_one("induced-b", sub, ctx));
        }
        for (int m = 1; m <= std::min(n, ctx.limits.max_bn_enum_n); ++m) {
            sub.n = m;
            add(verify_one("positive-b", sub, ctx));
        }
        sub.n = n;
        sub.weight = std::min(w, 4);
        add(verify_one("summation-b", sub, ctx));
        sub.weight = w;
        add(verify_one("kernel", sub, ctx));
        add(verify_one("cited-gf", sub, ctx));
        add(verify_one("double", sub, ctx));
        for (auto id : {IdentityId::summation, IdentityId::summation_signed, IdentityId::odd_cycles, IdentityId::even_cycles}) {
            sub.identity = to_string(id);
            add(verify_one("gf", sub, ctx));
        }
        return all;
    }
    throw UsageError("unknown check '" + check + "'");
}

inline Json tables(const RunConfig &cfg, const Context &ctx)
{
    const int n = need(cfg.n, "--n");
    if (cfg.table == "oc-ec") {
        Json j{{"table", "oc-ec"}, {"n", n}};
        for (auto which : {CycleClassSet::oc, CycleClassSet::ec}) {
            Json rows = Json::array();
            for (const auto &p : oc_ec_members(n, which, ctx)) {
                rows.push_back(Json{{"perm", p.window()}, {"cycle_type", to_json(p.cycle_type())}, {"descents", to_json(p.descent_set())}});
            }
            j[which == CycleClassSet::oc ? "oc" : "ec"] = rows;
        }
        return j;
    }
    if (cfg.table == "partitions") {
        const PartitionFilter f = cfg.filter == "op" ? PartitionFilter::odd_parts
                                  : cfg.filter == "ep" ? PartitionFilter::even_parts
                                                       : PartitionFilter::all;
        Json rows = Json::array();
        for (const auto &p : partitions(n, f)) {
            rows.push_back(Json{{"lambda", to_json(p)}, {"centralizer", centralizer_order_sn(p).str()}, {"class_size", class_size_sn(p).str()}});
        }
        return Json{{"table", "partitions"}, {"n", n}, {"filter", cfg.filter}, {"rows", rows}};
    }
    if (cfg.table == "bipartitions") {
        Json rows = Json::array();
        for (const auto &b : bipartitions(n)) {
            rows.push_back(Json{{"lambda", to_json(b)}, {"centralizer", centralizer_order_bn(b).str()}, {"class_size", class_size_bn(b).str()}});
        }
        return Json{{"table", "bipartitions"}, {"n", n}, {"rows", rows}};
    }
    throw UsageError("unknown table '" + cfg.table + "'");
}

inline void print_table_rows(const Json &j, std::ostream &out)
{
    out << j["table"].get<std::string>() << " n=" << j["n"].dump() << "\n";
    if (j["table"] == "oc-ec") {
        for (const char *side : {"oc", "ec"}) {
            out << side << " (" << j[side].size() << ")\n";
            for (const auto &r : j[side]) {
                out << "  " << r["perm"].dump() << "  type " << r["cycle_type"].dump() << "  des " << r["descents"].dump() << "\n";
            }
        }
        return;
    }
    for (const auto &r : j["rows"]) {
        out << "  " << r["lambda"].dump() << "  centralizer " << r["centralizer"].get<std::string>() << "  class "
            << r["class_size"].get<std::string>() << "\n";
    }
}

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    RunConfig cfg;
    CLI::App app{"Higher Lie characters, root enumerators and their identities", "hilex"};
    app.require_subcommand(1);
    app.add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1U, 256U));
    app.add_flag("--unsafe-large", cfg.unsafe_large, "allow HILEX_MAX_N above the default caps");

    auto common = [&](CLI::App *sub) {
        sub->add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1U, 256U));
        sub->add_flag("--unsafe-large", cfg.unsafe_large, "allow HILEX_MAX_N above the default caps");
    };

    auto *chr = app.add_subcommand("char", "higher Lie character of S_n");
    chr->add_option("--lambda", cfg.lambda, "partition, e.g. 3,1")->required();
    chr->add_option("--mode", cfg.mode, "plain or twisted")->check(CLI::IsMember({"plain", "twisted"}));
    common(chr);

    auto *chb = app.add_subcommand("char-b", "higher Lie character of B_n, or eta");
    chb->add_option("--plus", cfg.plus, "positive cycle lengths");
    chb->add_option("--minus", cfg.minus, "negative cycle lengths");
    chb->add_flag("--eta", cfg.eta, "sum over (lambda, empty)");
    chb->add_option("--n", cfg.n, "rank for --eta");
    common(chb);

    auto *roots = app.add_subcommand("roots", "root enumerator of S_n");
    roots->add_option("--n", cfg.n)->required();
    roots->add_option("--k", cfg.k, "root order");
    roots->add_flag("--odd", cfg.odd, "odd roots");
    roots->add_flag("--signed", cfg.with_sign, "weight roots by sign");
    common(roots);

    auto *verify = app.add_subcommand("verify", "run a verifier");
    verify->add_option("check", cfg.check, "equid, op-ep, scharf, induced-b, induced-odd, positive-b, summation-b, kernel, cited-gf, double, gf, all")
        ->required()
        ->check(CLI::IsMember({"equid", "op-ep", "scharf", "induced-b", "induced-odd", "positive-b", "summation-b", "kernel",
                               "cited-gf", "double", "gf", "all"}));
    verify->add_option("--n", cfg.n);
    verify->add_option("--k", cfg.k)->check(CLI::PositiveNumber);
    verify->add_option("--weight", cfg.weight)->check(CLI::NonNegativeNumber);
    verify->add_option("--identity", cfg.identity);
    common(verify);

    auto *gf = app.add_subcommand("gf", "check a generating-function identity");
    gf->add_option("--identity", cfg.identity, "summation, summation-signed, odd-cycles, even-cycles, summation-b")->required();
    gf->add_option("--weight", cfg.weight)->required()->check(CLI::NonNegativeNumber);
    common(gf);

    auto *tbl = app.add_subcommand("tables", "enumeration tables");
    tbl->add_option("table", cfg.table, "oc-ec, partitions, bipartitions")
        ->required()
        ->check(CLI::IsMember({"oc-ec", "partitions", "bipartitions"}));
    tbl->add_option("--n", cfg.n)->required();
    tbl->add_option("--filter", cfg.filter, "all, op, ep")->check(CLI::IsMember({"all", "op", "ep"}));
    common(tbl);

    std::vector<const char *> argv{"hilex"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success &) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "hilex: " << e.what() << "\nverbs: " << verb_list << "\n";
        return usage;
    }

    try {
        Context ctx;
        ctx.limits = Limits::from_environment(cfg.unsafe_large);
        ctx.jobs = cfg.jobs;
        const bool table = cfg.format == "table";

        if (chr->parsed()) {
            const Partition lambda(parse_parts(cfg.lambda));
            const auto mode = cfg.mode == "twisted" ? CharacterMode::twisted : CharacterMode::plain;
            const auto chi = higher_lie_character(lambda, mode, ctx);
            if (table) {
                print_class_table((mode == CharacterMode::plain ? "psi^" : "tau^") + lambda.str() + " on S_" + std::to_string(lambda.n()), chi, out);
            } else {
                out << Json{{"n", lambda.n()}, {"lambda", to_json(lambda)}, {"mode", to_string(mode)}, {"values", class_values_json(chi)}}.dump(2) << "\n";
            }
            return ok;
        }
        if (chb->parsed()) {
            BnClassFunction chi;
            Json head;
            if (cfg.eta) {
                const int n = need(cfg.n, "--n");
                require_bn_char_cap(n, ctx);
                chi = eta(n, ctx);
                head = Json{{"n", n}, {"eta", true}};
            } else {
                const BiPartition b{Partition(parse_parts(cfg.plus)), Partition(parse_parts(cfg.minus))};
                chi = higher_lie_character_bn(b, ctx);
                head = Json{{"n", b.n()}, {"lambda", to_json(b)}};
            }
            if (table) {
                print_class_table(cfg.eta ? "eta on B_" + std::to_string(chi.n()) : "psi_B on B_" + std::to_string(chi.n()), chi, out);
            } else {
                head["values"] = class_values_json(chi);
                out << head.dump(2) << "\n";
            }
            return ok;
        }
        if (roots->parsed()) {
            if (cfg.odd == (cfg.k > 0)) {
                throw UsageError("give exactly one of --k and --odd");
            }
            const RootSpec spec = cfg.odd ? RootSpec::odd_roots(cfg.with_sign) : RootSpec::power(cfg.k, cfg.with_sign);
            const auto rho = root_enumerator(cfg.n, spec, ctx);
            if (table) {
                print_class_table(std::string(cfg.with_sign ? "signed " : "") + "roots k=" + (cfg.odd ? "odd" : std::to_string(cfg.k)) + " on S_" + std::to_string(cfg.n), rho, out);
            } else {
                Json j{{"n", cfg.n}, {"k", cfg.odd ? Json("odd") : Json(cfg.k)}, {"signed", cfg.with_sign}};
                if (cfg.odd) {
                    j["k_used"] = odd_root_exponent(cfg.n);
                }
                j["values"] = class_values_json(rho);
                out << j.dump(2) << "\n";
            }
            return ok;
        }
        if (tbl->parsed()) {
            const Json j = tables(cfg, ctx);
            if (table) {
                print_table_rows(j, out);
            } else {
                out << j.dump(2) << "\n";
            }
            return ok;
        }
        Json report;
        if (verify->parsed()) {
            report = verify_one(cfg.check, cfg, ctx);
        } else {
            RunConfig sub = cfg;
            report = verify_one("gf", sub, ctx);
        }
        if (table) {
            print_summary(report, out);
        } else {
            out << report.dump(2) << "\n";
        }
        return report["status"] == "pass" ? ok : check_failed;
    } catch (const size_error &e) {
        err << "hilex: " << e.what() << "\n";
        return cap_exceeded;
    } catch (const consistency_error &e) {
        err << "hilex: consistency failure: " << e.what() << "\n";
        return check_failed;
    } catch (const std::invalid_argument &e) {
        err << "hilex: " << e.what() << "\n";
        return usage;
    } catch (const std::domain_error &e) {
        err << "hilex: " << e.what() << "\n";
        return usage;
    } catch (const std::out_of_range &e) {
        err << "hilex: " << e.what() << "\n";
        return usage;
    }
}

} // namespace hilex::cli
