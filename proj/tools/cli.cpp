#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgcert/automorphism.hpp"
#include "lgcert/dual.hpp"
#include "lgcert/errors.hpp"
#include "lgcert/eutaxy.hpp"
#include "lgcert/lg_lattice.hpp"
#include "lgcert/optimality.hpp"

namespace lgcert::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
    std::string command;
    std::string group;
    int max_order = 0;
    std::string what = "eutaxy";
    std::string format = "json";
    double budget_seconds = 600;
    unsigned threads = 1;
};

// A computed report plus whether any part of it ran out of budget.
struct Report {
    Json body = Json::object();
    bool exhausted = false;
};

Json num(const Integer& z) { return z.fits_slong_p() ? Json(z.get_si()) : Json(z.get_str()); }
Json rat(const Rational& q) { return to_string(q); }

Json vector_json(const QVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_den() == 1 ? num(x.get_num()) : rat(x));
    return a;
}

Json vectors_json(std::vector<QVector> vs) {
    sort_lex(vs);
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(vector_json(v));
    return a;
}

Budget make_budget(const Config& cfg) { return cfg.budget_seconds > 0 ? Budget::seconds(cfg.budget_seconds) : Budget(); }

Json head(const AbelianGroup& g) {
    Json j = Json::object();
    j["group"] = g.name();
    j["invariant_factors"] = g.invariant_factors();
    j["n"] = g.order();
    return j;
}

Report cmd_build(const AbelianGroup& g, const Config&) {
    auto lg = build_lg(g);
    Report r{head(g)};
    r.body["rank"] = lg.lattice.rank();
    r.body["index"] = num(index_in_root(lg));
    Json elements = Json::array();
    for (const auto& x : lg.ordering) elements.push_back(x.residues);
    r.body["elements"] = elements;
    Json basis = Json::array();
    for (std::size_t i = 0; i < lg.lattice.rank(); ++i) basis.push_back(vector_json(lg.lattice.basis().row(i)));
    r.body["basis"] = basis;
    return r;
}

Report cmd_minvec(const AbelianGroup& g, const Config&) {
    auto lg = build_lg(g);
    auto s = shortest_vectors(lg.lattice);
    const int kappa = two_torsion_order(g);
    Report r{head(g)};
    r.body["kappa"] = kappa;
    r.body["min_norm_sq"] = rat(s.min_norm_sq);
    r.body["count"] = s.vectors.size();
    if (g.order() >= 4) {
        r.body["formula"] = num(minimal_count_formula(g.order(), kappa));
        r.body["structural_equal"] = structural_minimal_vectors(lg).vectors == s.vectors;
    } else {
        r.body["formula"] = nullptr;
        r.body["structural_equal"] = nullptr;
    }
    r.body["vectors"] = vectors_json(s.vectors);
    return r;
}

Report cmd_eutaxy(const AbelianGroup& g, const Config&) {
    auto lg = build_lg(g);
    auto c = strong_eutaxy_check(lg.lattice);
    Report r{head(g)};
    r.body["kappa"] = two_torsion_order(g);
    r.body["verdict"] = c.verdict;
    r.body["predicted"] = predicted_strongly_eutactic(g);
    r.body["r"] = c.rank;
    r.body["m"] = c.count;
    r.body["min_norm_sq"] = rat(c.min_norm_sq);
    r.body["constant"] = rat(c.constant);
    r.body["discrepancy_max_abs"] = rat(max_abs(c.discrepancy));
    return r;
}

Report cmd_design(const AbelianGroup& g, const Config&) {
    auto lg = build_lg(g);
    auto s = shortest_vectors(lg.lattice);
    Report r{head(g)};
    r.body["verdict"] = spherical_2_design_check(s.vectors, s.min_norm_sq, lg.lattice.basis());
    r.body["m"] = s.vectors.size();
    r.body["r"] = lg.lattice.rank();
    r.body["norm_sq"] = rat(s.min_norm_sq);
    return r;
}

Report cmd_frame(const AbelianGroup& g, const Config&) {
    auto lg = build_lg(g);
    auto s = shortest_vectors(lg.lattice);
    const std::size_t m = s.vectors.size(), rank = lg.lattice.rank();
    const Rational scale = Rational(static_cast<long>(rank)) / (s.min_norm_sq * static_cast<long>(m));
    std::vector<ScaledVector> sv;
    for (const auto& x : s.vectors) sv.push_back({x, scale});
    Report r{head(g)};
    r.body["verdict"] = unt_frame_check(sv, rank, m);
    r.body["m"] = m;
    r.body["r"] = rank;
    r.body["scale_sq"] = rat(scale);
    return r;
}

Report cmd_perfect(const AbelianGroup& g, const Config&) {
    auto p = is_perfect(build_lg(g).lattice);
    Report r{head(g)};
    r.body["perfect"] = p.perfect;
    r.body["rank"] = p.rank;
    r.body["target"] = p.target;
    return r;
}

void put_eutaxy(Report& r, const EutacticResult& e) {
    r.body["eutactic"] = to_string(e.status);
    r.body["optimum"] = e.optimum ? rat(*e.optimum) : Json(nullptr);
    if (e.status == TriState::BudgetExceeded) {
        r.exhausted = true;
        r.body["note"] = e.note;
    }
}

Report cmd_eutactic(const AbelianGroup& g, const Config& cfg) {
    auto e = is_eutactic(build_lg(g).lattice, make_budget(cfg));
    Report r{head(g)};
    put_eutaxy(r, e);
    Json ws = Json::array();
    for (const auto& w : e.weights) ws.push_back({{"vector", vector_json(w.representative)}, {"weight", rat(w.weight)}});
    r.body["weights"] = ws;
    return r;
}

Report cmd_extreme(const AbelianGroup& g, const Config& cfg) {
    auto rep = extremality_certificate(build_lg(g).lattice, make_budget(cfg));
    Report r{head(g)};
    r.body["perfect"] = rep.perfection.perfect;
    r.body["perfection_rank"] = rep.perfection.rank;
    r.body["perfection_target"] = rep.perfection.target;
    put_eutaxy(r, rep.eutaxy);
    r.body["extreme"] = rep.extreme ? Json(*rep.extreme) : Json(nullptr);
    return r;
}

Report cmd_aut(const AbelianGroup& g, const Config& cfg) {
    Report r{head(g)};
    const Budget budget = make_budget(cfg);
    try {
        auto rep = aut_report(g, budget);
        r.body["aut_order"] = num(rep.aut_order);
        r.body["subgroup_order"] = num(rep.subgroup_order);
        r.body["ratio"] = rat(rep.ratio);
    } catch (const BudgetExceeded& e) {
        r.exhausted = true;
        r.body["aut_order"] = nullptr;
        r.body["subgroup_order"] = nullptr;
        r.body["ratio"] = nullptr;
        r.body["aut_order_lower_bound"] = e.lower_bound() ? num(*e.lower_bound()) : Json(nullptr);
        r.body["note"] = e.what();
    }
    r.body["predicted_ratio_one"] = predicted_ratio_one(g.order());
    return r;
}

Report cmd_dual(const AbelianGroup& g, const Config&) {
    auto fam = dual_cosets(g);
    Report r{head(g)};
    const Rational threshold = fraction(g.order() - 1, g.order());
    r.body["threshold"] = rat(threshold);
    r.body["dual_min_equal"] = dual_min_equal(fam);
    std::optional<Rational> least;
    Json cosets = Json::array();
    for (std::size_t i = 0; i < fam.characters.size(); ++i) {
        Json images = Json::array();
        for (const auto& q : fam.characters[i].generator_images) images.push_back(rat(q));
        cosets.push_back({{"character", images},
                          {"order", character_order(fam.characters[i])},
                          {"min_norm_sq", rat(fam.min_norms_sq[i])}});
        if (i > 0 && (!least || fam.min_norms_sq[i] < *least)) least = fam.min_norms_sq[i];
    }
    r.body["min_nonzero_coset_norm_sq"] = least ? rat(*least) : Json(nullptr);
    r.body["cosets"] = cosets;
    return r;
}

using Handler = std::function<Report(const AbelianGroup&, const Config&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h{
        {"build", cmd_build},       {"minvec", cmd_minvec},   {"eutaxy", cmd_eutaxy},
        {"design", cmd_design},     {"frame", cmd_frame},     {"perfect", cmd_perfect},
        {"eutactic", cmd_eutactic}, {"extreme", cmd_extreme}, {"aut", cmd_aut},
        {"dual-check", cmd_dual},
    };
    return h;
}

struct SurveyKind {
    std::string command;
    int min_order;
    std::vector<std::string> columns;
};

const std::map<std::string, SurveyKind>& survey_kinds() {
    static const std::map<std::string, SurveyKind> k{
        {"eutaxy", {"eutaxy", 2, {"group", "n", "kappa", "verdict", "predicted"}}},
        {"aut-ratio", {"aut", 3, {"group", "ratio"}}},
        {"minvec", {"minvec", 2, {"group", "n", "kappa", "min_norm_sq", "count", "formula", "structural_equal"}}},
        {"extreme", {"extreme", 2, {"group", "n", "perfect", "perfection_rank", "perfection_target", "eutactic", "extreme"}}},
        {"dual", {"dual-check", 3, {"group", "n", "threshold", "min_nonzero_coset_norm_sq", "dual_min_equal"}}},
    };
    return k;
}

std::string cell(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void write_csv(std::ostream& out, const std::vector<std::string>& columns, const std::vector<Json>& rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? "," : "") << (row.contains(columns[i]) ? cell(row[columns[i]]) : "");
        out << '\n';
    }
}

void write_text(std::ostream& out, const Json& body) {
    for (const auto& [key, value] : body.items()) {
        if (key == "schema") continue;
        out << key << ": " << cell(value) << '\n';
    }
}

// Scalar fields of a report, in order, for one-row CSV output.
std::vector<std::string> scalar_columns(const Json& body) {
    std::vector<std::string> cols;
    for (const auto& [key, value] : body.items())
        if (!value.is_structured()) cols.push_back(key);
    return cols;
}

int run_group_command(const Config& cfg, std::ostream& out) {
    const AbelianGroup g = AbelianGroup::parse(cfg.group);
    if (g.order() < 2) throw InvalidInput("group must have order >= 2");
    Report r = handlers().at(cfg.command)(g, cfg);
    Json doc = Json::object();
    doc["schema"] = 1;
    doc["command"] = cfg.command;
    for (auto& [k, v] : r.body.items()) doc[k] = v;
    if (cfg.format == "json")
        out << doc.dump(2) << '\n';
    else if (cfg.format == "csv")
        write_csv(out, scalar_columns(doc), {doc});
    else
        write_text(out, doc);
    return r.exhausted ? OutOfBudget : Ok;
}

int run_survey(const Config& cfg, std::ostream& out) {
    if (cfg.max_order < 2) throw InvalidInput("--max-order must be at least 2");
    const auto kind_it = survey_kinds().find(cfg.what);
    if (kind_it == survey_kinds().end()) throw InvalidInput("unknown --what '" + cfg.what + "'");
    const SurveyKind& kind = kind_it->second;
    std::vector<AbelianGroup> groups;
    for (const auto& g : groups_up_to_order(cfg.max_order))
        if (g.order() >= kind.min_order) groups.push_back(g);

    const Handler& handler = handlers().at(kind.command);
    std::vector<Report> reports(groups.size());
    std::vector<std::exception_ptr> failures(groups.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < groups.size();) {
            try {
                reports[i] = handler(groups[i], cfg);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(groups.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);

    bool exhausted = false;
    std::vector<Json> rows;
    for (auto& r : reports) {
        exhausted = exhausted || r.exhausted;
        rows.push_back(std::move(r.body));
    }
    if (cfg.format == "csv") {
        write_csv(out, kind.columns, rows);
    } else if (cfg.format == "json") {
        Json doc = Json::object();
        doc["schema"] = 1;
        doc["command"] = "survey";
        doc["what"] = cfg.what;
        doc["max_order"] = cfg.max_order;
        doc["rows"] = rows;
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < kind.columns.size(); ++i)
                out << (i ? "  " : "") << kind.columns[i] << "=" << cell(row[kind.columns[i]]);
            out << '\n';
        }
    }
    return exhausted ? OutOfBudget : Ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Exact certificates for the lattices L_G of finite Abelian groups", "lgcert"};
    std::vector<std::string> commands;
    for (const auto& [name, h] : handlers()) commands.push_back(name);
    commands.push_back("survey");
    app.add_option("command", cfg.command, "build | minvec | eutaxy | design | frame | perfect | eutactic | extreme | aut | dual-check | survey")
        ->required()
        ->check(CLI::IsMember(commands));
    app.add_option("--group,-g", cfg.group, "cyclic factors, e.g. 2,4 for C2xC4");
    app.add_option("--max-order", cfg.max_order, "survey: largest group order");
    app.add_option("--what", cfg.what, "survey: eutaxy | aut-ratio | minvec | extreme | dual")
        ->check(CLI::IsMember({"eutaxy", "aut-ratio", "minvec", "extreme", "dual"}));
    app.add_option("--format", cfg.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--budget-seconds", cfg.budget_seconds, "time budget per group (0 = unlimited)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--threads", cfg.threads, "survey worker threads")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "lgcert: " << e.what() << '\n';
        return BadInput;
    }

    try {
        if (cfg.command == "survey") return run_survey(cfg, out);
        if (cfg.group.empty()) throw InvalidInput("--group is required for '" + cfg.command + "'");
        return run_group_command(cfg, out);
    } catch (const BudgetExceeded& e) {
        err << "lgcert: budget exceeded: " << e.what() << '\n';
        return OutOfBudget;
    } catch (const InvalidInput& e) {
        err << "lgcert: invalid input: " << e.what() << '\n';
        return BadInput;
    } catch (const Unsupported& e) {
        err << "lgcert: unsupported: " << e.what() << '\n';
        return BadInput;
    } catch (const std::exception& e) {
        err << "lgcert: error: " << e.what() << '\n';
        return InternalError;
    }
}

} // namespace lgcert::cli
