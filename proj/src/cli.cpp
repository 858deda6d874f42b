#include "chainforge/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "chainforge/closed_forms.hpp"
#include "chainforge/diagram.hpp"
#include "chainforge/oracle.hpp"

namespace chainforge {

namespace {

using json = nlohmann::ordered_json;

json owner_json(const WeightTable& t, std::size_t gi) {
    const ChainGroup& g = t.groups[gi];
    if (t.d == 1) return g.owner_layer();
    return json::array({g.owner.a, g.owner.b, g.owner.c});
}

json point_json(const Point& p) {
    json arr = json::array();
    for (int v : p.digits) arr.push_back(v);
    return arr;
}

json point_set_json(const PointSet& s) {
    json arr = json::array();
    for (const Point& p : s.points) arr.push_back(point_json(p));
    return arr;
}

json weight_table_json(const WeightTable& t, bool with_footprints = false) {
    json doc;
    doc["n"] = t.n;
    doc["d"] = t.d;
    doc["k"] = t.k;
    doc["style"] = t.style == FootprintStyle::Basic ? "basic" : "anti";
    json entries = json::array();
    for (std::size_t gi = 0; gi < t.groups.size(); ++gi) {
        json e;
        e["owner"] = owner_json(t, gi);
        e["width"] = t.groups[gi].width;
        e["full_width"] = t.groups[gi].full_width;
        if (t.style == FootprintStyle::Basic) e["count"] = group_count(t.groups[gi]).to_string();
        e["W"] = t.weights[gi].to_fraction_string();
        if (with_footprints) {
            json fp = json::array();
            for (const TypeTriple& ty : footprint(t.groups[gi], t.style)) {
                if (t.d == 1) {
                    fp.push_back(ty.layer());
                } else {
                    fp.push_back(json::array({ty.a, ty.b, ty.c}));
                }
            }
            e["footprint"] = std::move(fp);
        }
        entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    return doc;
}

std::string weight_table_csv(const WeightTable& t) {
    std::string out = t.d == 1 ? "layer,width,full_width,count,W\r\n" : "a,b,c,width,full_width,count,W\r\n";
    for (std::size_t gi = 0; gi < t.groups.size(); ++gi) {
        const ChainGroup& g = t.groups[gi];
        std::string count = t.style == FootprintStyle::Basic ? group_count(g).to_string() : "";
        if (t.d == 1) {
            out += std::to_string(g.owner_layer());
        } else {
            out += std::to_string(g.owner.a) + "," + std::to_string(g.owner.b) + "," +
                   std::to_string(g.owner.c);
        }
        out += "," + std::to_string(g.width) + "," + (g.full_width ? "1" : "0") + "," + count +
               "," + t.weights[gi].to_fraction_string() + "\r\n";
    }
    return out;
}

json induced_report_json(const InducedReport& rep, const WeightTable& t) {
    json doc;
    doc["mode"] = rep.mode == InducedMode::Type ? "type" : "point";
    doc["n"] = rep.n;
    doc["d"] = rep.d;
    doc["k"] = rep.k;
    doc["style"] = t.style == FootprintStyle::Basic ? "basic" : "anti";
    doc["ok"] = rep.ok();
    doc["max_abs_deviation"] = rep.max_abs_deviation.to_fraction_string();
    json devs = json::array();
    for (const InducedDeviation& dv : rep.deviations) {
        json e;
        if (rep.d == 1) {
            e["type"] = dv.type.layer();
        } else {
            e["type"] = json::array({dv.type.a, dv.type.b, dv.type.c});
        }
        if (rep.mode == InducedMode::Point) e["point"] = point_json(dv.point);
        e["induced"] = dv.induced.to_fraction_string();
        devs.push_back(std::move(e));
    }
    doc["deviations"] = std::move(devs);
    return doc;
}

json property_report_json(const PropertyReport& rep) {
    json doc;
    doc["lemma"] = rep.lemma;
    doc["n"] = rep.n;
    doc["k"] = rep.k;
    doc["status"] = rep.status;
    if (!rep.note.empty()) doc["note"] = rep.note;
    doc["instances"] = rep.instances;
    if (rep.counterexample.empty()) {
        doc["counterexample"] = nullptr;
    } else {
        doc["counterexample"] = rep.counterexample;
    }
    return doc;
}

json verdict_json(const Verdict& v) {
    json doc;
    doc["n"] = v.n;
    doc["d"] = v.d;
    doc["k"] = v.k;
    doc["mis"] = v.mis_size;
    doc["candidate"] = v.candidate_size.to_string();
    if (v.unique.has_value()) {
        doc["unique"] = *v.unique;
    } else {
        doc["unique"] = nullptr;
    }
    doc["status"] = v.status;
    doc["proven"] = v.proven;
    if (!v.proven) doc["label"] = "UNPROVEN";
    if (v.maximum_set_count) doc["maximum_set_count"] = *v.maximum_set_count;
    if (v.predicted_sets_match) doc["predicted_sets_match"] = *v.predicted_sets_match;
    if (v.enumeration_truncated) doc["enumeration_truncated"] = true;
    if (!v.note.empty()) doc["note"] = v.note;
    doc["witness"] = point_set_json(v.witness);
    return doc;
}

struct OutputSink {
    std::string path;  // empty = stdout

    void write(std::ostream& fallback, const std::string& data) const {
        if (path.empty()) {
            fallback << data;
            if (!data.empty() && data.back() != '\n') fallback << '\n';
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        file << data;
    }
};

int finish(std::ostream& out, const OutputSink& sink, const std::string& command,
           const json& params, const std::string& status, json payload,
           std::chrono::steady_clock::time_point started) {
    json doc;
    doc["command"] = command;
    doc["parameters"] = params;
    doc["status"] = status;
    doc["payload"] = std::move(payload);
    doc["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
    sink.write(out, doc.dump(2));
    return status == "pass" ? 0 : (status == "fail" ? 1 : 2);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chainforge: weighted chain decompositions of {0..d}^n, their closed forms, "
                 "and exact extremal-set oracles"};
    app.require_subcommand(1);

    // shared options
    int n = 0, k = 1, d = 2;
    int jobs = 1;
    unsigned long long seed = 0;
    std::string style_name = "basic";
    std::string format = "json";
    std::string out_path;
    long long budget_override = -1;
    bool allow_big = false;

    auto add_common = [&](CLI::App* cmd, bool with_d) {
        cmd->add_option("--n", n, "side parameter n")->required();
        if (with_d) cmd->add_option("--d", d, "alphabet bound d")->check(CLI::Range(1, 8));
        cmd->add_option("--k", k, "width parameter k");
        cmd->add_option("--jobs", jobs, "worker cap for parallel scans")->check(CLI::Range(1, 64));
        cmd->add_option("--seed", seed, "seed for randomized drivers (default 0)");
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
        cmd->add_option("--budget", budget_override, "override the oracle vertex budget");
        cmd->add_flag("--allow-big", allow_big, "acknowledge a budget above the defaults");
        return cmd;
    };

    // weights
    auto* cmd_weights = add_common(app.add_subcommand("weights", "compute a weight table"), true);
    bool check_order = false;
    bool with_footprints = false;
    cmd_weights->add_option("--style", style_name, "footprint family: basic or anti")
        ->check(CLI::IsMember({"basic", "anti"}));
    cmd_weights->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd_weights
        ->add_flag("--check-order-invariance", check_order,
                   "also reassign with seed-shuffled tie order and compare");
    cmd_weights->add_flag("--with-footprints", with_footprints,
                          "include each group's type footprint in the entries");

    // verify-induced
    auto* cmd_induced =
        add_common(app.add_subcommand("verify-induced", "check induced weights"), true);
    std::string mode_name = "type";
    cmd_induced->add_option("--mode", mode_name, "type or point")->check(CLI::IsMember({"type", "point"}));
    cmd_induced->add_option("--style", style_name, "footprint family")->check(CLI::IsMember({"basic", "anti"}));

    // verify-lemmas
    auto* cmd_lemmas =
        add_common(app.add_subcommand("verify-lemmas", "run closed-form and inequality checkers"), false);
    std::string lemma_name = "all";
    cmd_lemmas->add_option("--lemma", lemma_name, "lemma name or 'all'");

    // oracle
    auto* cmd_oracle = add_common(app.add_subcommand("oracle", "exact maximum independent set"), true);
    bool do_enumerate = false;
    std::size_t cap = 10000;
    cmd_oracle->add_flag("--enumerate", do_enumerate, "enumerate all maximum sets");
    cmd_oracle->add_option("--cap", cap, "enumeration cap");

    // certify
    auto* cmd_certify =
        add_common(app.add_subcommand("certify", "compare the oracle against the residue construction"), true);
    bool with_unique = false;
    cmd_certify->add_flag("--unique", with_unique, "also enumerate maximum sets and compare");
    cmd_certify->add_option("--cap", cap, "enumeration cap");

    // sperner
    auto* cmd_sperner =
        add_common(app.add_subcommand("sperner", "weighted symmetric chains of the subset lattice"), false);
    bool sperner_oracle = false;
    cmd_sperner->add_flag("--with-oracle", sperner_oracle, "cross-check against the oracle (small n)");

    // diagram
    auto* cmd_diagram = app.add_subcommand("diagram", "staircase diagrams");
    std::string diagram_mode = "plain";
    int cell_a = 0, cell_c = 0;
    cmd_diagram->add_option("--n", n, "side parameter n")->required();
    cmd_diagram->add_option("--k", k, "width parameter k");
    cmd_diagram->add_option("--mode", diagram_mode, "plain, footprint or contributions")
        ->check(CLI::IsMember({"plain", "footprint", "contributions"}));
    cmd_diagram->add_option("--a", cell_a, "type zero count");
    cmd_diagram->add_option("--c", cell_c, "type two count");
    cmd_diagram->add_option("--format", format, "svg or ascii")->check(CLI::IsMember({"svg", "ascii"}));
    cmd_diagram->add_option("--out", out_path, "write to file");

    // asymptotics
    auto* cmd_asym = app.add_subcommand("asymptotics", "residue-class density against 1/(2k+1)");
    std::vector<int> n_list;
    unsigned digits = 30;
    cmd_asym->add_option("--k", k, "width parameter k")->required();
    cmd_asym->add_option("--n", n_list, "n values (repeatable)")->required();
    cmd_asym->add_option("--digits", digits, "decimal digits reported")->check(CLI::Range(1u, 200u));
    cmd_asym->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd_asym->add_option("--out", out_path, "write to file");

    // conjecture
    auto* cmd_conj =
        add_common(app.add_subcommand("conjecture", "residue construction beyond the proven alphabet"), true);
    std::string variant_name = "floor";
    cmd_conj->add_option("--variant", variant_name, "floor or ceil")->check(CLI::IsMember({"floor", "ceil"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Budget budget = Budget::from_env();
    if (budget_override > 0) {
        Budget defaults;
        if (static_cast<std::size_t>(budget_override) > defaults.max_graph_vertices && !allow_big) {
            err << "budget " << budget_override << " exceeds the default "
                << defaults.max_graph_vertices << "; pass --allow-big to acknowledge\n";
            return 2;
        }
        budget.max_graph_vertices = static_cast<std::size_t>(budget_override);
        budget.max_enum_vertices = static_cast<std::size_t>(budget_override);
    }

    const OutputSink sink{out_path};
    const auto started = std::chrono::steady_clock::now();
    const FootprintStyle style =
        style_name == "anti" ? FootprintStyle::AntiBasic : FootprintStyle::Basic;

    try {
        if (cmd_weights->parsed()) {
            json params = {{"n", n}, {"d", d}, {"k", k}, {"style", style_name}};
            if (d != 1 && d != 2) throw std::invalid_argument("weights: d must be 1 or 2");
            WeightTable table = assign_weights_generic(n, d, k, style);
            std::string status = "pass";
            json payload = weight_table_json(table, with_footprints);
            if (check_order) {
                WeightTable shuffled = assign_weights_generic(n, d, k, style, seed);
                payload["order_invariant"] = table.same_weights(shuffled);
                if (!table.same_weights(shuffled)) status = "fail";
            }
            if (format == "csv") {
                sink.write(out, weight_table_csv(table));
                return status == "pass" ? 0 : 1;
            }
            return finish(out, sink, "weights", params, status, std::move(payload), started);
        }

        if (cmd_induced->parsed()) {
            json params = {{"n", n}, {"d", d}, {"k", k}, {"mode", mode_name}, {"style", style_name}};
            WeightTable table = assign_weights_generic(n, d, k, style);
            InducedReport rep = verify_induced(
                table, mode_name == "type" ? InducedMode::Type : InducedMode::Point, budget, jobs);
            return finish(out, sink, "verify-induced", params, rep.ok() ? "pass" : "fail",
                          induced_report_json(rep, table), started);
        }

        if (cmd_lemmas->parsed()) {
            json params = {{"n", n}, {"k", k}, {"lemma", lemma_name}};
            std::vector<std::string> names;
            if (lemma_name == "all") {
                names = all_lemma_names();
            } else {
                names.push_back(lemma_name);
            }
            std::vector<PropertyReport> reports(names.size());
            if (jobs > 1) {
                std::vector<std::future<PropertyReport>> futs;
                futs.reserve(names.size());
                for (const std::string& name : names) {
                    futs.push_back(std::async(std::launch::async,
                                              [&, name] { return check_lemma(name, n, k); }));
                }
                for (std::size_t i = 0; i < futs.size(); ++i) reports[i] = futs[i].get();
            } else {
                for (std::size_t i = 0; i < names.size(); ++i) reports[i] = check_lemma(names[i], n, k);
            }
            bool all_pass = true;
            json payload = json::array();
            for (const PropertyReport& rep : reports) {
                all_pass = all_pass && rep.passed();
                payload.push_back(property_report_json(rep));
            }
            return finish(out, sink, "verify-lemmas", params, all_pass ? "pass" : "fail",
                          std::move(payload), started);
        }

        if (cmd_oracle->parsed()) {
            json params = {{"n", n}, {"d", d}, {"k", k}, {"enumerate", do_enumerate}};
            ConflictGraph g = build_conflict_graph(n, d, k, budget);
            MisResult mis = max_independent_set(g);
            json payload;
            payload["n"] = n;
            payload["d"] = d;
            payload["k"] = k;
            payload["vertices"] = g.vertices;
            payload["edges"] = g.edge_count;
            payload["mis"] = mis.size;
            payload["witness"] = point_set_json(mis.witness);
            std::string status = validate_set(mis.witness, k) ? "fail" : "pass";
            if (do_enumerate) {
                bool truncated = false;
                auto sets = enumerate_maximum_sets(g, cap, truncated);
                payload["maximum_set_count"] = sets.size();
                payload["truncated"] = truncated;
                if (!truncated) {
                    json arr = json::array();
                    for (const PointSet& s : sets) arr.push_back(point_set_json(s));
                    payload["all_solutions"] = std::move(arr);
                }
            }
            return finish(out, sink, "oracle", params, status, std::move(payload), started);
        }

        if (cmd_certify->parsed()) {
            json params = {{"n", n}, {"d", d}, {"k", k}, {"unique", with_unique}};
            Verdict v = certify_theorem(n, d, k, budget, with_unique, cap);
            std::string status = v.status == "PASS" ? "pass" : (v.status == "FAIL" ? "fail" : "incomplete");
            return finish(out, sink, "certify", params, status, verdict_json(v), started);
        }

        if (cmd_sperner->parsed()) {
            json params = {{"n", n}};
            WeightTable table = sperner_table(n);
            InducedReport induced = verify_induced(table, InducedMode::Type);
            auto nonpos = positivity_report(table);
            Rational bound = total_weight(table);
            bool ok = induced.ok() && nonpos.empty() &&
                      bound == Rational(binomial(n, n / 2));
            json payload;
            payload["n"] = n;
            payload["bound"] = bound.to_fraction_string();
            payload["middle_binomial"] = binomial(n, n / 2).to_string();
            payload["all_positive"] = nonpos.empty();
            payload["induced_ok"] = induced.ok();
            json entries = json::array();
            for (std::size_t gi = 0; gi < table.groups.size(); ++gi) {
                const ChainGroup& g = table.groups[gi];
                json e;
                e["layer"] = g.owner_layer();
                e["chain_length"] = g.width + 1;
                e["chain_count"] = group_count(g).to_string();
                e["group_weight"] = table.weights[gi].to_fraction_string();
                e["per_chain_weight"] = table.per_chain_weight(gi).to_fraction_string();
                entries.push_back(std::move(e));
            }
            payload["entries"] = std::move(entries);
            if (sperner_oracle) {
                Verdict v = certify_theorem(n, 1, n, budget, true, cap);
                payload["oracle"] = verdict_json(v);
                ok = ok && v.status == "PASS";
            }
            return finish(out, sink, "sperner", params, ok ? "pass" : "fail", std::move(payload),
                          started);
        }

        if (cmd_diagram->parsed()) {
            DiagramSpec spec;
            if (diagram_mode == "plain") {
                spec = diagram_plain(n);
            } else if (diagram_mode == "footprint") {
                spec = diagram_footprint(n, k, cell_a, cell_c);
            } else {
                spec = diagram_contributions(n, k, cell_a, cell_c);
            }
            sink.write(out, format == "ascii" ? render_staircase_ascii(spec)
                                              : render_staircase_svg(spec));
            return 0;
        }

        if (cmd_asym->parsed()) {
            json params = {{"d", 2}, {"k", k}};
            const Rational target(BigInt(1), BigInt(2 * k + 1));
            const Rational threshold(BigInt(1), BigInt::pow(BigInt(10), 10));
            json rows = json::array();
            std::string csv = "n,candidate,ratio,target,deviation,within_1e-10\r\n";
            for (int nv : n_list) {
                if (nv < 1 || nv > 2000) throw std::invalid_argument("asymptotics: n must be in [1, 2000]");
                BigInt size = candidate_set_size(nv, 2, k, CandidateVariant::Floor);
                Rational ratio(size, BigInt::pow(BigInt(3), static_cast<unsigned>(nv)));
                Rational deviation = (ratio - target).abs();
                bool within = deviation < threshold;
                json row;
                row["n"] = nv;
                row["candidate"] = size.to_string();
                row["ratio"] = ratio.to_fraction_string();
                row["target"] = target.to_fraction_string();
                row["deviation"] = deviation.to_decimal_string(digits);
                row["within_1e-10"] = within;
                rows.push_back(row);
                csv += std::to_string(nv) + "," + size.to_string() + "," + ratio.to_fraction_string() +
                       "," + target.to_fraction_string() + "," + deviation.to_decimal_string(digits) +
                       "," + (within ? "1" : "0") + "\r\n";
            }
            if (format == "csv") {
                sink.write(out, csv);
                return 0;
            }
            json payload;
            payload["d"] = 2;
            payload["k"] = k;
            payload["rows"] = std::move(rows);
            return finish(out, sink, "asymptotics", params, "pass", std::move(payload), started);
        }

        if (cmd_conj->parsed()) {
            json params = {{"n", n}, {"d", d}, {"k", k}, {"variant", variant_name}};
            CandidateVariant variant =
                variant_name == "ceil" ? CandidateVariant::Ceil : CandidateVariant::Floor;
            PointSet cand = build_candidate_set(n, d, k, variant);
            if (validate_set(cand, k)) throw std::logic_error("conjecture: residue class is not independent");
            ConflictGraph g = build_conflict_graph(n, d, k, budget);
            MisResult mis = max_independent_set(g);
            json payload;
            payload["n"] = n;
            payload["d"] = d;
            payload["k"] = k;
            payload["variant"] = variant_name;
            payload["proven"] = d <= 2;
            if (d > 2) payload["label"] = "UNPROVEN";
            payload["candidate"] = cand.points.size();
            payload["mis"] = mis.size;
            payload["matches"] = mis.size == static_cast<int>(cand.points.size());
            bool ok = mis.size == static_cast<int>(cand.points.size());
            return finish(out, sink, "conjecture", params, ok ? "pass" : "fail", std::move(payload),
                          started);
        }
    } catch (const BudgetError& e) {
        err << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand selected\n";
    return 2;
}

}  // namespace chainforge
