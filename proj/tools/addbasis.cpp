// addbasis CLI: constructions, verification, greedy runs and perfect-basis
// searches over finite fields and abelian groups, with reproducible reports.
//
// Exit codes: 0 = certified / definitive, 1 = violated / inconclusive,
// 2 = usage error. Reports embed the run configuration, tool version and
// modulus table version; identical configurations produce identical bytes.

#include "addbasis/constructions.hpp"
#include "addbasis/greedy.hpp"
#include "addbasis/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace addbasis;

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

struct ConstructArgs {
    std::string group;
    std::string name;
    std::string out;
    std::string d1, d2, d3;
};

int run_construct(const ConstructArgs& a) {
    Group g = Group::parse(a.group);
    std::optional<BasisSet> basis;
    if (a.name == "parabola") {
        basis.emplace(parabola_basis(g));
    } else if (a.name == "hyperbola3") {
        if (g.kind() != GroupKind::field_pair)
            throw std::invalid_argument("hyperbola3 needs a GF(q)^2 group");
        const Field& f = *g.field();
        HyperbolaTriple d = HyperbolaTriple::default_for(f);
        if (!a.d1.empty()) d.d1 = f.parse_element(a.d1);
        if (!a.d2.empty()) d.d2 = f.parse_element(a.d2);
        if (!a.d3.empty()) d.d3 = f.parse_element(a.d3);
        basis.emplace(hyperbola3_basis(g, d));
    } else if (a.name == "shift2") {
        basis.emplace(shift2_canonical(g));
    } else if (a.name == "exhaustive-perfect") {
        SearchResult sr = search_perfect(g);
        if (sr.status == SearchResult::Status::found) {
            basis.emplace(std::move(*sr.basis));
        } else if (sr.status == SearchResult::Status::none) {
            std::cout << "certified-none (" << sr.reason << "): " << g.spec_string()
                      << " has no perfect basis\n";
            return kViolated;
        } else {
            std::cout << "inconclusive: " << sr.reason << "\n";
            return kViolated;
        }
    } else {
        throw std::invalid_argument("unknown construction: " + a.name);
    }
    write_text_atomic(a.out, basis->to_text());
    std::cout << "wrote " << basis->size() << " elements to " << a.out << "\n";
    return kOk;
}

struct VerifyArgs {
    std::string group;
    std::string basis_path;
    std::string mode;  // "", "ordered", "unordered"
    std::int64_t bound = -1;
    bool exclude_zero = false;
    bool perfect = false;
    std::uint64_t window = 0;
    std::string report_path;
    std::string format = "json";
};

RunConfig verify_run_config(const VerifyArgs& a) {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.set("group", a.group);
    cfg.set("basis", a.basis_path);
    if (!a.mode.empty()) cfg.set("mode", a.mode);
    if (a.bound >= 0) cfg.set("bound", std::to_string(a.bound));
    if (a.exclude_zero) cfg.set("exclude-zero", "");
    if (a.perfect) cfg.set("perfect", "");
    if (a.window > 0) cfg.set("window", std::to_string(a.window));
    if (!a.report_path.empty()) cfg.set("report", a.report_path);
    if (a.format != "json") cfg.set("format", a.format);
    return cfg;
}

int run_verify(const VerifyArgs& a) {
    if (a.perfect == (a.bound >= 0))
        throw std::invalid_argument("pass exactly one of --perfect or --bound K");
    Group g = Group::parse(a.group);
    BasisSet basis = BasisSet::read_file(g, a.basis_path);
    // mode defaults: unordered for perfection claims, ordered for bound claims
    CountMode mode = a.mode.empty() ? (a.perfect ? CountMode::unordered : CountMode::ordered)
                                    : count_mode_from_string(a.mode);

    RepReport rep = [&] {
        if (g.finite()) {
            if (a.window > 0) return rep_function_window(basis, mode, g.enumerate(a.window));
            return rep_function(basis, mode);
        }
        if (a.window == 0)
            throw std::invalid_argument("a countable group needs --window N");
        return rep_function_window(basis, mode, g.enumerate(a.window));
    }();

    nlohmann::ordered_json j = rep_report_json(rep);
    j["run_config"] = verify_run_config(a).render();

    bool certified = false;
    nlohmann::ordered_json cert;
    if (a.perfect) {
        if (!g.finite()) throw std::invalid_argument("--perfect needs a finite group");
        PerfectCertificate pc = certify_perfect(basis);
        certified = pc.perfect;
        cert["claim"] = "perfect";
        cert["certified"] = pc.perfect;
        if (!pc.perfect && pc.witness) {
            cert["witness"] = g.render(*pc.witness);
            cert["witness_count"] = pc.witness_count;
            nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
            for (const auto& [x, y] : pc.witness_pairs)
                pairs.push_back(g.render(x) + "+" + g.render(y));
            cert["witness_pairs"] = pairs;
            std::cout << "violated: " << g.render(*pc.witness) << " has " << pc.witness_count
                      << " unordered representations\n";
        }
    } else {
        if (!g.finite()) throw std::invalid_argument("--bound needs a finite group");
        BoundCertificate bc =
            certify_bounded(basis, static_cast<std::uint32_t>(a.bound), a.exclude_zero, mode);
        certified = bc.certified;
        cert["claim"] = "bounded";
        cert["bound"] = a.bound;
        cert["exclude_zero"] = a.exclude_zero;
        cert["certified"] = bc.certified;
        cert["max"] = bc.max;
        cert["argmax"] = bc.argmax ? nlohmann::ordered_json(g.render(*bc.argmax))
                                   : nlohmann::ordered_json(nullptr);
        if (!bc.certified && bc.argmax)
            std::cout << "violated: " << g.render(*bc.argmax) << " has " << bc.max << " > "
                      << a.bound << " representations (" << to_string(mode) << ")\n";
    }
    j["certification"] = cert;

    if (!a.report_path.empty()) {
        if (a.format == "csv")
            write_text_atomic(a.report_path, rep_report_csv(rep));
        else
            write_text_atomic(a.report_path, j.dump(2) + "\n");
    }
    if (certified) std::cout << "certified\n";
    return certified ? kOk : kViolated;
}

struct GreedyArgs {
    std::string group;
    std::uint64_t steps = 0;
    std::uint64_t budget = 1'000'000;
    std::string audit = "final";  // none | final | full
    std::vector<std::string> no_conditions;
    std::string trace_path;
    std::string basis_out;
    std::string report_path;
};

int run_greedy_cmd(const GreedyArgs& a) {
    Group g = Group::parse(a.group);
    GreedyOptions opts;
    opts.candidate_budget = a.budget;
    for (const auto& c : a.no_conditions) {
        if (c.size() != 1 || c[0] < 'a' || c[0] > 'f')
            throw std::invalid_argument("--no-condition takes a letter a..f");
        opts.disabled_conditions += c[0];
    }
    if (a.audit != "none" && a.audit != "final" && a.audit != "full")
        throw std::invalid_argument("--audit must be none, final or full");
    opts.audit_every_step = a.audit == "full";

    GreedyRunResult res = run_greedy(g, a.steps, opts);
    const GreedyState& st = *res.state;

    bool audit_ok = !res.audit_failure.has_value();
    GreedyAudit final_audit;
    if (a.audit == "final" && !res.exhausted) {
        final_audit = st.audit();
        audit_ok = audit_ok && final_audit.ok;
    } else if (res.audit_failure) {
        final_audit = *res.audit_failure;
    }

    if (!a.trace_path.empty()) write_text_atomic(a.trace_path, render_trace(st));
    if (!a.basis_out.empty()) write_text_atomic(a.basis_out, st.to_basis_set().to_text());

    RunConfig cfg;
    cfg.command = "greedy";
    cfg.set("group", a.group);
    cfg.set("steps", std::to_string(a.steps));
    if (a.budget != 1'000'000) cfg.set("budget", std::to_string(a.budget));
    if (a.audit != "final") cfg.set("audit", a.audit);
    for (const auto& c : a.no_conditions) cfg.set("no-condition", c);
    if (!a.trace_path.empty()) cfg.set("trace", a.trace_path);
    if (!a.basis_out.empty()) cfg.set("basis-out", a.basis_out);
    if (!a.report_path.empty()) cfg.set("report", a.report_path);

    nlohmann::ordered_json j;
    j["group"] = g.spec_string();
    j["enumeration"] = g.enumeration_order();
    j["steps_requested"] = a.steps;
    j["steps_done"] = st.cursor();
    j["basis_size"] = st.basis().size();
    j["budget"] = a.budget;
    j["disabled_conditions"] = opts.disabled_conditions;
    j["exhausted"] = res.exhausted;
    if (res.exhausted) {
        j["exhausted_step"] = res.exhausted_step;
        j["exhausted_target"] = res.exhausted_target;
    }
    j["audit"] = a.audit;
    if (a.audit != "none") {
        nlohmann::ordered_json ja;
        ja["ok"] = audit_ok;
        if (!audit_ok && final_audit.collision_element) {
            ja["collision_element"] = g.render(*final_audit.collision_element);
            ja["first_pair"] = g.render(final_audit.collision_first->first) + "+" +
                               g.render(final_audit.collision_first->second);
            ja["second_pair"] = g.render(final_audit.collision_second->first) + "+" +
                                g.render(final_audit.collision_second->second);
        }
        if (!audit_ok && final_audit.uncovered) ja["uncovered"] = g.render(*final_audit.uncovered);
        if (!final_audit.derived_consistent) ja["derived_consistent"] = false;
        if (res.audit_failure) ja["violation_step"] = res.audit_failure_step;
        j["audit_result"] = ja;
    }
    j["run_config"] = cfg.render();
    j["tool_version"] = kToolVersion;
    j["modulus_table_version"] = kModulusTableVersion;
    if (!a.report_path.empty()) write_text_atomic(a.report_path, j.dump(2) + "\n");

    if (res.exhausted) {
        std::cout << "step exhausted at step " << res.exhausted_step << " (target "
                  << res.exhausted_target << ", budget " << a.budget << ")\n";
        return kViolated;
    }
    if (!audit_ok) {
        if (final_audit.collision_element)
            std::cout << "uniqueness violation: " << g.render(*final_audit.collision_element)
                      << " via " << g.render(final_audit.collision_first->first) << "+"
                      << g.render(final_audit.collision_first->second) << " and "
                      << g.render(final_audit.collision_second->first) << "+"
                      << g.render(final_audit.collision_second->second) << "\n";
        else if (final_audit.uncovered)
            std::cout << "coverage violation: " << g.render(*final_audit.uncovered) << "\n";
        else
            std::cout << "derived-set inconsistency\n";
        return kViolated;
    }
    std::cout << "greedy ok: " << st.basis().size() << " elements cover the first " << st.cursor()
              << " enumerated targets\n";
    return kOk;
}

struct SearchArgs {
    std::string group;
    std::uint64_t node_budget = 50'000'000;
    std::uint64_t cap = 40;
    std::string report_path;
    std::string basis_out;
};

int run_search(const SearchArgs& a) {
    Group g = Group::parse(a.group);
    SearchResult sr = search_perfect(g, a.node_budget, a.cap);

    RunConfig cfg;
    cfg.command = "search";
    cfg.set("group", a.group);
    if (a.node_budget != 50'000'000) cfg.set("node-budget", std::to_string(a.node_budget));
    if (a.cap != 40) cfg.set("cap", std::to_string(a.cap));
    if (!a.report_path.empty()) cfg.set("report", a.report_path);
    if (!a.basis_out.empty()) cfg.set("basis-out", a.basis_out);

    nlohmann::ordered_json j;
    j["group"] = g.spec_string();
    j["enumeration"] = g.enumeration_order();
    switch (sr.status) {
        case SearchResult::Status::found: j["status"] = "found"; break;
        case SearchResult::Status::none: j["status"] = "certified-none"; break;
        case SearchResult::Status::inconclusive: j["status"] = "inconclusive"; break;
    }
    if (!sr.reason.empty()) j["reason"] = sr.reason;
    j["nodes"] = sr.nodes;
    if (sr.basis) {
        nlohmann::ordered_json el = nlohmann::ordered_json::array();
        for (const auto& e : sr.basis->elements()) el.push_back(g.render(e));
        j["basis"] = el;
    }
    j["run_config"] = cfg.render();
    j["tool_version"] = kToolVersion;
    j["modulus_table_version"] = kModulusTableVersion;
    if (!a.report_path.empty()) write_text_atomic(a.report_path, j.dump(2) + "\n");

    if (sr.status == SearchResult::Status::found) {
        if (!a.basis_out.empty()) write_text_atomic(a.basis_out, sr.basis->to_text());
        std::cout << "found: ";
        for (const auto& e : sr.basis->elements()) std::cout << g.render(e) << " ";
        std::cout << "\n";
        return kOk;
    }
    if (sr.status == SearchResult::Status::none) {
        std::cout << (sr.reason == "counting" ? "certified-none (counting)" : "certified-none")
                  << "\n";
        return kOk;
    }
    std::cout << "inconclusive: " << sr.reason << "\n";
    return kViolated;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"additive-basis constructions and verification over finite fields and abelian groups"};
    app.require_subcommand(1);

    ConstructArgs ca;
    CLI::App* construct = app.add_subcommand("construct", "build a basis and write it to a file");
    construct->add_option("--group", ca.group, "group spec, e.g. GF(4)^2, Z/6, Z")->required();
    construct->add_option("--name", ca.name, "parabola | shift2 | hyperbola3 | exhaustive-perfect")
        ->required();
    construct->add_option("--out", ca.out, "output basis file")->required();
    construct->add_option("--d1", ca.d1, "hyperbola3 parameter, field element like [1,0]");
    construct->add_option("--d2", ca.d2, "hyperbola3 parameter");
    construct->add_option("--d3", ca.d3, "hyperbola3 parameter");

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "compute representation counts and certify");
    verify->add_option("--group", va.group)->required();
    verify->add_option("--basis", va.basis_path, "basis file")->required();
    verify->add_option("--mode", va.mode, "ordered | unordered");
    verify->add_option("--bound", va.bound, "certify counts <= K");
    verify->add_flag("--exclude-zero", va.exclude_zero, "ignore the zero element for the bound");
    verify->add_flag("--perfect", va.perfect, "certify exactly one unordered representation each");
    verify->add_option("--window", va.window, "first N enumerated elements (countable groups)");
    verify->add_option("--report", va.report_path, "report output path");
    verify->add_option("--format", va.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    GreedyArgs ga;
    CLI::App* greedy = app.add_subcommand("greedy", "run the greedy extension recursion");
    greedy->add_option("--group", ga.group)->required();
    greedy->add_option("--steps", ga.steps)->required();
    greedy->add_option("--budget", ga.budget, "candidates per step (default 1e6)");
    greedy->add_option("--audit", ga.audit, "none | final | full (default final)");
    greedy->add_option("--no-condition", ga.no_conditions, "disable a condition a..f (repeatable)");
    greedy->add_option("--trace", ga.trace_path, "write the per-step trace (TSV)");
    greedy->add_option("--basis-out", ga.basis_out, "write the final basis");
    greedy->add_option("--report", ga.report_path, "write the run report (JSON)");

    SearchArgs sa;
    CLI::App* search = app.add_subcommand("search", "exhaustive perfect-basis search");
    search->add_option("--group", sa.group)->required();
    search->add_option("--node-budget", sa.node_budget, "backtracking node budget");
    search->add_option("--cap", sa.cap, "max group order (default 40)");
    search->add_option("--report", sa.report_path, "write the search report (JSON)");
    search->add_option("--basis-out", sa.basis_out, "write the found basis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*construct) return run_construct(ca);
        if (*verify) return run_verify(va);
        if (*greedy) return run_greedy_cmd(ga);
        if (*search) return run_search(sa);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
