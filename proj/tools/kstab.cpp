// kstab — exact stability certificates for polynomial Poisson structures
// and fiberwise-linear algebroid bivectors, plus the floating-point
// perturbation experiment. See README.md for the input formats.
//
// Exit codes: 0 = Certified / success, 1 = NotCertified / Undecided /
// not all singular points found, 2 = input or precondition error.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kstab/analysis3d.hpp"
#include "kstab/cohomology.hpp"
#include "kstab/dsl.hpp"
#include "kstab/errors.hpp"
#include "kstab/fibered.hpp"
#include "kstab/io.hpp"
#include "kstab/liealg.hpp"
#include "kstab/perturb.hpp"
#include "kstab/registry.hpp"

using namespace kstab;
using ordered_json = nlohmann::ordered_json;

namespace {

// ---- shared option state ---------------------------------------------------

struct Opts {
    // input selection
    std::string example;  // positional registry spec
    std::string expr;
    std::string file;
    std::string name;     // entry of a multi-entry document
    int dim = 0;          // explicit dimension for --expr
    int base = 0;         // fibered split for --expr
    int fiber = 0;
    // command parameters
    int k = 0;
    std::string s_range;
    int bound = 0;
    int trials = 100;
    std::string eps = "0.001";
    std::uint64_t seed = 2024;
    int p = 1;
    std::string coeff;    // "rep" | "trivial"
    bool lin = false;
    // output
    std::string report;
    std::string format = "table";
};

struct LoadedInput {
    InputDocument doc;
    ordered_json source;  // {"kind":..., "value":...} for the report envelope
    std::optional<int> k; // registry default order
};

// ---- input resolution ------------------------------------------------------

LoadedInput load_input(const Opts& o) {
    int given = (!o.example.empty() ? 1 : 0) + (!o.expr.empty() ? 1 : 0) +
                (!o.file.empty() ? 1 : 0);
    if (given != 1)
        throw InvalidInput("provide exactly one input: a built-in example name, "
                           "--expr STRING, or --input FILE");
    LoadedInput out;
    if (!o.example.empty()) {
        if (o.dim || o.base || o.fiber)
            throw InvalidInput("--dim/--base/--fiber apply to --expr input only");
        RegistryExample ex = registry_example(o.example);
        out.doc = std::move(ex.doc);
        out.k = ex.k;
        out.source = {{"kind", "example"}, {"value", ex.name}};
        return out;
    }
    if (!o.expr.empty()) {
        if ((o.base > 0) != (o.fiber > 0))
            throw InvalidInput("--base and --fiber must be given together");
        if (o.base > 0) {
            FiberedSpace fs{o.base, o.fiber};
            if (o.dim && o.dim != fs.n())
                throw InvalidInput("--dim disagrees with --base + --fiber");
            out.doc.n = fs.n();
            out.doc.fibered = fs;
            out.doc.multivectors.emplace_back("pi", parse_mvf_fibered(o.expr, fs));
        } else {
            MultiVector mv = parse_mvf(o.expr, o.dim);
            out.doc.n = mv.dim();
            out.doc.multivectors.emplace_back("pi", std::move(mv));
        }
        out.source = {{"kind", "expr"}, {"value", o.expr}};
        return out;
    }
    if (o.dim || o.base || o.fiber)
        throw InvalidInput("--dim/--base/--fiber apply to --expr input only; "
                           "documents carry their own dimension");
    std::ifstream in(o.file);
    if (!in) throw InvalidInput("cannot open input file '" + o.file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    out.doc = load_document(ss.str());
    out.source = {{"kind", "file"}, {"value", o.file}};
    return out;
}

const MultiVector& pick_mv(const LoadedInput& li, const std::string& name) {
    if (!name.empty()) {
        const MultiVector* p = li.doc.find(name);
        if (!p) throw InvalidInput("the input has no multivector named '" + name + "'");
        return *p;
    }
    if (const MultiVector* p = li.doc.find("pi")) return *p;
    if (li.doc.multivectors.size() == 1) return li.doc.multivectors[0].second;
    if (li.doc.multivectors.empty())
        throw InvalidInput("the input contains no multivector");
    throw InvalidInput("the input contains several multivectors; pick one with --name");
}

// Order k: explicit flag (cross-checked against the input's homogeneity when
// `strict`), else the registry default, else the inferred homogeneity.
int resolve_k(int flag_k, const LoadedInput& li, const MultiVector& mv, bool strict) {
    if (flag_k != 0) {
        if (flag_k < 1) throw InvalidInput("--k must be a positive integer");
        if (strict && !mv.is_zero()) {
            int h = infer_homogeneity(mv);
            if (h != flag_k)
                throw InvalidInput("--k " + std::to_string(flag_k) +
                                   " given, but the structure is homogeneous of "
                                   "order " + std::to_string(h));
        }
        return flag_k;
    }
    if (li.k) return *li.k;
    return infer_homogeneity(mv);
}

std::pair<int, int> parse_s_range(const std::string& text, int k) {
    if (text.empty()) return {0, k - 1};
    auto bad = [&]() -> std::pair<int, int> {
        throw InvalidInput("cannot parse --s-range '" + text +
                           "' (expected A..B with integers 0 <= A <= B)");
    };
    try {
        auto dots = text.find("..");
        int a, b;
        if (dots == std::string::npos) {
            std::size_t used = 0;
            a = b = std::stoi(text, &used);
            if (used != text.size()) return bad();
        } else {
            std::size_t ua = 0, ub = 0;
            std::string head = text.substr(0, dots), tail = text.substr(dots + 2);
            a = std::stoi(head, &ua);
            b = std::stoi(tail, &ub);
            if (ua != head.size() || ub != tail.size()) return bad();
        }
        if (a < 0 || b < a) return bad();
        return {a, b};
    } catch (const InvalidInput&) {
        throw;
    } catch (const std::exception&) {
        return bad();
    }
}

double parse_eps(const std::string& text) {
    try {
        double v = 0;
        if (text.find('/') != std::string::npos) {
            v = Rational::parse(text).to_double();
        } else {
            std::size_t used = 0;
            v = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument("trailing");
        }
        if (!(v >= 0) || !std::isfinite(v))
            throw std::invalid_argument("range");
        return v;
    } catch (const std::exception&) {
        throw InvalidInput("cannot parse --eps '" + text +
                           "' (expected a fraction p/q or a decimal >= 0)");
    }
}

std::vector<std::string> var_names(const InputDocument& doc) {
    if (!doc.fibered) return default_var_names(doc.n);
    std::vector<std::string> v;
    for (int i = 1; i <= doc.fibered->d; ++i) v.push_back("x" + std::to_string(i));
    for (int u = 1; u <= doc.fibered->rf; ++u) v.push_back("y" + std::to_string(u));
    return v;
}

FiberedStructure fibered_structure(const LoadedInput& li, const MultiVector& mv,
                                   int k) {
    if (!li.doc.fibered)
        throw InvalidInput("this command needs a fibered input: use a fibered "
                           "example, --base/--fiber with --expr, or a document "
                           "with a 'fibered' block");
    return FiberedStructure::of(mv, *li.doc.fibered, k);
}

// ---- output plumbing -------------------------------------------------------

int finish(const Opts& o, const ordered_json& machine, const std::string& table,
           int rc) {
    if (o.format == "machine")
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << table;
    if (!o.report.empty()) {
        std::ofstream f(o.report);
        if (!f) throw InvalidInput("cannot write report file '" + o.report + "'");
        f << machine.dump(2) << "\n";
    }
    return rc;
}

ordered_json envelope(const char* command, const LoadedInput* li) {
    ordered_json j;
    j["format"] = "kstab-report-1";
    j["command"] = command;
    if (li) {
        ordered_json in = li->source;
        in["dimension"] = li->doc.n;
        if (li->doc.fibered) {
            in["fibered"] = {{"base", li->doc.fibered->d},
                             {"fiber", li->doc.fibered->rf}};
        }
        j["input"] = std::move(in);
    }
    return j;
}

ordered_json slice_json(const CohomologyReport& r,
                        const std::vector<std::string>& vars) {
    ordered_json j;
    j["s"] = r.s;
    j["k"] = r.k;
    j["dim_v1"] = r.dim_v1;
    j["dim_v2"] = r.dim_v2;
    j["dim_v3"] = r.dim_v3;
    j["dim_ker"] = r.dim_ker;
    j["dim_im"] = r.dim_im;
    j["dim_h"] = r.dim_h;
    if (r.witness) j["witness"] = r.witness->str(vars);
    return j;
}

void slice_table(std::ostringstream& os, const std::vector<CohomologyReport>& rs,
                 const std::vector<std::string>& vars) {
    os << "    s  dim V1  dim V2  dim V3  dim ker  dim im  dim H  witness\n";
    for (const CohomologyReport& r : rs) {
        os << std::setw(5) << r.s << std::setw(8) << r.dim_v1 << std::setw(8)
           << r.dim_v2 << std::setw(8) << r.dim_v3 << std::setw(9) << r.dim_ker
           << std::setw(8) << r.dim_im << std::setw(7) << r.dim_h << "  "
           << (r.witness ? r.witness->str(vars) : "-") << "\n";
    }
}

void isolation_table(std::ostringstream& os, const IsolationVerdict& iv) {
    os << "  degree  rank  dim\n";
    for (const IsolationSlice& sl : iv.table)
        os << std::setw(8) << sl.degree << std::setw(6) << sl.rank << std::setw(5)
           << sl.dim << "\n";
    if (iv.outcome == IsolationOutcome::Isolated)
        os << "isolation: Isolated (first full slice at degree "
           << iv.isolated_degree << ")\n";
    else
        os << "isolation: Undecided (no full slice up to degree " << iv.bound
           << ")\n";
}

ordered_json isolation_json(const IsolationVerdict& iv) {
    ordered_json j;
    j["outcome"] = isolation_name(iv.outcome);
    j["isolated_degree"] = iv.isolated_degree;
    j["bound"] = iv.bound;
    ordered_json rows = ordered_json::array();
    for (const IsolationSlice& sl : iv.table)
        rows.push_back({{"degree", sl.degree}, {"rank", sl.rank}, {"dim", sl.dim}});
    j["table"] = std::move(rows);
    return j;
}

void input_header(std::ostringstream& os, const LoadedInput& li,
                  const MultiVector& mv, const std::vector<std::string>& vars) {
    os << "input: " << li.source["value"].get<std::string>() << " (R^" << li.doc.n;
    if (li.doc.fibered)
        os << ", fibered " << li.doc.fibered->d << "+" << li.doc.fibered->rf;
    os << ")\n";
    os << "pi = " << mv.str(vars) << "\n";
}

// ---- subcommands -----------------------------------------------------------

int run_certify(const Opts& o) {
    LoadedInput li = load_input(o);
    const MultiVector& mv = pick_mv(li, o.name);
    resolve_k(o.k, li, mv, /*strict=*/true); // validates --k against the input
    StabilityCertificate cert = stability_certificate(mv);
    std::vector<std::string> vars = var_names(li.doc);

    ordered_json j = envelope("certify", &li);
    j["k"] = cert.k;
    j["jacobi"] = cert.jacobi_ok;
    j["verdict"] = verdict_name(cert.verdict);
    ordered_json slices = ordered_json::array();
    for (const CohomologyReport& r : cert.reports) slices.push_back(slice_json(r, vars));
    j["slices"] = std::move(slices);

    std::ostringstream os;
    input_header(os, li, mv, vars);
    os << "order: k = " << cert.k << "\n";
    os << "jacobi identity: " << (cert.jacobi_ok ? "holds" : "fails") << "\n\n";
    slice_table(os, cert.reports, vars);
    os << "\nverdict: " << verdict_name(cert.verdict) << "\n";
    return finish(o, j, os.str(), cert.verdict == Verdict::Certified ? 0 : 1);
}

int run_cohomology(const Opts& o) {
    LoadedInput li = load_input(o);
    const MultiVector& mv = pick_mv(li, o.name);
    int k = resolve_k(o.k, li, mv, /*strict=*/true);
    auto [s_lo, s_hi] = parse_s_range(o.s_range, k);
    std::vector<std::string> vars = var_names(li.doc);

    std::vector<CohomologyReport> rs;
    if (o.lin) {
        FiberedStructure Pi = fibered_structure(li, mv, k);
        for (int s = s_lo; s <= s_hi; ++s) rs.push_back(lin_cohomology(Pi, s));
    } else {
        HomogeneousMultiVector pi_k = HomogeneousMultiVector::of(mv, k);
        for (int s = s_lo; s <= s_hi; ++s) rs.push_back(lp_cohomology(pi_k, s));
    }

    ordered_json j = envelope("cohomology", &li);
    j["k"] = k;
    j["complex"] = o.lin ? "fiberwise-linear" : "full";
    ordered_json slices = ordered_json::array();
    for (const CohomologyReport& r : rs) slices.push_back(slice_json(r, vars));
    j["slices"] = std::move(slices);

    std::ostringstream os;
    input_header(os, li, mv, vars);
    os << "complex: " << (o.lin ? "fiberwise-linear" : "full Lichnerowicz-Poisson")
       << ", order k = " << k << "\n\n";
    slice_table(os, rs, vars);
    return finish(o, j, os.str(), 0);
}

int run_algebroid_certify(const Opts& o) {
    LoadedInput li = load_input(o);
    const MultiVector& mv = pick_mv(li, o.name);
    int k = resolve_k(o.k, li, mv, /*strict=*/true);
    FiberedStructure Pi = fibered_structure(li, mv, k);
    StabilityCertificate cert = algebroid_certificate(Pi);
    std::vector<std::string> vars = var_names(li.doc);

    ordered_json j = envelope("algebroid-certify", &li);
    j["k"] = cert.k;
    j["jacobi"] = cert.jacobi_ok;
    j["complex"] = "fiberwise-linear";
    j["verdict"] = verdict_name(cert.verdict);
    ordered_json slices = ordered_json::array();
    for (const CohomologyReport& r : cert.reports) slices.push_back(slice_json(r, vars));
    j["slices"] = std::move(slices);

    std::ostringstream os;
    input_header(os, li, mv, vars);
    os << "complex: fiberwise-linear, order k = " << cert.k << "\n";
    os << "jacobi identity: " << (cert.jacobi_ok ? "holds" : "fails") << "\n\n";
    slice_table(os, cert.reports, vars);
    os << "\nverdict: " << verdict_name(cert.verdict) << "\n";
    return finish(o, j, os.str(), cert.verdict == Verdict::Certified ? 0 : 1);
}

int run_ce(const Opts& o) {
    LoadedInput li = load_input(o);
    if (!li.doc.algebra)
        throw InvalidInput("Chevalley-Eilenberg cohomology needs a Lie algebra "
                           "block in the input (or a registry example that "
                           "carries one)");
    std::string coeff = o.coeff;
    if (coeff.empty()) coeff = li.doc.representation ? "rep" : "trivial";
    Representation rep = [&]() {
        if (coeff == "trivial") return Representation::trivial(*li.doc.algebra, 1);
        if (coeff == "rep") {
            if (!li.doc.representation)
                throw InvalidInput("--coeff rep needs a representation block in "
                                   "the input");
            return *li.doc.representation;
        }
        throw InvalidInput("--coeff must be 'trivial' or 'rep'");
    }();
    CEReport r = ce_cohomology(rep, o.p);

    ordered_json j = envelope("ce", &li);
    j["p"] = r.p;
    j["coefficients"] = coeff == "rep" ? "representation" : "trivial";
    j["module_dim"] = rep.module_dim();
    j["dim_v1"] = r.dim_v1;
    j["dim_v2"] = r.dim_v2;
    j["dim_v3"] = r.dim_v3;
    j["dim_ker"] = r.dim_ker;
    j["dim_im"] = r.dim_im;
    j["dim_h"] = r.dim_h;
    if (r.witness) {
        ordered_json w = ordered_json::array();
        for (const Rational& c : *r.witness) w.push_back(c.str());
        j["witness"] = std::move(w);
    }

    std::ostringstream os;
    os << "input: " << li.source["value"].get<std::string>() << " (Lie algebra dim "
       << li.doc.algebra->dim() << ")\n";
    os << "coefficients: "
       << (coeff == "rep" ? "representation module" : "trivial module R")
       << " of dimension " << rep.module_dim() << "\n";
    os << "p = " << r.p << ": dim C^{p-1} = " << r.dim_v1 << ", dim C^p = "
       << r.dim_v2 << ", dim C^{p+1} = " << r.dim_v3 << "\n";
    os << "dim ker = " << r.dim_ker << ", dim im = " << r.dim_im << ", dim H^"
       << r.p << " = " << r.dim_h << "\n";
    if (r.witness) {
        os << "witness cocycle: (";
        for (std::size_t i = 0; i < r.witness->size(); ++i)
            os << (i ? ", " : "") << (*r.witness)[i].str();
        os << ")\n";
    }
    return finish(o, j, os.str(), 0);
}

int run_modular(const Opts& o) {
    LoadedInput li = load_input(o);
    const MultiVector& mv = pick_mv(li, o.name);
    if (mv.dim() != 3)
        throw InvalidInput("the modular-field certificate is defined on R^3");
    int k = resolve_k(o.k, li, mv, /*strict=*/true);
    HomogeneousMultiVector pi_k = HomogeneousMultiVector::of(mv, k);
    int bound = o.bound > 0 ? o.bound : default_isolation_bound(k - 1);
    ModularCertificate cert = lemma33_certificate(pi_k, bound);
    std::vector<std::string> vars = var_names(li.doc);

    ordered_json j = envelope("modular", &li);
    j["k"] = k;
    j["bound"] = bound;
    j["modular_field"] = cert.modular_field.str(vars);
    j["isolation"] = isolation_json(cert.isolation);
    if (!cert.note.empty()) j["note"] = cert.note;
    j["verdict"] = modular_verdict_name(cert.verdict);

    std::ostringstream os;
    input_header(os, li, mv, vars);
    os << "order: k = " << k << "\n";
    os << "modular field: " << cert.modular_field.str(vars) << "\n";
    if (!cert.isolation.table.empty() ||
        cert.isolation.outcome == IsolationOutcome::Isolated) {
        isolation_table(os, cert.isolation);
    }
    if (!cert.note.empty()) os << "note: " << cert.note << "\n";
    os << "verdict: " << modular_verdict_name(cert.verdict) << "\n";
    return finish(o, j, os.str(),
                  cert.verdict == ModularVerdict::CertifiedViaModular ? 0 : 1);
}

int run_isolated(const Opts& o) {
    LoadedInput li = load_input(o);
    const MultiVector& mv = pick_mv(li, o.name);
    MultiVector X = mv;
    bool via_modular = false;
    if (mv.degree() == 2) {
        X = modular_vector_field(mv);
        via_modular = true;
    } else if (mv.degree() != 1) {
        throw InvalidInput("'isolated' expects a vector field (rank 1) or a "
                           "bivector (rank 2, tested via its modular field)");
    }
    if (X.dim() != 3)
        throw InvalidInput("the isolation test is defined on R^3");
    int deg = X.is_zero() ? 0 : infer_homogeneity(X);
    int bound = o.bound > 0 ? o.bound : default_isolation_bound(deg);
    IsolationVerdict iv = algebraically_isolated(X, bound);
    std::vector<std::string> vars = var_names(li.doc);

    ordered_json j = envelope("isolated", &li);
    j["via_modular_field"] = via_modular;
    j["field"] = X.str(vars);
    ordered_json iso = isolation_json(iv);
    for (auto& [key, val] : iso.items()) j[key] = val;

    std::ostringstream os;
    os << "input: " << li.source["value"].get<std::string>() << " (R^" << li.doc.n
       << ")\n";
    if (via_modular) os << "testing the modular field of the bivector\n";
    os << "field: " << X.str(vars) << "\n";
    isolation_table(os, iv);
    return finish(o, j, os.str(),
                  iv.outcome == IsolationOutcome::Isolated ? 0 : 1);
}

int run_perturb(const Opts& o) {
    LoadedInput li = load_input(o);
    const MultiVector& mv = pick_mv(li, o.name);
    int k = resolve_k(o.k, li, mv, /*strict=*/false);
    if (o.trials < 1) throw InvalidInput("--trials must be >= 1");
    double eps = parse_eps(o.eps);
    ExperimentReport rep = stability_experiment(mv, k, o.trials, eps, o.seed);

    ordered_json j = envelope("perturb", &li);
    j["k"] = rep.k;
    j["epsilon"] = rep.epsilon;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["successes"] = rep.successes;
    ordered_json rows = ordered_json::array();
    for (const TrialResult& t : rep.results) {
        ordered_json r;
        r["found"] = t.found;
        r["point"] = t.point;
        r["residual"] = t.residual;
        r["distance"] = t.distance;
        rows.push_back(std::move(r));
    }
    j["results"] = std::move(rows);

    std::ostringstream os;
    std::vector<std::string> vars = var_names(li.doc);
    input_header(os, li, mv, vars);
    os << "experiment: k = " << rep.k << ", eps = " << rep.epsilon
       << ", trials = " << rep.trials << ", seed = " << rep.seed << "\n";
    os << "successes: " << rep.successes << "/" << rep.trials
       << " trials found an order-" << rep.k << " singular point\n\n";
    os << "  trial  found      residual      distance\n";
    os << std::scientific << std::setprecision(3);
    for (int t = 0; t < rep.trials; ++t) {
        const TrialResult& r = rep.results[static_cast<std::size_t>(t)];
        os << std::setw(7) << t << std::setw(7) << (r.found ? "yes" : "no")
           << std::setw(14) << r.residual << std::setw(14) << r.distance << "\n";
    }
    return finish(o, j, os.str(), rep.successes == rep.trials ? 0 : 1);
}

int run_examples(const Opts& o) {
    std::vector<RegistryEntry> entries = registry_list();
    ordered_json j;
    j["format"] = "kstab-report-1";
    j["command"] = "examples";
    ordered_json rows = ordered_json::array();
    for (const RegistryEntry& e : entries)
        rows.push_back({{"pattern", e.pattern}, {"summary", e.summary}});
    j["examples"] = std::move(rows);

    std::ostringstream os;
    os << "built-in examples:\n";
    std::size_t width = 0;
    for (const RegistryEntry& e : entries) width = std::max(width, e.pattern.size());
    for (const RegistryEntry& e : entries)
        os << "  " << std::left << std::setw(static_cast<int>(width) + 2)
           << e.pattern << e.summary << "\n";
    return finish(o, j, os.str(), 0);
}

// ---- wiring ----------------------------------------------------------------

void add_input_flags(CLI::App* c, Opts& o) {
    c->add_option("example", o.example, "built-in example name (see 'kstab examples')");
    c->add_option("--expr", o.expr, "multivector expression");
    c->add_option("--input", o.file, "input document (JSON or expression file)");
    c->add_option("--name", o.name, "multivector to use from a multi-entry document");
    c->add_option("--dim", o.dim, "dimension for --expr (default: inferred)");
    c->add_option("--base", o.base, "base dimension for a fibered --expr");
    c->add_option("--fiber", o.fiber, "fiber rank for a fibered --expr");
}

void add_output_flags(CLI::App* c, Opts& o) {
    c->add_option("--report", o.report, "write the machine-readable JSON report to FILE");
    c->add_option("--format", o.format, "output format (default table)")
        ->check(CLI::IsMember({"table", "machine"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact stability certificates for polynomial Poisson structures"};
    app.require_subcommand(1);
    Opts o;
    int rc = 0;

    CLI::App* certify = app.add_subcommand(
        "certify", "order-k stability certificate (full Lichnerowicz-Poisson complex)");
    add_input_flags(certify, o);
    certify->add_option("--k", o.k, "homogeneity order (default: inferred)");
    add_output_flags(certify, o);
    certify->callback([&]() { rc = run_certify(o); });

    CLI::App* coh = app.add_subcommand(
        "cohomology", "degree-2 cohomology slices H^{2,s}");
    add_input_flags(coh, o);
    coh->add_option("--k", o.k, "homogeneity order (default: inferred)");
    coh->add_option("--s-range", o.s_range, "slice range A..B (default 0..k-1)");
    coh->add_flag("--lin", o.lin, "fiberwise-linear subcomplex (needs a fibered input)");
    add_output_flags(coh, o);
    coh->callback([&]() { rc = run_cohomology(o); });

    CLI::App* alg = app.add_subcommand(
        "algebroid-certify",
        "order-k certificate over the fiberwise-linear subcomplex");
    add_input_flags(alg, o);
    alg->add_option("--k", o.k, "homogeneity order (default: inferred)");
    add_output_flags(alg, o);
    alg->callback([&]() { rc = run_algebroid_certify(o); });

    CLI::App* ce = app.add_subcommand(
        "ce", "Chevalley-Eilenberg cohomology H^p(g, V) from structure constants");
    add_input_flags(ce, o);
    ce->add_option("--p", o.p, "cohomology degree (default 1)");
    ce->add_option("--coeff", o.coeff,
                   "coefficients: 'rep' or 'trivial' (default: rep when present)")
        ->check(CLI::IsMember({"rep", "trivial"}));
    add_output_flags(ce, o);
    ce->callback([&]() { rc = run_ce(o); });

    CLI::App* mod = app.add_subcommand(
        "modular", "modular-field stability shortcut on R^3");
    add_input_flags(mod, o);
    mod->add_option("--k", o.k, "homogeneity order (default: inferred)");
    mod->add_option("--bound", o.bound, "isolation search depth (default 2(k-1)+3)");
    add_output_flags(mod, o);
    mod->callback([&]() { rc = run_modular(o); });

    CLI::App* iso = app.add_subcommand(
        "isolated", "algebraic isolation of the origin for a field on R^3");
    add_input_flags(iso, o);
    iso->add_option("--bound", o.bound, "isolation search depth (default 2*deg+3)");
    add_output_flags(iso, o);
    iso->callback([&]() { rc = run_isolated(o); });

    CLI::App* per = app.add_subcommand(
        "perturb", "seeded perturbation experiment (floating point)");
    add_input_flags(per, o);
    per->add_option("--k", o.k, "order of the singular point (default: inferred)");
    per->add_option("--trials", o.trials, "number of trials (default 100)");
    per->add_option("--eps", o.eps,
                    "perturbation size, fraction or decimal (default 0.001)");
    per->add_option("--seed", o.seed, "master seed (default 2024)");
    add_output_flags(per, o);
    per->callback([&]() { rc = run_perturb(o); });

    CLI::App* ex = app.add_subcommand("examples", "list the built-in examples");
    add_output_flags(ex, o);
    ex->callback([&]() { rc = run_examples(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
