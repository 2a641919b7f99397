#include "ribbons/cli.hpp"

#include "ribbons/comp_ops.hpp"
#include "ribbons/cone.hpp"
#include "ribbons/errors.hpp"
#include "ribbons/json_io.hpp"
#include "ribbons/perms.hpp"
#include "ribbons/qsym.hpp"
#include "ribbons/sym.hpp"
#include "ribbons/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace ribbons {

namespace {

struct CliContext {
    bool json = false;
    std::ostringstream out;
    std::ostringstream err;
    const std::string* stdin_data = nullptr;
    int code = 0;
};

std::string read_input(const CliContext& ctx, const std::string& path) {
    if (path == "-")
        return *ctx.stdin_data;
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_json_input(const CliContext& ctx, const std::string& path) {
    try {
        return Json::parse(read_input(ctx, path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON in ") + path + ": " +
                                    e.what());
    }
}

void emit(CliContext& ctx, const Json& payload, const std::string& text) {
    if (ctx.json)
        ctx.out << dump(payload);
    else
        ctx.out << text;
}

std::string pretty_combo(const std::vector<std::pair<std::string, Rat>>& terms) {
    if (terms.empty())
        return "0";
    std::string out;
    for (const auto& [name, c] : terms) {
        Rat a = c < 0 ? Rat(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (a != 1)
            out += rat_str(a) + "*";
        out += name;
    }
    return out;
}

std::string pretty_qsym(const QsymExpr& e) {
    std::vector<std::pair<std::string, Rat>> terms;
    for (const auto& [beta, c] : e.terms())
        terms.emplace_back(basis_name(e.basis()) + "[" + beta.str() + "]", c);
    return pretty_combo(terms);
}

std::string pretty_schur(const std::map<Partition, Rat, PartitionOrder>& m) {
    std::vector<std::pair<std::string, Rat>> terms;
    for (const auto& [l, c] : m)
        terms.emplace_back("s[" + l.str() + "]", c);
    return pretty_combo(terms);
}

std::string pretty_h(const SymHExpr& e) {
    std::vector<std::pair<std::string, Rat>> terms;
    for (const auto& [l, c] : e.terms())
        terms.emplace_back("h[" + l.str() + "]", c);
    return pretty_combo(terms);
}

Json factor_payload(const Composition& beta) {
    std::vector<Composition> factors = irreducible_factorization(beta);
    std::vector<Composition> cls = equivalence_class(beta);
    Json j = Json::object();
    j["input"] = beta.str();
    Json jf = Json::array(), js = Json::array(), jc = Json::array();
    for (const Composition& f : factors) {
        jf.push_back(f.str());
        js.push_back(is_palindrome(f));
    }
    for (const Composition& c : cls)
        jc.push_back(c.str());
    j["factors"] = std::move(jf);
    j["symmetric_flags"] = std::move(js);
    j["class"] = std::move(jc);
    j["class_size"] = cls.size();
    return j;
}

std::string factor_text(const Json& j) {
    std::ostringstream t;
    t << "input: " << j["input"].get<std::string>() << "\n";
    t << "factors:";
    for (std::size_t i = 0; i < j["factors"].size(); ++i)
        t << " " << j["factors"][i].get<std::string>()
          << (j["symmetric_flags"][i].get<bool>() ? " (palindromic)" : "");
    t << "\nclass (" << j["class_size"].get<std::size_t>() << "):";
    for (const auto& c : j["class"])
        t << " " << c.get<std::string>();
    t << "\n";
    return t.str();
}

void cmd_factor(CliContext& ctx, const std::string& comp) {
    Json j = factor_payload(Composition::parse(comp));
    emit(ctx, j, factor_text(j));
}

void cmd_equiv(CliContext& ctx, const std::string& a_text, const std::string& b_text) {
    Composition a = Composition::parse(a_text), b = Composition::parse(b_text);
    bool eq = equivalent(a, b);
    Json j = Json::object();
    j["a"] = a.str();
    j["b"] = b.str();
    j["equivalent"] = eq;
    emit(ctx, j, std::string("equivalent: ") + (eq ? "yes" : "no") + "\n");
}

void cmd_ribbon(CliContext& ctx, const std::string& comp, const std::string& basis) {
    Composition beta = Composition::parse(comp);
    Json j = Json::object();
    j["input"] = beta.str();
    j["n"] = beta.size();
    j["basis"] = basis;
    std::string text;
    if (basis == "h") {
        SymHExpr e = ribbon_in_h(beta);
        Json terms = Json::object();
        for (const auto& [l, c] : e.terms())
            terms[l.str()] = rat_str(c);
        j["terms"] = std::move(terms);
        text = pretty_h(e) + "\n";
    } else if (basis == "F") {
        QsymExpr e = ribbon_in_f(beta);
        Json terms = Json::object();
        for (const auto& [b, c] : e.terms())
            terms[b.str()] = rat_str(c);
        j["terms"] = std::move(terms);
        text = pretty_qsym(e) + "\n";
    } else if (basis == "s") {
        auto m = ribbon_lr_coeffs(beta);
        j["terms"] = schur_map_to_json(m);
        text = pretty_schur(m) + "\n";
    } else {
        throw std::invalid_argument("ribbon: basis must be h, F or s");
    }
    emit(ctx, j, text);
}

void cmd_skew(CliContext& ctx, const std::string& shape_text, const std::string& basis) {
    SkewShape shape = SkewShape::parse(shape_text);
    Json j = Json::object();
    j["shape"] = shape.str();
    j["n"] = shape.cells();
    j["basis"] = basis;
    std::string text;
    if (basis == "F") {
        QsymExpr e = skew_schur_in_f(shape);
        Json terms = Json::object();
        for (const auto& [b, c] : e.terms())
            terms[b.str()] = rat_str(c);
        j["terms"] = std::move(terms);
        text = pretty_qsym(e) + "\n";
    } else if (basis == "s") {
        auto m = schur_extract(skew_schur_in_f(shape));
        j["terms"] = schur_map_to_json(m);
        text = pretty_schur(m) + "\n";
    } else {
        throw std::invalid_argument("skew: basis must be F or s");
    }
    emit(ctx, j, text);
}

void cmd_lr(CliContext& ctx, const std::string& comp) {
    Composition beta = Composition::parse(comp);
    auto m = ribbon_lr_coeffs(beta);
    Json j = Json::object();
    j["input"] = beta.str();
    j["shape"] = ribbon_shape(beta).str();
    j["coefficients"] = schur_map_to_json(m);
    emit(ctx, j,
         "shape: " + ribbon_shape(beta).str() + "\n" + pretty_schur(m) + "\n");
}

void cmd_qsym_convert(CliContext& ctx, const std::string& file, const std::string& to) {
    QsymExpr e = qsym_from_json(parse_json_input(ctx, file));
    QsymExpr converted = to_basis(e, parse_basis(to));
    emit(ctx, to_json(converted), pretty_qsym(converted) + "\n");
}

void cmd_qsym_product(CliContext& ctx, const std::string& file_a,
                      const std::string& file_b) {
    QsymExpr a = qsym_from_json(parse_json_input(ctx, file_a));
    QsymExpr b = qsym_from_json(parse_json_input(ctx, file_b));
    if (a.basis() != b.basis())
        throw std::invalid_argument("qsym product: inputs must share a basis");
    QsymExpr p = product(a, b);
    emit(ctx, to_json(p), pretty_qsym(p) + "\n");
}

void cmd_qsym_check(CliContext& ctx, const std::string& file) {
    QsymExpr e = qsym_from_json(parse_json_input(ctx, file));
    bool sym = is_symmetric(e);
    Json j = Json::object();
    j["basis"] = basis_name(e.basis());
    j["n"] = e.degree();
    j["symmetric"] = sym;
    std::string text = std::string("symmetric: ") + (sym ? "yes" : "no") + "\n";
    if (sym) {
        auto m = schur_extract(to_basis(e, Basis::F));
        j["schur"] = schur_map_to_json(m);
        text += "schur: " + pretty_schur(m) + "\n";
    }
    emit(ctx, j, text);
}

void cmd_descents_matrix(CliContext& ctx, int n) {
    DescentPairMatrix mat = descent_pair_matrix(n);
    Json j = Json::object();
    j["n"] = mat.n;
    Json comps = Json::array();
    for (const Composition& c : mat.comps)
        comps.push_back(c.str());
    j["compositions"] = std::move(comps);
    Json counts = Json::array();
    for (const auto& row : mat.counts)
        counts.push_back(row);
    j["counts"] = std::move(counts);
    std::ostringstream t;
    for (std::size_t i = 0; i < mat.comps.size(); ++i) {
        t << mat.comps[i].str() << ":";
        for (long long v : mat.counts[i])
            t << " " << v;
        t << "\n";
    }
    emit(ctx, j, t.str());
}

void cmd_cone_rays(CliContext& ctx, int n, const std::string& method) {
    std::vector<ConeRay> rays;
    if (method == "dd")
        rays = extreme_rays(n);
    else if (method == "reference")
        rays = extreme_rays_reference(n);
    else
        throw std::invalid_argument("cone rays: method must be dd or reference");
    int schur_count = 0;
    for (const ConeRay& r : rays)
        if (r.schur.size() == 1 && r.schur.begin()->second == 1)
            ++schur_count;
    Json j = Json::object();
    j["n"] = n;
    j["dimension"] = partitions_of(n).size();
    j["ray_count"] = rays.size();
    j["schur_ray_count"] = schur_count;
    Json jr = Json::array();
    for (const ConeRay& r : rays)
        jr.push_back(to_json(r));
    j["rays"] = std::move(jr);
    std::ostringstream t;
    t << "n: " << n << "\nrays: " << rays.size() << " (" << schur_count
      << " Schur)\n";
    for (const ConeRay& r : rays)
        t << pretty_schur(r.schur) << "\n";
    emit(ctx, j, t.str());
}

void cmd_cone_facets(CliContext& ctx, int n) {
    FacetReport rep = facet_report(n);
    Json j = Json::object();
    j["n"] = rep.n;
    Json reps = Json::array(), red = Json::array(), ext = Json::array();
    for (const Composition& c : rep.reps)
        reps.push_back(c.str());
    for (bool b : rep.redundant)
        red.push_back(b);
    for (bool b : rep.vertex_extreme)
        ext.push_back(b);
    j["representatives"] = std::move(reps);
    j["redundant"] = std::move(red);
    j["vertex_extreme"] = std::move(ext);
    j["redundant_count"] = rep.redundant_count;
    j["status"] = rep.status;
    std::ostringstream t;
    t << "n: " << n << "\nredundant: " << rep.redundant_count << "\nstatus: "
      << rep.status << "\n";
    emit(ctx, j, t.str());
}

void cmd_cone_balanced(CliContext& ctx, const std::string& file) {
    Multicollection mc = multicollection_from_json(parse_json_input(ctx, file));
    Json j = Json::object();
    j["n"] = mc.n;
    Json kappa = Json::object();
    bool all = true;
    std::ostringstream t;
    for (const Partition& lambda : partitions_of(mc.n + 1)) {
        std::optional<Rat> k = balanced_check(mc, lambda);
        if (k) {
            kappa[lambda.str()] = rat_str(*k);
            t << lambda.str() << ": " << rat_str(*k) << "\n";
        } else {
            kappa[lambda.str()] = nullptr;
            t << lambda.str() << ": unbalanced\n";
            all = false;
        }
    }
    bool sym = is_symmetric(multicollection_to_f(mc));
    j["fully_balanced"] = all;
    j["symmetric"] = sym;
    j["kappa"] = std::move(kappa);
    t << "fully balanced: " << (all ? "yes" : "no") << "\n";
    emit(ctx, j, t.str());
}

void cmd_verify(CliContext& ctx, const std::string& suite, int n_max) {
    std::vector<std::string> suites;
    if (suite == "all")
        suites = verify_suite_names();
    else
        suites.push_back(suite);
    Json jsuites = Json::array();
    std::ostringstream t;
    bool all_passed = true;
    for (const std::string& name : suites) {
        SuiteResult r = run_verify_suite(name, n_max);
        Json js = Json::object();
        js["suite"] = r.suite;
        js["n_max"] = r.n_max;
        Json checks = Json::array();
        for (const CheckResult& c : r.checks) {
            Json jc = Json::object();
            jc["name"] = c.name;
            jc["passed"] = c.passed;
            jc["detail"] = c.detail;
            checks.push_back(std::move(jc));
            if (c.passed)
                t << "ok " << r.suite << "/" << c.name << "\n";
            else
                t << "FAIL " << r.suite << "/" << c.name << ": " << c.detail << "\n";
        }
        js["checks"] = std::move(checks);
        js["passed"] = r.passed();
        jsuites.push_back(std::move(js));
        all_passed = all_passed && r.passed();
    }
    Json j = Json::object();
    j["suites"] = std::move(jsuites);
    j["passed"] = all_passed;
    t << (all_passed ? "all checks passed" : "verification FAILED") << "\n";
    emit(ctx, j, t.str());
    if (!all_passed)
        ctx.code = 1;
}

} // namespace

CommandResult run_cli(const std::vector<std::string>& args,
                      const std::string& stdin_data) {
    CliContext ctx;
    ctx.stdin_data = &stdin_data;

    CLI::App app{"exact combinatorics of ribbon functions and their positivity cone"};
    app.set_help_all_flag("--help-all");
    app.require_subcommand(1);
    app.add_flag("--json", ctx.json, "emit machine-readable JSON");

    std::string comp_a, comp_b, basis_opt, shape_text, file_a, file_b, to_basis_name;
    std::string method = "dd", suite = "all";
    int n_arg = 0, n_max = 0;

    CLI::App* factor = app.add_subcommand("factor", "irreducible factorization");
    factor->add_option("composition", comp_a, "composition, e.g. 1,2,1,3,2 or 12132")
        ->required();

    CLI::App* cls = app.add_subcommand("class", "equivalence class and factors");
    cls->add_option("composition", comp_a)->required();

    CLI::App* equiv = app.add_subcommand("equiv", "decide ribbon-function equality");
    equiv->add_option("first", comp_a)->required();
    equiv->add_option("second", comp_b)->required();

    CLI::App* ribbon = app.add_subcommand("ribbon", "expand a ribbon function");
    ribbon->add_option("composition", comp_a)->required();
    ribbon->add_option("--basis", basis_opt, "h, F or s")->default_val("F");

    CLI::App* skew = app.add_subcommand("skew",
                                        "expand a skew Schur function (at most 12 cells)");
    skew->add_option("shape", shape_text, "outer/inner, e.g. 4,3,3,2/2,2,1")->required();
    skew->add_option("--basis", basis_opt, "F or s")->default_val("F");

    CLI::App* lr = app.add_subcommand("lr", "Schur coefficients of a ribbon");
    lr->add_option("composition", comp_a)->required();

    CLI::App* qsym = app.add_subcommand("qsym", "quasisymmetric expression tools");
    qsym->require_subcommand(1);
    CLI::App* qconvert = qsym->add_subcommand("convert", "change basis");
    qconvert->add_option("file", file_a, "expression JSON, - for stdin")->required();
    qconvert->add_option("--to", to_basis_name, "target basis M or F")->required();
    CLI::App* qproduct = qsym->add_subcommand("product", "multiply two expressions");
    qproduct->add_option("first", file_a)->required();
    qproduct->add_option("second", file_b)->required();
    CLI::App* qcheck = qsym->add_subcommand("check", "symmetry and Schur expansion");
    qcheck->add_option("file", file_a)->required();

    CLI::App* dmatrix = app.add_subcommand("descents-matrix",
                                           "descent-pair counts over S_n");
    dmatrix->add_option("n", n_arg, "degree, at most 9")->required();

    CLI::App* cone = app.add_subcommand("cone", "positivity cone exploration");
    cone->require_subcommand(1);
    CLI::App* crays = cone->add_subcommand("rays", "extreme rays");
    crays->add_option("n", n_arg, "degree, at most 7 (reference: 5)")->required();
    crays->add_option("--method", method, "dd or reference")->default_val("dd");
    CLI::App* cfacets = cone->add_subcommand("facets", "redundancy scan");
    cfacets->add_option("n", n_arg, "degree, at most 6")->required();
    CLI::App* cbalanced = cone->add_subcommand("balanced", "covering-sum balance");
    cbalanced->add_option("file", file_a, "multicollection JSON, - for stdin")
        ->required();

    CLI::App* verify = app.add_subcommand("verify", "run exhaustive identity suites");
    verify->add_option("suite", suite,
                       "equivalence, ribbon, descents, cone or all")
        ->default_val("all");
    verify->add_option("--n-max", n_max, "override the suite bound");
    verify->footer("RIBBONS_WORKERS sets the thread count; output order is fixed.");

    app.footer("exit codes: 0 ok, 1 failed verification, 2 usage, 3 over a resource bound");

    std::vector<const char*> argv;
    argv.push_back("ribbons");
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        int rc = app.exit(e, out, err);
        CommandResult res;
        res.out = out.str();
        res.err = err.str();
        res.code = rc == 0 ? 0 : 2;
        return res;
    }

    try {
        if (factor->parsed() || cls->parsed())
            cmd_factor(ctx, comp_a);
        else if (equiv->parsed())
            cmd_equiv(ctx, comp_a, comp_b);
        else if (ribbon->parsed())
            cmd_ribbon(ctx, comp_a, basis_opt);
        else if (skew->parsed())
            cmd_skew(ctx, shape_text, basis_opt);
        else if (lr->parsed())
            cmd_lr(ctx, comp_a);
        else if (qsym->parsed()) {
            if (qconvert->parsed())
                cmd_qsym_convert(ctx, file_a, to_basis_name);
            else if (qproduct->parsed())
                cmd_qsym_product(ctx, file_a, file_b);
            else
                cmd_qsym_check(ctx, file_a);
        } else if (dmatrix->parsed())
            cmd_descents_matrix(ctx, n_arg);
        else if (cone->parsed()) {
            if (crays->parsed())
                cmd_cone_rays(ctx, n_arg, method);
            else if (cfacets->parsed())
                cmd_cone_facets(ctx, n_arg);
            else
                cmd_cone_balanced(ctx, file_a);
        } else if (verify->parsed())
            cmd_verify(ctx, suite, n_max);
    } catch (const ResourceError& e) {
        CommandResult res;
        res.code = 3;
        if (ctx.json) {
            Json j = Json::object();
            j["error"] = Json::object({{"code", "resource"}, {"message", e.what()}});
            res.out = dump(j);
        } else {
            res.err = std::string("error: ") + e.what() + "\n";
        }
        return res;
    } catch (const std::invalid_argument& e) {
        CommandResult res;
        res.code = 2;
        if (ctx.json) {
            Json j = Json::object();
            j["error"] = Json::object({{"code", "usage"}, {"message", e.what()}});
            res.out = dump(j);
        } else {
            res.err = std::string("error: ") + e.what() + "\n";
        }
        return res;
    }

    CommandResult res;
    res.code = ctx.code;
    res.out = ctx.out.str();
    res.err = ctx.err.str();
    return res;
}

} // namespace ribbons
