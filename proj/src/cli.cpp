#include "motzeta/cli.hpp"

#include "motzeta/expr_parser.hpp"
#include "motzeta/json_io.hpp"
#include "motzeta/realization.hpp"
#include "motzeta/snc_model.hpp"
#include "motzeta/worked_examples.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace motzeta::cli {

namespace {

using io::json;

// Bad arguments discovered after parsing (unreadable file, malformed list).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input = "-";
    std::string ep_file;
    std::string restrict_file;
    std::string eigenvalues;
    std::string moduli = "1";
    std::string example_name;
    std::int64_t series = 0;
    std::int64_t terms = 10;
    std::int64_t m = 1;
    std::int64_t dim = 4;
    bool latex = false;
    bool as_json = false;
    bool local = false;
    bool emit_ep = false;
    bool w_model = false;
};

std::string read_all(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct Loaded {
    ZetaFunction zeta;
    std::optional<io::ModelDocument> model;
};

Loaded load_input(const Options& o, std::istream& in) {
    const std::string origin = o.input == "-" ? "<stdin>" : o.input;
    json j = io::parse_json(read_all(o.input, in), origin);
    Loaded l;
    if (io::is_zeta_document(j)) {
        l.zeta = io::zeta_from_json(j);
        return l;
    }
    l.model = io::model_from_json(j);
    l.zeta = compute_zeta(l.model->model);
    if (!l.model->rewrites.empty()) l.zeta = rewrite(l.zeta, l.model->rewrites);
    return l;
}

SncModel load_model(const Options& o, std::istream& in) {
    const std::string origin = o.input == "-" ? "<stdin>" : o.input;
    json j = io::parse_json(read_all(o.input, in), origin);
    if (io::is_zeta_document(j)) throw UsageError("this subcommand needs a model document, not a zeta function");
    return io::model_from_json(j).model;
}

EpAssignment load_ep(const Options& o, std::istream& in) {
    if (o.ep_file.empty()) throw UsageError("--ep FILE is required");
    if (o.ep_file == "-" && o.input == "-") throw UsageError("the input and --ep cannot both be standard input");
    return io::ep_from_json(io::parse_json(read_all(o.ep_file, in), o.ep_file));
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("malformed ") + what + " '" + text + "'");
        }
    }
    if (out.empty()) throw UsageError(std::string("empty ") + what);
    return out;
}

std::string set_text(const std::set<Fraction>& s) {
    std::string out = "{";
    for (const auto& f : s) out += (out.size() > 1 ? ", " : "") + f.to_string();
    return out + "}";
}

void print_zeta(const ZetaFunction& z, const Options& o, std::ostream& out) {
    if (o.as_json)
        out << io::zeta_to_json(z).dump(2) << "\n";
    else if (o.latex)
        out << z.to_latex() << "\n";
    else
        out << z.to_string() << "\n";
}

void print_series(const ZetaFunction& z, std::int64_t n, const Options& o, std::ostream& out) {
    const auto coeffs = series_coeffs(z, n);
    if (o.as_json) {
        out << io::series_to_json(coeffs).dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) out << "T^" << i + 1 << ": " << coeffs[i].to_string() << "\n";
}

void print_report(const PoleReport& r, std::ostream& out) {
    out << "candidates: " << set_text(r.candidates) << "\n";
    out << "certified: " << set_text(r.certified) << "\n";
    out << "uncertified: " << set_text(r.uncertified) << "\n";
    for (const auto& d : r.details) {
        out << "  " << d.pole.to_string() << ": ";
        if (d.certified)
            out << "certified via " << d.factor.to_string() << ", k = " << *d.k << ", common factor "
                << d.common_factor << "\n";
        else
            out << "not certified by EP (factor " << d.factor.to_string() << ")\n";
    }
}

int cmd_example(const Options& o, std::ostream& out) {
    if (o.example_name == "cvs") {
        if (o.emit_ep) {
            out << io::ep_to_json(o.w_model ? examples::cvs_w_generic_ep() : examples::cvs_generic_ep()).dump(2)
                << "\n";
            return 0;
        }
        const SncModel m = o.w_model ? examples::cvs_models().w_model : examples::cvs_x_model();
        out << io::model_to_json(m).dump(2) << "\n";
        return 0;
    }
    if (o.example_name == "odp") {
        if (o.dim < 1) throw UsageError("--dim must be positive");
        if (o.emit_ep) {
            out << io::ep_to_json(examples::odp_generic_ep(o.dim)).dump(2) << "\n";
            return 0;
        }
        if (o.local) {
            out << io::model_to_json(examples::odp_local_model(o.dim)).dump(2) << "\n";
            return 0;
        }
        examples::OdpConfig cfg;
        cfg.d = o.dim;
        cfg.moduli = parse_int_list(o.moduli, "moduli list");
        if (std::any_of(cfg.moduli.begin(), cfg.moduli.end(), [](auto m) { return m < 1; }))
            throw UsageError("moduli must be positive");
        out << io::zeta_to_json(examples::odp_global_zeta(cfg)).dump(2) << "\n";
        return 0;
    }
    throw UsageError("unknown example '" + o.example_name + "' (expected odp or cvs)");
}

int dispatch(const std::string& name, const Options& o, std::istream& in, std::ostream& out) {
    if (name == "example") return cmd_example(o, out);
    if (name == "acampo") {
        const SncModel m = load_model(o, in);
        validate(m);
        FactoredRationalU z = acampo_zeta(m);
        out << "zeta(u) = " << z.to_string() << "\n";
        out << "cyclotomic exponents:";
        for (const auto& [d, e] : cyclotomic_refactor(z)) out << " Phi_" << d << "^" << e;
        out << "\n";
        return 0;
    }

    const Loaded l = load_input(o, in);
    if (name == "compute" || name == "render") {
        print_zeta(l.zeta, o, out);
        if (name == "compute" && o.series > 0) print_series(l.zeta, o.series, o, out);
        return 0;
    }
    if (name == "series") {
        if (o.terms < 1) throw UsageError("--terms must be positive");
        print_series(l.zeta, o.terms, o, out);
        return 0;
    }
    if (name == "basechange") {
        if (o.m < 1) throw UsageError("--m must be positive");
        RestrictionMap res;
        if (!o.restrict_file.empty()) {
            json j = io::parse_json(read_all(o.restrict_file, in), o.restrict_file);
            if (!j.is_object()) throw Error("restriction file: expected an object mapping symbols to classes");
            for (const auto& [sym, img] : j.items()) {
                if (!img.is_string()) throw Error("restriction file: image of '" + sym + "' must be a string");
                res.set(sym, o.m, expr::parse_groth(img.get<std::string>()));
            }
        }
        print_zeta(multisect(l.zeta, o.m, res), o, out);
        return 0;
    }
    const EpAssignment ep = load_ep(o, in);
    if (name == "ep") {
        out << ep_zeta(l.zeta, ep).to_string() << "\n";
        return 0;
    }
    if (name == "poles") {
        const PoleReport r = pole_report(l.zeta, ep);
        if (o.as_json)
            out << io::report_to_json(r).dump(2) << "\n";
        else
            print_report(r, out);
        return 0;
    }
    if (name == "check-monodromy") {
        if (o.eigenvalues.empty()) throw UsageError("--eigenvalues is required");
        EigenvalueSet ev;
        try {
            ev = EigenvalueSet::parse(o.eigenvalues);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        const MonodromyResult r = check_monodromy(l.zeta, ep, ev);
        if (o.as_json) {
            json j = io::report_to_json(r.report);
            j["verdict"] = to_string(r.verdict);
            j["eigenvalues"] = ev.to_string();
            if (r.offending) j["offending"] = r.offending->to_string();
            out << j.dump(2) << "\n";
        } else {
            out << "verdict: " << to_string(r.verdict) << "\n";
            if (r.offending) out << "offending pole: " << r.offending->to_string() << "\n";
            print_report(r.report, out);
        }
        return 0;
    }
    if (name == "obstruct") {
        const ObstructionResult r = good_reduction_obstruction(l.zeta, ep);
        std::set<Fraction> witness(r.witness.begin(), r.witness.end());
        if (o.as_json) {
            json j = io::report_to_json(r.report);
            j["verdict"] = to_string(r.verdict);
            j["witness"] = io::fractions_to_json(witness);
            out << j.dump(2) << "\n";
        } else {
            out << "verdict: " << to_string(r.verdict) << "\n";
            if (!witness.empty()) out << "witness: " << set_text(witness) << "\n";
            print_report(r.report, out);
        }
        return 0;
    }
    throw UsageError("unknown subcommand '" + name + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"motivic zeta functions of snc-models: base change, EP realization, poles"};
    app.name("zeta");
    app.require_subcommand(1, 1);
    Options o;

    auto input = [&](CLI::App* sub) {
        sub->add_option("input", o.input, "model or zeta JSON file ('-' for stdin)");
    };
    auto output_flags = [&](CLI::App* sub) {
        sub->add_flag("--latex", o.latex, "render as LaTeX");
        sub->add_flag("--json", o.as_json, "emit a JSON document");
    };
    auto ep_flag = [&](CLI::App* sub) { sub->add_option("--ep", o.ep_file, "EP assignment JSON file")->required(); };

    auto* compute = app.add_subcommand("compute", "zeta function of a model");
    input(compute);
    output_flags(compute);
    compute->add_option("--series", o.series, "also print coefficients of T^1..T^N");

    auto* basechange = app.add_subcommand("basechange", "base change of degree m (multisection)");
    input(basechange);
    output_flags(basechange);
    basechange->add_option("--m", o.m, "degree")->required();
    basechange->add_option("--restrict", o.restrict_file, "JSON map of restricted classes at this degree");

    auto* poles = app.add_subcommand("poles", "candidate poles and EP certification");
    input(poles);
    ep_flag(poles);
    poles->add_flag("--json", o.as_json, "emit JSON");

    auto* ep = app.add_subcommand("ep", "Euler-Poincare realization in Q(w, T)");
    input(ep);
    ep_flag(ep);

    auto* acampo = app.add_subcommand("acampo", "A'Campo monodromy zeta function from chi values");
    input(acampo);

    auto* mono = app.add_subcommand("check-monodromy", "monodromy property verdict");
    input(mono);
    ep_flag(mono);
    mono->add_option("--eigenvalues", o.eigenvalues, "comma-separated fractions, e.g. 0/1,1/2")->required();
    mono->add_flag("--json", o.as_json, "emit JSON");

    auto* obstruct = app.add_subcommand("obstruct", "good reduction obstruction from certified poles");
    input(obstruct);
    ep_flag(obstruct);
    obstruct->add_flag("--json", o.as_json, "emit JSON");

    auto* series = app.add_subcommand("series", "series coefficients");
    input(series);
    series->add_option("--terms,-n", o.terms, "number of coefficients");
    series->add_flag("--json", o.as_json, "emit JSON");

    auto* example = app.add_subcommand("example", "built-in examples: odp, cvs");
    example->add_option("name", o.example_name, "odp or cvs")->required();
    example->add_option("--dim", o.dim, "fiber dimension d (odp)");
    example->add_option("--moduli", o.moduli, "comma-separated moduli m_i (odp)");
    example->add_flag("--local", o.local, "emit the local model at one double point (odp)");
    example->add_flag("--w-model", o.w_model, "emit the model over k[[u]] (cvs)");
    example->add_flag("--emit-ep", o.emit_ep, "emit a generic EP assignment instead");

    auto* render = app.add_subcommand("render", "print a zeta document");
    input(render);
    output_flags(render);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        return dispatch(name, o, in, out);
    } catch (const UsageError& e) {
        err << "zeta " << name << ": " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "zeta " << name << ": invalid model\n";
        for (const auto& v : e.violations()) err << "  " << v << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "zeta " << name << ": " << e.what() << "\n";
        return 1;
    }
}

}  // namespace motzeta::cli
