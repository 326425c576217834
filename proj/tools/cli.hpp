#pragma once

// Command-line front end: argument parsing into a Command, dispatch to the
// library and rendering as text or line-delimited JSON.

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spherical/spherical.hpp"

namespace spherical::cli {

enum ExitCode : int { ok = 0, usage = 1, domain = 2, internal = 3 };

/// Argument problem: unknown subcommand or flag, or text that does not parse.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Well-formed arguments that violate a mathematical constraint.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// --help was requested; what() carries the help text.
struct HelpRequested : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { text, json };

struct Command {
    std::string name;
    // lr
    Partition lam, mu, nu;
    // expand, multfree
    SkewShape shape;
    std::optional<int> n_vars;
    // quadruple-based commands and toric
    std::optional<GrassWord> word;
    std::optional<LeviBlocks> blocks;
    bool max_levi = false;
    int r = 1;
    // verify
    int n_max = 5;
    int r_max = 3;

    Format format = Format::text;
    bool timings = false;

    friend bool operator==(const Command&, const Command&) = default;
};

inline const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names{"lr",     "expand",   "multfree", "heads", "decompose",
                                                "reduce", "classify", "toric",    "verify"};
    return names;
}

namespace detail {

// Syntax failures are usage errors, constraint failures are domain errors.
template <class T>
T build(const std::string& flag, const std::string& text, std::vector<int> (*split)(const std::string&),
        T (*make)(std::vector<int>)) {
    std::vector<int> ints;
    try {
        ints = split(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
    try {
        return make(std::move(ints));
    } catch (const std::invalid_argument& e) {
        throw DomainError(flag + ": " + e.what());
    }
}

inline std::vector<int> split_exp(const std::string& s) { return spherical::detail::parse_int_list(s, "partition", true); }
inline std::vector<int> split_plain(const std::string& s) { return spherical::detail::parse_int_list(s, "list", false); }

inline Partition partition_arg(const std::string& flag, const std::string& text) {
    return build<Partition>(flag, text, split_exp, [](std::vector<int> v) { return Partition(std::move(v)); });
}

inline SkewShape shape_arg(const std::string& flag, const std::string& text) {
    const auto slash = text.find('/');
    const Partition outer = partition_arg(flag, text.substr(0, slash));
    const Partition inner = slash == std::string::npos ? Partition{} : partition_arg(flag, text.substr(slash + 1));
    try {
        return SkewShape(outer, inner);
    } catch (const std::invalid_argument& e) {
        throw DomainError(flag + ": " + e.what());
    }
}

inline std::string list_arg(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace detail

/// argv without the program name.
inline Command parse_args(const std::vector<std::string>& args) {
    if (args.empty()) throw UsageError("missing subcommand; expected one of lr, expand, multfree, heads, decompose, reduce, classify, toric, verify");

    const auto& names = subcommands();
    if (args.front().rfind("-", 0) != 0 && std::find(names.begin(), names.end(), args.front()) == names.end())
        throw UsageError("unknown subcommand '" + args.front() + "'");

    CLI::App app{"Spherical Schubert varieties in the Grassmannian", "spherical"};
    app.require_subcommand(1);
    std::string lam = "-", mu = "-", nu = "-", shape, w, blocks, fmt = "text";
    std::optional<int> n, d, n_vars;
    int r = 1, r_max = 3, n_max = 5;
    bool max_levi = false, timings = false;

    auto add_format = [&](CLI::App* sc) {
        sc->add_option("--format", fmt, "Output format")->check(CLI::IsMember({"text", "json"}));
        sc->add_flag("--timings", timings, "Include wall-clock timings in the output");
    };
    auto add_quadruple = [&](CLI::App* sc, bool need_blocks) {
        sc->add_option("--w", w, "Word, e.g. 2,7,9")->required();
        sc->add_option("--n", n, "Ambient dimension N")->required();
        sc->add_option("--d", d, "Word length (inferred from --w)");
        if (need_blocks) {
            auto* b = sc->add_option("--blocks", blocks, "Levi block sizes, e.g. 2,5,2");
            auto* m = sc->add_flag("--max-levi", max_levi, "Use the maximal Levi acting on X(w)");
            b->excludes(m);
        }
    };

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^lam_{mu,nu}");
    lr->add_option("--lam", lam)->required();
    lr->add_option("--mu", mu);
    lr->add_option("--nu", nu);
    auto* expand = app.add_subcommand("expand", "Schur expansion of a skew Schur function or polynomial");
    auto* multfree = app.add_subcommand("multfree", "Multiplicity-freeness of a skew Schur function or polynomial");
    for (auto* sc : {expand, multfree}) {
        sc->add_option("--shape", shape, "Skew shape, e.g. 4,2,2,1/2,2")->required();
        sc->add_option("--n-vars", n_vars, "Restrict to this many variables")->check(CLI::PositiveNumber);
    }
    auto* heads = app.add_subcommand("heads", "Degree-1 or standard degree-r heads of type L");
    auto* decompose = app.add_subcommand("decompose", "Irreducible L-decomposition of C[X(w)]_r");
    auto* reduce_cmd = app.add_subcommand("reduce", "Reduction of a quadruple");
    auto* classify_cmd = app.add_subcommand("classify", "Sphericity classification");
    for (auto* sc : {heads, decompose, reduce_cmd, classify_cmd}) add_quadruple(sc, true);
    for (auto* sc : {heads, decompose}) sc->add_option("--r", r, "Degree")->check(CLI::NonNegativeNumber);
    auto* toric = app.add_subcommand("toric", "Toric Schubert variety test");
    add_quadruple(toric, false);
    auto* verify = app.add_subcommand("verify", "Exhaustive classification sweep");
    verify->add_option("--n-max", n_max)->check(CLI::Range(2, 12));
    verify->add_option("--r-max", r_max)->check(CLI::Range(1, 6));
    for (auto* sc : app.get_subcommands([](CLI::App*) { return true; })) add_format(sc);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        if (dynamic_cast<const CLI::ExtrasError*>(&e) && !args.empty())
            msg = "unknown subcommand or argument '" + args.front() + "': " + msg;
        throw UsageError(msg);
    }

    Command c;
    c.name = app.get_subcommands().front()->get_name();
    c.format = fmt == "json" ? Format::json : Format::text;
    c.timings = timings;

    if (c.name == "lr") {
        c.lam = detail::partition_arg("--lam", lam);
        c.mu = detail::partition_arg("--mu", mu);
        c.nu = detail::partition_arg("--nu", nu);
    } else if (c.name == "expand" || c.name == "multfree") {
        c.shape = detail::shape_arg("--shape", shape);
        c.n_vars = n_vars;
    } else if (c.name == "verify") {
        c.n_max = n_max;
        c.r_max = r_max;
    } else {
        const int nn = *n;
        std::vector<int> entries;
        try {
            entries = detail::split_plain(w);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--w: ") + e.what());
        }
        try {
            c.word = GrassWord(std::move(entries), nn);
        } catch (const std::invalid_argument& e) {
            throw DomainError(std::string("--w: ") + e.what());
        }
        if (d && *d != c.word->d())
            throw DomainError("--d: " + std::to_string(*d) + " differs from the length of --w (" +
                              std::to_string(c.word->d()) + ")");
        if (c.name != "toric") {
            if (max_levi) {
                c.max_levi = true;
            } else if (!blocks.empty()) {
                c.blocks = detail::build<LeviBlocks>("--blocks", blocks, detail::split_plain,
                                                     [](std::vector<int> v) { return LeviBlocks(std::move(v)); });
                if (c.blocks->n() != nn)
                    throw DomainError("--blocks: sizes sum to " + std::to_string(c.blocks->n()) + " but --n is " +
                                      std::to_string(nn));
            } else {
                throw UsageError("--blocks or --max-levi is required");
            }
            if (c.word->d() >= nn) throw DomainError("--w: need d < N");
        }
        if (c.name == "heads" || c.name == "decompose") c.r = r;
    }
    return c;
}

/// Inverse of parse_args for valid commands.
inline std::vector<std::string> format_args(const Command& c) {
    std::vector<std::string> a{c.name};
    if (c.name == "lr") {
        a.insert(a.end(), {"--lam", to_arg(c.lam), "--mu", to_arg(c.mu), "--nu", to_arg(c.nu)});
    } else if (c.name == "expand" || c.name == "multfree") {
        a.insert(a.end(), {"--shape", to_arg(c.shape.outer()) + "/" + to_arg(c.shape.inner())});
        if (c.n_vars) a.insert(a.end(), {"--n-vars", std::to_string(*c.n_vars)});
    } else if (c.name == "verify") {
        a.insert(a.end(), {"--n-max", std::to_string(c.n_max), "--r-max", std::to_string(c.r_max)});
    } else {
        a.insert(a.end(), {"--w", detail::list_arg(c.word->entries()), "--n", std::to_string(c.word->n())});
        if (c.max_levi) a.push_back("--max-levi");
        if (c.blocks) a.insert(a.end(), {"--blocks", detail::list_arg(c.blocks->sizes())});
        if (c.name == "heads" || c.name == "decompose") a.insert(a.end(), {"--r", std::to_string(c.r)});
    }
    if (c.format == Format::json) a.insert(a.end(), {"--format", "json"});
    if (c.timings) a.push_back("--timings");
    return a;
}

struct Outcome {
    int exit_code = ExitCode::ok;
    std::string output;
};

namespace detail {

using json = nlohmann::ordered_json;

inline json to_json(const Partition& p) { return json(p.vec()); }

inline json to_json(const SkewShape& s) { return json{{"outer", to_json(s.outer())}, {"inner", to_json(s.inner())}}; }

inline json to_json(const Quadruple& q) {
    return json{{"w", q.w().entries()}, {"d", q.d()}, {"N", q.n()}, {"blocks", q.blocks().sizes()}};
}

inline json to_json(const IrrLabel& label) {
    json a = json::array();
    for (const auto& nu : label.nus) a.push_back(to_json(nu));
    return a;
}

inline json to_json(const StandardHead& s, const LeviBlocks& blocks) {
    json vectors = json::array(), words = json::array();
    for (const auto& h : s.heads) {
        vectors.push_back(h.m);
        words.push_back(theta_word(h, blocks));
    }
    return json{{"vectors", vectors}, {"words", words}};
}

inline json to_json(const Expansion& e) {
    json terms = json::array();
    for (const auto& [nu, c] : e.terms) terms.push_back(json{{"nu", to_json(nu)}, {"multiplicity", c}});
    return terms;
}

inline Quadruple quadruple_of(const Command& c) {
    const LeviBlocks blocks = c.max_levi ? maximal_levi(*c.word) : *c.blocks;
    return Quadruple(*c.word, blocks);
}

inline json input_echo(const Command& c) {
    json in = json::object();
    if (c.name == "lr") {
        in = json{{"lam", to_json(c.lam)}, {"mu", to_json(c.mu)}, {"nu", to_json(c.nu)}};
    } else if (c.name == "expand" || c.name == "multfree") {
        in = json{{"shape", to_json(c.shape)}};
        if (c.n_vars) in["n_vars"] = *c.n_vars;
    } else if (c.name == "verify") {
        in = json{{"n_max", c.n_max}, {"r_max", c.r_max}};
    } else {
        in = json{{"w", c.word->entries()}, {"d", c.word->d()}, {"N", c.word->n()}};
        if (c.name != "toric") {
            in["blocks"] = c.max_levi ? json(maximal_levi(*c.word).sizes()) : json(c.blocks->sizes());
            in["max_levi"] = c.max_levi;
        }
        if (c.name == "heads" || c.name == "decompose") in["r"] = c.r;
    }
    return in;
}

inline std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

inline std::pair<json, std::string> execute(const Command& c) {
    std::ostringstream text;
    json res = json::object();

    if (c.name == "lr") {
        const Count v = lr_coefficient(c.lam, c.mu, c.nu);
        res["coefficient"] = v;
        text << v << "\n";
    } else if (c.name == "expand") {
        const Expansion e = c.n_vars ? expand_skew_schur_poly(c.shape, *c.n_vars) : expand_skew_schur(c.shape);
        res["terms"] = to_json(e);
        res["max_multiplicity"] = e.max_multiplicity();
        text << e.to_text();
    } else if (c.name == "multfree") {
        const bool function_level = is_multfree_function(c.shape);
        res["basic_form"] = to_json(basic_form(c.shape));
        res["function_multiplicity_free"] = function_level;
        text << "basic form: " << to_string(basic_form(c.shape)) << "\n";
        text << "skew Schur function multiplicity free: " << (function_level ? "yes" : "no") << "\n";
        if (c.n_vars) {
            const bool poly = is_multfree_poly(c.shape, *c.n_vars);
            res["polynomial_multiplicity_free"] = poly;
            text << "skew Schur polynomial in " << *c.n_vars << " variables multiplicity free: " << (poly ? "yes" : "no")
                 << "\n";
        }
    } else if (c.name == "heads") {
        const Quadruple q = quadruple_of(c);
        const json hv = h_vector(q);
        res["h"] = hv;
        json list = json::array();
        text << "h = " << to_string(h_vector(q)) << "\n";
        if (c.r == 1) {
            for (const auto& h : enumerate_heads(q)) {
                list.push_back(json{{"vector", h.m}, {"word", theta_word(h, q.blocks())}});
                text << to_string(h) << " = " << to_string(theta_word(h, q.blocks())) << "\n";
            }
        } else {
            for (const auto& s : enumerate_standard_heads(q, c.r)) {
                json item = to_json(s, q.blocks());
                json shapes = json::array();
                std::string shape_text;
                for (const auto& sh : block_shapes(s, q.blocks())) {
                    shapes.push_back(to_json(sh));
                    shape_text += " " + to_string(sh);
                }
                item["block_shapes"] = shapes;
                item["dimension"] = head_module_dim(s, q.blocks()).str();
                list.push_back(item);
                text << to_string(s, q.blocks()) << " shapes:" << shape_text << "\n";
            }
        }
        res["heads"] = list;
        res["count"] = list.size();
    } else if (c.name == "decompose") {
        const Quadruple q = quadruple_of(c);
        const Decomposition dec = decompose_degree(q, c.r);
        json terms = json::array();
        for (const auto& [label, m] : dec.terms) {
            terms.push_back(json{{"label", to_json(label)}, {"multiplicity", m}});
            text << to_string(label) << ": " << m << "\n";
        }
        const BigInt dim = dec.dimension(q.blocks());
        const BigInt expect = count_standard_monomials(q.w(), c.r);
        if (dim != expect)
            throw invariant_violation("decomposition dimension " + dim.str() + " differs from standard monomial count " +
                                      expect.str());
        res["terms"] = terms;
        res["multiplicity_free"] = dec.multiplicity_free();
        res["dimension"] = dim.str();
        text << "dimension " << dim << ", " << (dec.multiplicity_free() ? "multiplicity free" : "not multiplicity free")
             << "\n";
    } else if (c.name == "reduce") {
        const Quadruple q = quadruple_of(c);
        const Quadruple red = reduce(q);
        res["reduced"] = to_json(red);
        text << "w=" << to_string(red.w()) << " d=" << red.d() << " N=" << red.n() << " blocks=" << to_string(red.blocks())
             << "\n";
    } else if (c.name == "classify") {
        const Quadruple q = quadruple_of(c);
        const ClassificationResult cls = classify(q);
        res["verdict"] = to_string(cls.verdict);
        res["route"] = to_string(cls.route);
        res["reduced_first"] = cls.reduced_first;
        if (cls.reduced) {
            res["reduced"] = to_json(*cls.reduced);
            res["h"] = h_vector(*cls.reduced);
        }
        if (cls.condition) res["condition"] = *cls.condition;
        if (cls.p_w) res["p_w"] = *cls.p_w;
        if (cls.mc_failing_k || cls.mcc_failing_k) {
            json wit = json::object();
            if (cls.mc_failing_k) wit["mc_failing_k"] = *cls.mc_failing_k;
            if (cls.mcc_failing_k) wit["mcc_failing_k"] = *cls.mcc_failing_k;
            res["witnesses"] = wit;
        }
        text << "verdict: " << to_string(cls.verdict) << "\n"
             << "route: " << to_string(cls.route) << (cls.reduced_first ? " (after reduction)" : "") << "\n";
        if (cls.reduced)
            text << "reduced: w=" << to_string(cls.reduced->w()) << " N=" << cls.reduced->n()
                 << " blocks=" << to_string(cls.reduced->blocks()) << " h=" << to_string(h_vector(*cls.reduced)) << "\n";
        if (cls.condition) text << "condition: " << *cls.condition << "\n";
        if (cls.p_w) text << "p_w: " << *cls.p_w << "\n";
        if (cls.mc_failing_k) text << "MC fails at k=" << *cls.mc_failing_k << "\n";
        if (cls.mcc_failing_k) text << "MCC fails at k=" << *cls.mcc_failing_k << "\n";
    } else if (c.name == "toric") {
        const bool t = is_toric(*c.word);
        res["toric"] = t;
        text << (t ? "toric" : "not toric") << "\n";
    } else if (c.name == "verify") {
        const SweepReport rep = verify_sweep(c.n_max, c.r_max);
        res["quadruples"] = rep.quadruples;
        res["identity_cases"] = rep.identity_cases;
        res["spherical"] = rep.spherical;
        res["distinct_reduced"] = rep.distinct_reduced;
        res["counterexample"] = rep.counterexample ? json(*rep.counterexample) : json(nullptr);
        text << "checked " << rep.quadruples << " stable quadruples (" << rep.distinct_reduced
             << " distinct reductions), " << rep.spherical << " spherical\n";
        text << (rep.passed() ? "no counterexamples" : "COUNTEREXAMPLE: " + *rep.counterexample) << "\n";
    }
    return {res, text.str()};
}

}  // namespace detail

inline Outcome run(const Command& c) {
    using detail::json;
    Outcome out;
    json doc{{"command", c.name}, {"version", spherical::version}, {"input", detail::input_echo(c)}};
    const auto start = std::chrono::steady_clock::now();
    try {
        auto [res, text] = detail::execute(c);
        doc["result"] = res;
        if (c.name == "verify" && !res["counterexample"].is_null()) out.exit_code = ExitCode::internal;
        out.output = std::move(text);
    } catch (const std::invalid_argument& e) {
        out.exit_code = ExitCode::domain;
        doc["error"] = e.what();
        out.output = std::string("error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        out.exit_code = ExitCode::internal;
        doc["error"] = e.what();
        out.output = std::string("internal error: ") + e.what() + "\n";
    }
    if (c.timings) {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        doc["timings"] = json{{"seconds", secs}};
        out.output += "time: " + std::to_string(secs) + " s\n";
    }
    if (c.format == Format::json) out.output = doc.dump() + "\n";
    return out;
}

/// Full invocation: parse, run, map errors to exit codes.
inline Outcome main_with_args(const std::vector<std::string>& args) {
    try {
        return run(parse_args(args));
    } catch (const HelpRequested& h) {
        return {ExitCode::ok, h.what()};
    } catch (const UsageError& e) {
        return {ExitCode::usage, std::string("usage error: ") + e.what() + "\n"};
    } catch (const DomainError& e) {
        return {ExitCode::domain, std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace spherical::cli
