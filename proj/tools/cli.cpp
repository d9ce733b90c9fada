#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "erpoly/classify.hpp"
#include "erpoly/errors.hpp"
#include "erpoly/geometry.hpp"
#include "erpoly/harness.hpp"
#include "erpoly/parser.hpp"

using json = nlohmann::ordered_json;
using namespace erpoly;

namespace {

std::string rs(const Rat& r) { return rat_to_string(r); }

// "a..b" inclusive integer range.
std::pair<long, long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("range", "expected a..b, got '" + s + "'");
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
}

// "2^a..2^b" -> {2^a, 2^(a+1), ..., 2^b}.
std::vector<int> parse_pow2_grid(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos || s.rfind("2^", 0) != 0 ||
        s.compare(dots + 2, 2, "2^") != 0)
        throw CLI::ValidationError("n-grid", "expected 2^a..2^b, got '" + s + "'");
    int lo = std::stoi(s.substr(2, dots - 2));
    int hi = std::stoi(s.substr(dots + 4));
    if (lo < 0 || hi < lo || hi > 30)
        throw CLI::ValidationError("n-grid", "bad exponent range in '" + s + "'");
    std::vector<int> grid;
    for (int e = lo; e <= hi; ++e) grid.push_back(1 << e);
    return grid;
}

json additive_form_json(const AdditiveForm& f) {
    return {{"f", f.f.to_string("z")},
            {"u", f.u.to_string("x")},
            {"v", f.v.to_string("y")}};
}

json multiplicative_form_json(const MultiplicativeForm& f) {
    return {{"f", f.f.to_string("z")},
            {"u", f.u.to_string("x")},
            {"v", f.v.to_string("y")}};
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ExpandingCandidate: return "ExpandingCandidate";
        case Verdict::AdditivePair: return "AdditivePair";
        case Verdict::MultiplicativePair: return "MultiplicativePair";
    }
    return "?";
}

// Independent recomposition check of every certificate before printing.
void verify_pair(const PairClassification& c, const BiPoly& p, const BiPoly& q) {
    if (c.verdict == Verdict::AdditivePair) {
        const auto& a = *c.additive;
        BiPoly ip = BiPoly::from_x(a.u * a.gamma1) + BiPoly::from_y(a.v * a.delta1);
        BiPoly iq = BiPoly::from_x(a.u * a.gamma2) + BiPoly::from_y(a.v * a.delta2);
        if (!(compose_uni_bi(a.f, ip) == p && compose_uni_bi(a.g, iq) == q))
            throw std::logic_error("certificate failed re-verification");
    } else if (c.verdict == Verdict::MultiplicativePair) {
        const auto& m = *c.multiplicative;
        BiPoly ip = BiPoly::from_x(m.u.pow(m.m1)) * BiPoly::from_y(m.v.pow(m.n1));
        BiPoly iq = BiPoly::from_x(m.u.pow(m.m2)) * BiPoly::from_y(m.v.pow(m.n2));
        if (!(compose_uni_bi(m.f, ip) == p && compose_uni_bi(m.g, iq) == q))
            throw std::logic_error("certificate failed re-verification");
    }
}

void verify_symmetric(const SymmetricClassification& c, const BiPoly& p,
                      const BiPoly& q) {
    if (c.verdict == Verdict::AdditivePair) {
        const auto& a = *c.additive;
        BiPoly ip = BiPoly::from_x(a.u * a.gamma1) + BiPoly::from_y(a.u * a.delta1);
        BiPoly iq = BiPoly::from_x(a.u * a.gamma2) + BiPoly::from_y(a.u * a.delta2);
        if (!(compose_uni_bi(a.f, ip) == p && compose_uni_bi(a.g, iq) == q))
            throw std::logic_error("certificate failed re-verification");
    } else if (c.verdict == Verdict::MultiplicativePair) {
        const auto& m = *c.multiplicative;
        BiPoly ip = BiPoly::from_x(m.u.pow(m.m1)) * BiPoly::from_y(m.u.pow(m.n1));
        BiPoly iq = BiPoly::from_x(m.u.pow(m.m2)) * BiPoly::from_y(m.u.pow(m.n2));
        if (!(compose_uni_bi(m.f, ip) == p && compose_uni_bi(m.g, iq) == q))
            throw std::logic_error("certificate failed re-verification");
    }
}

struct Options {
    std::uint64_t seed = 0;
    int precision = 20;
    std::string format = "text";

    Rat tolerance() const {
        Rat t(1);
        for (int i = 0; i < precision; ++i) t /= 2;
        return t;
    }
    bool tree() const { return format == "tree"; }
};

void emit(const Options& opt, const json& tree, const std::string& text) {
    if (opt.tree())
        std::cout << tree.dump(2) << "\n";
    else
        std::cout << text;
}

int run_decompose(const Options& opt, const std::string& p_text) {
    BiPoly p = parse_bipoly(p_text);
    auto ad = additive_decompose(p);
    auto mu = multiplicative_decompose(p);
    json tree = {{"additive", ad ? additive_form_json(*ad) : json(nullptr)},
                 {"multiplicative",
                  mu ? multiplicative_form_json(*mu) : json(nullptr)}};
    std::string text;
    text += ad ? "additive: f = " + ad->f.to_string("z") + ", u = " +
                     ad->u.to_string("x") + ", v = " + ad->v.to_string("y") + "\n"
               : "additive: none\n";
    text += mu ? "multiplicative: f = " + mu->f.to_string("z") + ", u = " +
                     mu->u.to_string("x") + ", v = " + mu->v.to_string("y") + "\n"
               : "multiplicative: none\n";
    emit(opt, tree, text);
    return 0;
}

int run_classify(const Options& opt, const std::string& p_text,
                 const std::string& q_text, bool symmetric, bool single) {
    BiPoly p = parse_bipoly(p_text);
    if (single || symmetric) {
        SymmetricClassification c =
            single ? classify_single(p)
                   : classify_symmetric(p, parse_bipoly(q_text));
        BiPoly q = single ? p : parse_bipoly(q_text);
        verify_symmetric(c, p, q);
        json tree = {{"verdict", verdict_name(c.verdict)}};
        std::string text = std::string("verdict: ") + verdict_name(c.verdict) + "\n";
        if (c.additive) {
            const auto& a = *c.additive;
            tree["certificate"] = {{"f", a.f.to_string("z")},
                                   {"g", a.g.to_string("z")},
                                   {"u", a.u.to_string()},
                                   {"gamma1", rs(a.gamma1)},
                                   {"delta1", rs(a.delta1)},
                                   {"gamma2", rs(a.gamma2)},
                                   {"delta2", rs(a.delta2)}};
            text += "f = " + a.f.to_string("z") + "\ng = " + a.g.to_string("z") +
                    "\nu = " + a.u.to_string() + "\nscalars: (" + rs(a.gamma1) +
                    ", " + rs(a.delta1) + "), (" + rs(a.gamma2) + ", " +
                    rs(a.delta2) + ")\n";
        } else if (c.multiplicative) {
            const auto& m = *c.multiplicative;
            tree["certificate"] = {{"f", m.f.to_string("z")},
                                   {"g", m.g.to_string("z")},
                                   {"u", m.u.to_string()},
                                   {"m1", m.m1}, {"n1", m.n1},
                                   {"m2", m.m2}, {"n2", m.n2}};
            text += "f = " + m.f.to_string("z") + "\ng = " + m.g.to_string("z") +
                    "\nu = " + m.u.to_string() + "\nexponents: (" +
                    std::to_string(m.m1) + ", " + std::to_string(m.n1) + "), (" +
                    std::to_string(m.m2) + ", " + std::to_string(m.n2) + ")\n";
        }
        emit(opt, tree, text);
        return 0;
    }
    BiPoly q = parse_bipoly(q_text);
    PairClassification c = classify_pair(p, q);
    verify_pair(c, p, q);
    json tree = {{"verdict", verdict_name(c.verdict)}};
    std::string text = std::string("verdict: ") + verdict_name(c.verdict) + "\n";
    if (c.additive) {
        const auto& a = *c.additive;
        tree["certificate"] = {{"f", a.f.to_string("z")},
                               {"g", a.g.to_string("z")},
                               {"u", a.u.to_string("x")},
                               {"v", a.v.to_string("y")},
                               {"gamma1", rs(a.gamma1)},
                               {"delta1", rs(a.delta1)},
                               {"gamma2", rs(a.gamma2)},
                               {"delta2", rs(a.delta2)}};
        text += "f = " + a.f.to_string("z") + "\ng = " + a.g.to_string("z") +
                "\nu = " + a.u.to_string("x") + "\nv = " + a.v.to_string("y") +
                "\nscalars: (" + rs(a.gamma1) + ", " + rs(a.delta1) + "), (" +
                rs(a.gamma2) + ", " + rs(a.delta2) + ")\n";
    } else if (c.multiplicative) {
        const auto& m = *c.multiplicative;
        tree["certificate"] = {{"f", m.f.to_string("z")},
                               {"g", m.g.to_string("z")},
                               {"u", m.u.to_string("x")},
                               {"v", m.v.to_string("y")},
                               {"m1", m.m1}, {"n1", m.n1},
                               {"m2", m.m2}, {"n2", m.n2}};
        text += "f = " + m.f.to_string("z") + "\ng = " + m.g.to_string("z") +
                "\nu = " + m.u.to_string("x") + "\nv = " + m.v.to_string("y") +
                "\nexponents: (" + std::to_string(m.m1) + ", " +
                std::to_string(m.n1) + "), (" + std::to_string(m.m2) + ", " +
                std::to_string(m.n2) + ")\n";
    }
    emit(opt, tree, text);
    return 0;
}

int run_scatter(const Options& opt, const std::string& p_text,
                const std::string& q_text, const std::string& grid_spec,
                std::optional<int> threshold) {
    BiPoly p = parse_bipoly(p_text);
    BiPoly q = parse_bipoly(q_text);
    auto [lo, hi] = parse_range(grid_spec);
    std::vector<Rat> s;
    for (long v = lo; v <= hi; ++v) s.push_back(Rat(v));
    ScatterReport rep = scatter_probe(p, q, s, threshold);
    json params = json::array();
    for (const auto& g : rep.grid)
        params.push_back({{"b1", rs(g.b1)}, {"b2", rs(g.b2)}});
    json excluded = json::array();
    for (const auto& e : rep.excluded)
        excluded.push_back({{"b", rs(e.b)}, {"section", e.for_p ? "P" : "Q"}});
    json tree = {{"params", params},
                 {"counts", rep.counts},
                 {"excluded", excluded},
                 {"threshold", rep.threshold},
                 {"max_count", rep.max_count},
                 {"verdict", rep.scattered}};
    std::string text;
    text += "b1\tb2\tcount\n";
    for (std::size_t i = 0; i < rep.grid.size(); ++i)
        text += rs(rep.grid[i].b1) + "\t" + rs(rep.grid[i].b2) + "\t" +
                std::to_string(rep.counts[i]) + "\n";
    for (const auto& e : rep.excluded)
        text += "excluded: b = " + rs(e.b) +
                (e.for_p ? " (P section constant)\n" : " (Q section constant)\n");
    text += "max count: " + std::to_string(rep.max_count) +
            " (threshold " + std::to_string(rep.threshold) + ")\n";
    text += std::string("verdict: ") +
            (rep.scattered ? "scattered-on-grid" : "not scattered") + "\n";
    emit(opt, tree, text);
    return 0;
}

int run_expand(const Options& opt, const std::string& p_text,
               const std::string& q_text, const std::string& family,
               const std::string& n_spec, const std::string& out_path) {
    BiPoly p = parse_bipoly(p_text);
    BiPoly q = parse_bipoly(q_text);
    std::vector<int> grid = parse_pow2_grid(n_spec);
    SetFamily fam;
    if (family == "witness") {
        // Resolve the witness flavor from the classification.
        PairClassification c = classify_pair(p, q);
        if (c.verdict == Verdict::AdditivePair)
            fam = SetFamily::WitnessAdditive;
        else if (c.verdict == Verdict::MultiplicativePair)
            fam = SetFamily::WitnessMultiplicative;
        else
            throw precondition_error(
                "expand --family witness: pair classifies ExpandingCandidate");
    } else if (family == "ap") {
        fam = SetFamily::ArithmeticProgression;
    } else if (family == "gp") {
        fam = SetFamily::GeometricProgression;
    } else if (family == "random") {
        fam = SetFamily::UniformRandom;
    } else {
        throw CLI::ValidationError("family",
                                   "expected witness|ap|gp|random");
    }
    ExpansionSeries series =
        run_series(p, q, fam, grid, opt.seed, opt.tolerance());
    if (out_path.empty() || out_path == "-") {
        write_csv(series, std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        write_csv(series, out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact structure analysis of bivariate polynomial pairs"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--seed", opt.seed, "random-family seed");
    app.add_option("--precision", opt.precision,
                   "certified-mode tolerance is 2^-precision");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "tree"}));

    std::string p_text, q_text, grid_spec, family, n_spec, out_path;
    bool symmetric = false, single = false;
    int threshold = -1;

    auto* dec = app.add_subcommand("decompose", "canonical additive and multiplicative forms");
    dec->add_option("P", p_text)->required();

    auto* cls = app.add_subcommand("classify", "trichotomy with certificate");
    cls->add_option("P", p_text)->required();
    cls->add_option("Q", q_text);
    cls->add_flag("--symmetric", symmetric, "common inner base u for x and y");
    cls->add_flag("--single", single, "classify one polynomial against itself");

    auto* sca = app.add_subcommand("scatter", "curve-family intersection probe");
    sca->add_option("P", p_text)->required();
    sca->add_option("Q", q_text)->required();
    sca->add_option("--grid", grid_spec, "integer sample range a..b")->required();
    sca->add_option("--threshold", threshold, "scattered-on-grid cutoff");

    auto* exp = app.add_subcommand("expand", "image-growth series to CSV");
    exp->add_option("P", p_text)->required();
    exp->add_option("Q", q_text)->required();
    exp->add_option("--family", family, "witness|ap|gp|random")->required();
    exp->add_option("--n", n_spec, "set sizes 2^a..2^b")->required();
    exp->add_option("--out", out_path, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        if (dec->parsed()) return run_decompose(opt, p_text);
        if (cls->parsed()) {
            if (!single && q_text.empty())
                throw CLI::ValidationError("classify", "Q required unless --single");
            return run_classify(opt, p_text, q_text, symmetric, single);
        }
        if (sca->parsed())
            return run_scatter(opt, p_text, q_text, grid_spec,
                               threshold >= 0 ? std::optional<int>(threshold)
                                              : std::nullopt);
        if (exp->parsed())
            return run_expand(opt, p_text, q_text, family, n_spec, out_path);
    } catch (const parse_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const precondition_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const precision_exhausted_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
