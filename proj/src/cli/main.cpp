#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cyclica/fedosov.hpp"
#include "cyclica/forms.hpp"
#include "cyclica/hp.hpp"
#include "cyclica/json_io.hpp"

using namespace cyclica;

namespace {

enum Exit : int { kPass = 0, kFail = 1, kParse = 2, kInvariant = 3, kInconclusive = 4 };

struct RunConfig {
    std::size_t max_degree = 6;
    std::size_t max_level = 2;
    std::size_t window = 2;
    std::size_t cap = kDefaultFedosovCap;
    std::string format = "json";
    std::string out;
};

struct Outcome {
    Json report;
    int code = kPass;
};

int verdict_code(Verdict v) {
    switch (v) {
        case Verdict::pass: return kPass;
        case Verdict::fail: return kFail;
        case Verdict::inconclusive: return kInconclusive;
    }
    return kFail;
}

const IdealInclusion& pick_ideal(const AlgebraInput& in, const std::string& name) {
    if (name.empty()) {
        if (in.ideals.size() == 1) return in.ideals.begin()->second;
        throw ParseError("choose an ideal with --ideal (the input declares " + std::to_string(in.ideals.size()) + ")");
    }
    auto it = in.ideals.find(name);
    if (it == in.ideals.end()) throw ParseError("no ideal named \"" + name + "\" in the input");
    return it->second;
}

Algebra target_algebra(const std::string& path) {
    return path.empty() ? Algebra::ground_field() : load_algebra(path).algebra;
}

Outcome cmd_homology(const AlgebraInput& in, const RunConfig& cfg) {
    FormsComplex f = omega_unchecked(in.algebra, cfg.max_degree);
    auto ids = f.mixed.check_identities();
    ChainComplex c = cyclic_sub(f);
    Json hh = Json::array();
    for (int n = 0; n <= c.top_defined_degree(); ++n) hh.push_back(c.homology_dim(n));
    Outcome o;
    o.report = {{"algebra", in.algebra.name()},
                {"dim", in.algebra.dim()},
                {"max_degree", cfg.max_degree},
                {"hochschild_homology", hh},
                {"omega_identities",
                 {{"b_squared", ids.b_squared}, {"B_squared", ids.B_squared}, {"anticommute", ids.anticommute}}}};
    o.code = ids.all() ? kPass : kInvariant;
    return o;
}

Outcome cmd_hp(const AlgebraInput& in, const std::string& target, const RunConfig& cfg) {
    Algebra b = target_algebra(target);
    Outcome o;
    HPReport r = hp_grid(in.algebra, b, cfg.max_degree, cfg.window);
    o.report = to_json(r);
    o.report["source"] = in.algebra.name();
    o.report["target"] = b.name();
    o.code = verdict_code(r.verdict());
    return o;
}

Outcome cmd_excision(const AlgebraInput& in, const std::string& ideal, const std::string& target, const RunConfig& cfg) {
    ExcisionReport r = verify_excision(pick_ideal(in, ideal), target_algebra(target), cfg.max_degree, cfg.window);
    return {to_json(r), verdict_code(r.verdict)};
}

Outcome cmd_goodwillie(const AlgebraInput& in, const std::string& ideal, const RunConfig& cfg) {
    GoodwillieReport r = verify_goodwillie(pick_ideal(in, ideal), cfg.max_degree, cfg.window);
    return {to_json(r), verdict_code(r.verdict)};
}

/// K is the named ideal inside the input algebra, or the input algebra as an
/// ideal of its unitalization when no ideal is named.
Outcome cmd_hunital(const AlgebraInput& in, const std::string& ideal, const RunConfig& cfg) {
    std::vector<IdealInclusion> emb;
    if (!ideal.empty()) {
        emb.push_back(pick_ideal(in, ideal));
    } else {
        Algebra u = unitalize(in.algebra);
        std::vector<SparseVec> basis;
        for (std::uint32_t i = 0; i < in.algebra.dim(); ++i) basis.push_back(unit_vec(i));
        emb.push_back(IdealInclusion::span(u, basis));
    }
    HUnitalReport r = check_h_unital(emb.front().as_algebra(), emb, cfg.max_degree);
    return {to_json(r), verdict_code(r.verdict())};
}

Outcome cmd_fedosov(const AlgebraInput& in, const RunConfig& cfg) {
    Json levels = Json::array();
    bool ok = true;
    for (std::size_t n = 1; n <= cfg.max_level; ++n) {
        FundamentalCochain f = fundamental_cochain(in.algebra, n, cfg.cap);
        CochainIdentityReport r = check_cochain_identities(f);
        Json j = to_json(r);
        j["n"] = n;
        j["dim"] = f.source.dim();
        j["associative"] = true;  // t_algebra rejects non-associative products
        levels.push_back(j);
        ok = ok && r.coboundary_ok() && r.cocycle_ok();
    }
    Outcome o;
    o.report = {{"verdict", ok ? "pass" : "fail"}, {"algebra", in.algebra.name()}, {"levels", levels}};
    o.code = ok ? kPass : kFail;
    return o;
}

/// One "path: value" line per leaf, in key order.
void flatten(const Json& j, const std::string& path, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    } else {
        os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const Outcome& o, const RunConfig& cfg) {
    std::ostringstream text;
    if (cfg.format == "text")
        flatten(o.report, "", text);
    else
        text << dump(o.report);
    if (cfg.out.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream f(cfg.out);
        if (!f) throw ParseError("cannot write " + cfg.out);
        f << text.str();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodic cyclic homology of finite-dimensional algebras over Q"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--max-degree", cfg.max_degree, "Number of X-levels / truncation degree N")->capture_default_str();
    app.add_option("--max-level", cfg.max_level, "Highest Fedosov level")->capture_default_str();
    app.add_option("--window", cfg.window, "Stabilization window w")->capture_default_str();
    app.add_option("--cap", cfg.cap, "Dimension cap for Fedosov levels")->capture_default_str();
    app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--out", cfg.out, "Write the report to a file instead of stdout");

    std::string input, target, ideal, kind;
    auto* homology = app.add_subcommand("homology", "Hochschild homology dims and ΩA identity checks");
    homology->add_option("input", input, "Algebra JSON")->required();

    auto* hp = app.add_subcommand("hp", "Bivariant HP grid against a target algebra (default Q)");
    hp->add_option("input", input, "Algebra JSON")->required();
    hp->add_option("--target", target, "Target algebra JSON");

    auto* verify = app.add_subcommand("verify", "Run a verifier");
    verify->add_option("kind", kind, "excision | goodwillie | hunital | fedosov")
        ->required()
        ->check(CLI::IsMember({"excision", "goodwillie", "hunital", "fedosov"}));
    verify->add_option("input", input, "Algebra JSON")->required();
    verify->add_option("--ideal", ideal, "Ideal name from the input");
    verify->add_option("--target", target, "Target algebra JSON (excision)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kParse;
    }
    if (cfg.max_degree < 3 || cfg.window < 1) {
        std::cerr << "error: need --max-degree ≥ 3 and --window ≥ 1\n";
        return kParse;
    }
    try {
        AlgebraInput in = load_algebra(input);
        Outcome o;
        if (homology->parsed()) {
            o = cmd_homology(in, cfg);
        } else if (hp->parsed()) {
            o = cmd_hp(in, target, cfg);
        } else if (kind == "excision") {
            o = cmd_excision(in, ideal, target, cfg);
        } else if (kind == "goodwillie") {
            o = cmd_goodwillie(in, ideal, cfg);
        } else if (kind == "hunital") {
            o = cmd_hunital(in, ideal, cfg);
        } else {
            o = cmd_fedosov(in, cfg);
        }
        emit(o, cfg);
        return o.code;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const DimensionCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvariant;
    } catch (const NonNilpotentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvariant;
    } catch (const InvariantError& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kInvariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }
}
