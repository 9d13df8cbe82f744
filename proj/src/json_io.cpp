#include "cyclica/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cyclica {

namespace {

Json optional_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json("unstable"); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

SparseVec vector_from_json(const Json& j, std::size_t dim, const std::string& what) {
    if (!j.is_array() || j.size() != dim)
        throw ParseError(what + ": expected an array of " + std::to_string(dim) + " rationals");
    std::vector<Entry> raw;
    for (std::size_t k = 0; k < dim; ++k) raw.push_back({std::uint32_t(k), rational_from_json(j[k])});
    return normalize(std::move(raw));
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw ParseError("rational must be a string \"p/q\" or an integer");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError("bad rational \"" + j.get<std::string>() + "\": " + e.what());
    }
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (const auto& r : m.to_dense()) {
        Json row = Json::array();
        for (const auto& v : r) row.push_back(v.str());
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t cols) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    std::vector<SparseVec> rows;
    for (const auto& r : j) rows.push_back(vector_from_json(r, cols, "matrix row"));
    return Matrix::from_rows(cols, std::move(rows));
}

AlgebraInput algebra_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("algebra must be a JSON object");
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : "A";
    const Json& dj = field(j, "dim");
    if (!dj.is_number_unsigned()) throw ParseError("\"dim\" must be a non-negative integer");
    std::size_t d = dj.get<std::size_t>();
    const Json& mult = field(j, "mult");
    if (!mult.is_array() || mult.size() != d) throw ParseError("\"mult\" must be a d×d×d array");
    std::vector<Rational> c;
    c.reserve(d * d * d);
    for (std::size_t i = 0; i < d; ++i) {
        if (!mult[i].is_array() || mult[i].size() != d) throw ParseError("\"mult\" must be a d×d×d array");
        for (std::size_t jj = 0; jj < d; ++jj) {
            const Json& v = mult[i][jj];
            if (!v.is_array() || v.size() != d) throw ParseError("\"mult\" must be a d×d×d array");
            for (std::size_t k = 0; k < d; ++k) c.push_back(rational_from_json(v[k]));
        }
    }
    AlgebraInput in{Algebra(name, d, c), {}};
    if (j.contains("ideals")) {
        const Json& ids = j.at("ideals");
        if (!ids.is_object()) throw ParseError("\"ideals\" must map names to lists of vectors");
        for (const auto& [key, vecs] : ids.items()) {
            if (!vecs.is_array()) throw ParseError("ideal \"" + key + "\" must be a list of vectors");
            std::vector<SparseVec> basis;
            for (const auto& v : vecs) basis.push_back(vector_from_json(v, d, "ideal \"" + key + "\""));
            in.ideals.emplace(key, IdealInclusion::span(in.algebra, basis));
        }
    }
    return in;
}

AlgebraInput load_algebra(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    Json j;
    try {
        j = Json::parse(f);
    } catch (const Json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    try {
        return algebra_from_json(j);
    } catch (const Json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Json algebra_to_json(const Algebra& a, const std::map<std::string, IdealInclusion>& ideals) {
    const std::size_t d = a.dim();
    Json mult = Json::array();
    for (std::size_t i = 0; i < d; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < d; ++j) {
            Json v = Json::array();
            for (std::size_t k = 0; k < d; ++k) v.push_back(a.c(i, j, k).str());
            row.push_back(v);
        }
        mult.push_back(row);
    }
    Json out{{"name", a.name()}, {"dim", d}, {"mult", mult}};
    if (!ideals.empty()) {
        Json ids = Json::object();
        for (const auto& [name, k] : ideals) {
            Json vecs = Json::array();
            for (const auto& v : k.basis()) {
                Json dense = Json::array();
                for (std::size_t c = 0; c < d; ++c) dense.push_back(coeff(v, std::uint32_t(c)).str());
                vecs.push_back(dense);
            }
            ids[name] = vecs;
        }
        out["ideals"] = ids;
    }
    return out;
}

Json complex_to_json(const ChainComplex& c) {
    Json dims = Json::array(), d = Json::array();
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
        dims.push_back(c.dim(n));
        d.push_back(matrix_to_json(c.d(n)));
    }
    return {{"min_degree", c.min_degree()}, {"dims", dims}, {"d", d}, {"truncated", c.truncated()}};
}

Json super_to_json(const SuperComplex& x) {
    return {{"dims", {x.dim_even(), x.dim_odd()}},
            {"d", {matrix_to_json(x.d_even()), matrix_to_json(x.d_odd())}}};
}

Json tower_to_json(const Tower& t) {
    Json levels = Json::array(), sigma = Json::array();
    for (std::size_t n = 1; n <= t.size(); ++n) {
        levels.push_back(super_to_json(t.level(n)));
        if (n > 1) sigma.push_back({matrix_to_json(t.sigma(n).even), matrix_to_json(t.sigma(n).odd)});
    }
    return {{"levels", levels}, {"sigma", sigma}};
}

Json to_json(const ProTrivialityReport& r) {
    Json levels = Json::array();
    for (const auto& l : r.levels)
        levels.push_back({{"level", l.level},
                          {"homology_dim", l.homology_dim},
                          {"witness", l.witness ? Json(*l.witness) : Json(nullptr)},
                          {"ranks", l.ranks}});
    return {{"verdict", to_string(r.verdict)}, {"max_level", r.max_level}, {"window", r.window}, {"levels", levels}};
}

Json to_json(const HPReport& r) {
    Json grid = Json::array();
    for (std::size_t m = 0; m < r.grid.size(); ++m)
        for (std::size_t n = 0; n < r.grid[m].size(); ++n)
            grid.push_back({{"source_level", m + 1}, {"target_level", n + 1},
                            {"even", r.grid[m][n][0]}, {"odd", r.grid[m][n][1]}});
    Json stab = Json::array();
    for (std::size_t n = 0; n < r.stabilized.size(); ++n)
        stab.push_back({{"target_level", n + 1},
                        {"even", optional_json(r.stabilized[n][0])},
                        {"odd", optional_json(r.stabilized[n][1])}});
    return {{"verdict", to_string(r.verdict())},
            {"N", r.N},
            {"window", r.window},
            {"grid", grid},
            {"stabilized", stab},
            {"HP", {{"even", optional_json(r.overall[0])}, {"odd", optional_json(r.overall[1])}}}};
}

Json to_json(const GoodwillieReport& r) {
    return {{"verdict", to_string(r.verdict)},
            {"nilpotency", r.nilpotency},
            {"map_cone", to_json(r.map_cone)},
            {"graded_positive", to_json(r.graded_positive)}};
}

Json to_json(const HUnitalReport& r) {
    return {{"verdict", to_string(r.verdict())},
            {"N", r.N},
            {"consistent", r.consistent()},
            {"condition_i", r.cond_i},
            {"bar_homology", r.bar_homology},
            {"condition_ii", r.cond_ii},
            {"condition_iii", r.cond_iii}};
}

Json to_json(const SixTermReport& r) {
    Json nodes = Json::array(), checks = Json::array();
    for (std::size_t k = 0; k < 6; ++k)
        nodes.push_back({{"group", SixTermReport::labels()[k]}, {"dim", r.dims[k]},
                         {"outgoing_rank", r.map_rank[k]}, {"pass", r.node_pass[k]}});
    for (const auto& c : r.checks) checks.push_back({{"check", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"ok", c.ok()}});
    return {{"pass", r.pass()}, {"connecting_defined", r.connecting_defined}, {"nodes", nodes}, {"checks", checks}};
}

Json to_json(const ExcisionReport& r) {
    return {{"verdict", to_string(r.verdict)},
            {"direct", to_json(r.direct)},
            {"stabilized", r.stabilized},
            {"six_term", to_json(r.six_term)}};
}

Json to_json(const CochainIdentityReport& r) {
    return {{"level", r.level},
            {"pairs", r.pairs},
            {"coboundary_failures", r.coboundary_failures},
            {"cocycle_failures", r.cocycle_failures},
            {"literal_sign_failures", r.literal_sign_failures}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cyclica
