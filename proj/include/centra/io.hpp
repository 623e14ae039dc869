#pragma once

// JSON file formats and report serialization. Scalars travel as text in
// the `-1/2*z^3 + 2` syntax; the field is declared once per file.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "centra/centre.hpp"
#include "centra/cohomology.hpp"
#include "centra/error.hpp"
#include "centra/field.hpp"
#include "centra/graded.hpp"
#include "centra/group.hpp"
#include "centra/report.hpp"
#include "centra/repworld.hpp"

namespace centra {

using json = nlohmann::json;

class io_error : public error {
public:
    explicit io_error(const std::string& what) : error(what) {}
};

inline json field_to_json(FieldSpec f) {
    if (f.kind == FieldSpec::Kind::rationals) return json("rationals");
    return json{{"cyclotomic", f.order}};
}

inline FieldSpec field_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "rationals") return FieldSpec::rationals();
    if (j.is_object() && j.contains("cyclotomic")) return FieldSpec::cyclotomic(j["cyclotomic"].get<unsigned>());
    throw io_error("bad field spec: " + j.dump());
}

/// `cyclotomic:m` or `rationals`, for --field flags.
inline FieldSpec field_from_string(const std::string& s) {
    if (s == "rationals") return FieldSpec::rationals();
    const std::string prefix = "cyclotomic:";
    if (s.rfind(prefix, 0) == 0) return FieldSpec::cyclotomic(std::stoul(s.substr(prefix.size())));
    throw io_error("bad field spec '" + s + "' (want rationals or cyclotomic:m)");
}

inline json group_to_json(const Group& g) {
    json t = json::array();
    for (unsigned i = 0; i < g.n; ++i) {
        json row = json::array();
        for (unsigned j = 0; j < g.n; ++j) row.push_back(g.mul(i, j));
        t.push_back(row);
    }
    return json{{"order", g.n}, {"identity", g.identity}, {"names", g.names}, {"table", t}};
}

inline Group group_from_json(const json& j) {
    if (j.is_string()) return catalog_group(j.get<std::string>());
    if (!j.is_object()) throw io_error("group must be a catalog name or an object");
    for (const char* key : {"order", "identity", "table"})
        if (!j.contains(key)) throw io_error(std::string("group: missing field '") + key + "'");
    unsigned n = j["order"].get<unsigned>();
    std::vector<unsigned> table;
    for (const auto& row : j["table"]) {
        if (row.size() != n) throw io_error("group: table row length != order");
        for (const auto& v : row) table.push_back(v.get<unsigned>());
    }
    if (table.size() != static_cast<size_t>(n) * n) throw io_error("group: table not order x order");
    std::vector<std::string> names;
    if (j.contains("names")) names = j["names"].get<std::vector<std::string>>();
    return validate_group(std::move(table), j["identity"].get<unsigned>(), std::move(names));
}

inline Subgroup subgroup_from_json(const Group& g, const json& j) {
    if (j.is_string()) {
        std::string spec = j.get<std::string>();
        if (spec == "all") return full_subgroup(g);
        // comma-separated element names
        std::vector<unsigned> elems;
        std::stringstream ss(spec);
        std::string name;
        while (std::getline(ss, name, ',')) elems.push_back(g.index_of(name));
        return make_subgroup(g, std::move(elems));
    }
    std::vector<unsigned> elems;
    for (const auto& v : j)
        elems.push_back(v.is_string() ? g.index_of(v.get<std::string>()) : v.get<unsigned>());
    return make_subgroup(g, std::move(elems));
}

inline json cocycle_to_json(const Cocycle2& c) {
    json t = json::array();
    for (unsigned i = 0; i < c.group.n; ++i) {
        json row = json::array();
        for (unsigned j = 0; j < c.group.n; ++j) row.push_back(c.at(i, j));
        t.push_back(row);
    }
    return json{{"group", group_to_json(c.group)}, {"modulus", c.modulus}, {"table", t}};
}

inline Cocycle2 cocycle_from_json(const json& j) {
    for (const char* key : {"group", "modulus", "table"})
        if (!j.contains(key)) throw io_error(std::string("cocycle: missing field '") + key + "'");
    Group g = group_from_json(j["group"]);
    unsigned m = j["modulus"].get<unsigned>();
    std::vector<int> table;
    for (const auto& row : j["table"])
        for (const auto& v : row) table.push_back(v.get<int>());
    if (table.size() != static_cast<size_t>(g.n) * g.n) throw io_error("cocycle: table not |H| x |H|");
    return check_cocycle(g, m, std::move(table));
}

inline json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline Mat matrix_from_json(FieldSpec field, const json& j) {
    size_t rows = j.size();
    size_t cols = rows == 0 ? 0 : j[0].size();
    Mat m(field, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw io_error("matrix: ragged rows");
        for (size_t jj = 0; jj < cols; ++jj)
            m.at(i, jj) = parse_scalar(field, j[i][jj].get<std::string>());
    }
    return m;
}

inline json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const Scalar& s : v) out.push_back(scalar_to_string(s));
    return out;
}

inline Vec vec_from_json(FieldSpec field, const json& j) {
    Vec v;
    for (const auto& s : j) v.push_back(parse_scalar(field, s.get<std::string>()));
    return v;
}

inline json graded_space_to_json(const GradedSpace& sp) {
    json basis = json::array();
    for (size_t i = 0; i < sp.dim(); ++i)
        basis.push_back(json{{"name", sp.labels[i]}, {"degree", sp.group.names[sp.degree[i]]}});
    return json{{"group", group_to_json(sp.group)}, {"basis", basis}};
}

inline GradedSpace graded_space_from_json(const json& j) {
    Group g = group_from_json(j.at("group"));
    std::vector<std::string> labels;
    std::vector<unsigned> degree;
    for (const auto& b : j.at("basis")) {
        labels.push_back(b.at("name").get<std::string>());
        const auto& d = b.at("degree");
        degree.push_back(d.is_string() ? g.index_of(d.get<std::string>()) : d.get<unsigned>());
    }
    return make_graded_space(g, std::move(labels), std::move(degree));
}

inline json graded_algebra_to_json(const GradedAlgebra& a) {
    json structure = json::array();
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j)
            for (const auto& [k, c] : a.mul.at(i, j))
                structure.push_back(json::array({i, j, k, scalar_to_string(c)}));
    json out = graded_space_to_json(a.space);
    out["field"] = field_to_json(a.field);
    out["unit"] = vec_to_json(a.unit);
    out["structure"] = structure;
    return out;
}

inline GradedAlgebra graded_algebra_from_json(const json& j) {
    GradedAlgebra a;
    a.space = graded_space_from_json(j);
    a.field = field_from_json(j.at("field"));
    a.unit = vec_from_json(a.field, j.at("unit"));
    if (a.unit.size() != a.dim()) throw io_error("algebra: unit length != dim");
    a.mul = MulTable::zero(a.dim());
    for (const auto& e : j.at("structure")) {
        if (e.size() != 4) throw io_error("algebra: structure entries are [i,j,k,scalar]");
        size_t i = e[0].get<size_t>(), jj = e[1].get<size_t>(), k = e[2].get<size_t>();
        if (i >= a.dim() || jj >= a.dim() || k >= a.dim())
            throw io_error("algebra: structure index out of range");
        a.mul.set(i, jj, k, parse_scalar(a.field, e[3].get<std::string>()));
    }
    return a;
}

inline json centre_object_to_json(const CentreObject& x) {
    json out = graded_space_to_json(x.space);
    out["field"] = field_to_json(x.field);
    json action = json::object();
    for (unsigned g = 0; g < x.group().n; ++g)
        action[x.group().names[g]] = matrix_to_json(x.rho(g));
    out["action"] = action;
    return out;
}

inline CentreObject centre_object_from_json(const json& j) {
    CentreObject x;
    x.space = graded_space_from_json(j);
    x.field = field_from_json(j.at("field"));
    const json& action = j.at("action");
    for (unsigned g = 0; g < x.group().n; ++g) {
        const std::string& name = x.group().names[g];
        if (!action.contains(name)) throw io_error("centre object: missing action for " + name);
        x.action.push_back(matrix_from_json(x.field, action[name]));
    }
    return x;
}

inline json centre_algebra_to_json(const CentreAlgebra& c) {
    json out = centre_object_to_json(c.obj);
    json structure = json::array();
    for (size_t i = 0; i < c.dim(); ++i)
        for (size_t j = 0; j < c.dim(); ++j)
            for (const auto& [k, s] : c.mul.at(i, j))
                structure.push_back(json::array({i, j, k, scalar_to_string(s)}));
    out["unit"] = vec_to_json(c.unit);
    out["structure"] = structure;
    return out;
}

inline CentreAlgebra centre_algebra_from_json(const json& j) {
    CentreAlgebra c;
    c.obj = centre_object_from_json(j);
    c.unit = vec_from_json(c.obj.field, j.at("unit"));
    c.mul = MulTable::zero(c.dim());
    for (const auto& e : j.at("structure"))
        c.mul.set(e[0].get<size_t>(), e[1].get<size_t>(), e[2].get<size_t>(),
                  parse_scalar(c.obj.field, e[3].get<std::string>()));
    return c;
}

inline json g_algebra_to_json(const GAlgebra& a) {
    json basis = json::array();
    for (const std::string& l : a.labels) basis.push_back(json{{"name", l}});
    json structure = json::array();
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j)
            for (const auto& [k, c] : a.mul.at(i, j))
                structure.push_back(json::array({i, j, k, scalar_to_string(c)}));
    json action = json::object();
    for (unsigned g = 0; g < a.group.n; ++g) action[a.group.names[g]] = matrix_to_json(a.rho(g));
    return json{{"group", group_to_json(a.group)}, {"field", field_to_json(a.field)},
                {"basis", basis},                  {"unit", vec_to_json(a.unit)},
                {"structure", structure},          {"action", action}};
}

inline GAlgebra g_algebra_from_json(const json& j) {
    GAlgebra a;
    a.group = group_from_json(j.at("group"));
    a.field = field_from_json(j.at("field"));
    for (const auto& b : j.at("basis")) a.labels.push_back(b.at("name").get<std::string>());
    a.unit = vec_from_json(a.field, j.at("unit"));
    a.mul = MulTable::zero(a.dim());
    for (const auto& e : j.at("structure"))
        a.mul.set(e[0].get<size_t>(), e[1].get<size_t>(), e[2].get<size_t>(),
                  parse_scalar(a.field, e[3].get<std::string>()));
    const json& action = j.at("action");
    for (unsigned g = 0; g < a.group.n; ++g) {
        const std::string& name = a.group.names[g];
        if (!action.contains(name)) throw io_error("g-algebra: missing action for " + name);
        a.action.push_back(matrix_from_json(a.field, action[name]));
    }
    return a;
}

inline json projective_rep_to_json(const ProjectiveRep& r) {
    json mats = json::array();
    for (const Mat& m : r.mats) mats.push_back(matrix_to_json(m));
    return json{{"group", group_to_json(r.group)},
                {"field", field_to_json(r.field)},
                {"cocycle", cocycle_to_json(r.gamma)},
                {"matrices", mats}};
}

inline ProjectiveRep projective_rep_from_json(const json& j) {
    ProjectiveRep r;
    r.group = group_from_json(j.at("group"));
    r.field = field_from_json(j.at("field"));
    r.gamma = cocycle_from_json(j.at("cocycle"));
    for (const auto& m : j.at("matrices")) r.mats.push_back(matrix_from_json(r.field, m));
    return r;
}

inline json report_to_json(const Report& r) {
    json checks = json::array();
    for (const auto& it : r.items) {
        json c{{"check", it.check}, {"status", it.pass ? "pass" : "fail"}};
        if (!it.detail.empty()) c["detail"] = it.detail;
        checks.push_back(c);
    }
    return json{{"name", r.name}, {"status", r.pass() ? "pass" : "fail"}, {"checks", checks}};
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw io_error("parse error in " + path + ": " + e.what());
    }
    return j;
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace centra
