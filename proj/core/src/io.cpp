#include "monoidk/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

namespace monoidk {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error(what); }

int label_index(const std::map<std::string, int>& index, const std::string& label,
                const std::string& context) {
    auto it = index.find(label);
    if (it == index.end()) fail(context + ": unknown element label '" + label + "'");
    return it->second;
}

}  // namespace

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

PointedMonoid monoid_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("table") ||
        !j.contains("zero") || !j.contains("one"))
        fail("monoid: need elements, table, zero, one");
    PointedMonoid m;
    std::map<std::string, int> index;
    for (const auto& e : j.at("elements")) {
        std::string label = e.get<std::string>();
        if (index.count(label)) fail("monoid: duplicate label '" + label + "'");
        index[label] = static_cast<int>(m.labels.size());
        m.labels.push_back(label);
    }
    int n = m.size();
    m.zero = label_index(index, j.at("zero").get<std::string>(), "monoid zero");
    m.one = label_index(index, j.at("one").get<std::string>(), "monoid one");
    const Json& table = j.at("table");
    if (static_cast<int>(table.size()) != n) fail("monoid: table must have |A| rows");
    m.table.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n) fail("monoid: table row has wrong length");
        for (int k = 0; k < n; ++k)
            m.table[static_cast<size_t>(i) * n + k] =
                label_index(index, table[i][k].get<std::string>(), "monoid table");
    }
    auto issues = validate_monoid(m);
    if (!issues.empty()) fail("monoid axiom '" + issues[0].kind + "': " + issues[0].detail);
    return m;
}

Json monoid_to_json(const PointedMonoid& m) {
    Json j;
    j["elements"] = m.labels;
    j["zero"] = m.labels[m.zero];
    j["one"] = m.labels[m.one];
    Json table = Json::array();
    for (int i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.size(); ++k) row.push_back(m.labels[m.mul(i, k)]);
        table.push_back(row);
    }
    j["table"] = table;
    return j;
}

RowMonomicMatrix matrix_from_json(const Json& j, const PointedMonoid& a) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        fail("matrix: need rows, cols, entries");
    std::map<std::string, int> index;
    for (int i = 0; i < a.size(); ++i) index[a.labels[i]] = i;
    RowMonomicMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    if (m.rows < 0 || m.cols < 0) fail("matrix: negative shape");
    const Json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != m.rows) fail("matrix: one entry per row required");
    for (int i = 0; i < m.rows; ++i) {
        if (entries[i].is_null()) continue;
        int col = entries[i].at(0).get<int>();
        if (col < 0 || col >= m.cols) fail("matrix: column out of range in row " +
                                           std::to_string(i));
        int elem = label_index(index, entries[i].at(1).get<std::string>(), "matrix entry");
        if (elem == a.zero) fail("matrix: stored entries must be nonzero");
        m.entries[i] = {col, elem};
    }
    return m;
}

Json matrix_to_json(const RowMonomicMatrix& m, const PointedMonoid& a) {
    Json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    Json entries = Json::array();
    for (const auto& e : m.entries) {
        if (!e)
            entries.push_back(nullptr);
        else
            entries.push_back(Json::array({e->first, a.labels[e->second]}));
    }
    j["entries"] = entries;
    return j;
}

FiniteASet aset_from_json(const Json& j, const std::string& base_dir) {
    if (!j.is_object() || !j.contains("monoid") || !j.contains("carrier") ||
        !j.contains("action"))
        fail("aset: need monoid, carrier, action");
    PointedMonoid a;
    if (j.at("monoid").is_string()) {
        std::filesystem::path p(j.at("monoid").get<std::string>());
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        a = monoid_from_json(load_json(p.string()));
    } else {
        a = monoid_from_json(j.at("monoid"));
    }
    FiniteASet m;
    m.monoid = std::make_shared<const PointedMonoid>(std::move(a));
    std::map<std::string, int> carrier_index;
    for (const auto& e : j.at("carrier")) {
        std::string label = e.get<std::string>();
        if (carrier_index.count(label)) fail("aset: duplicate carrier label '" + label + "'");
        carrier_index[label] = static_cast<int>(m.carrier.size());
        m.carrier.push_back(label);
    }
    if (m.carrier.empty() || m.carrier[0] != "*") fail("aset: carrier[0] must be '*'");
    int n = m.size();
    m.action.assign(static_cast<size_t>(m.monoid->size()) * n, -1);
    for (int u = 0; u < m.monoid->size(); ++u) {
        const std::string& ulabel = m.monoid->labels[u];
        if (!j.at("action").contains(ulabel)) {
            // zero and one rows may be omitted: they are forced
            for (int x = 0; x < n; ++x)
                m.action[static_cast<size_t>(u) * n + x] =
                    u == m.monoid->zero ? 0 : (u == m.monoid->one ? x : -1);
            if (u != m.monoid->zero && u != m.monoid->one)
                fail("aset: missing action row for '" + ulabel + "'");
            continue;
        }
        const Json& row = j.at("action").at(ulabel);
        if (static_cast<int>(row.size()) != n) fail("aset: action row for '" + ulabel +
                                                    "' has wrong length");
        for (int x = 0; x < n; ++x)
            m.action[static_cast<size_t>(u) * n + x] =
                label_index(carrier_index, row[x].get<std::string>(), "aset action");
    }
    auto issues = validate_aset(m);
    if (!issues.empty()) fail("aset axiom '" + issues[0].kind + "': " + issues[0].detail);
    return m;
}

Json aset_to_json(const FiniteASet& m) {
    Json j;
    j["monoid"] = monoid_to_json(*m.monoid);
    j["carrier"] = m.carrier;
    Json action = Json::object();
    for (int u = 0; u < m.monoid->size(); ++u) {
        Json row = Json::array();
        for (int x = 0; x < m.size(); ++x) row.push_back(m.carrier[m.act(u, x)]);
        action[m.monoid->labels[u]] = row;
    }
    j["action"] = action;
    return j;
}

Json group_to_json(const FgAbelianGroup& g) {
    Json j;
    j["free"] = g.free_rank;
    Json torsion = Json::array();
    for (const Int& d : g.torsion) torsion.push_back(d.convert_to<long long>());
    j["torsion"] = torsion;
    return j;
}

}  // namespace monoidk
