#include "uqgh/serialize.hpp"

#include "uqgh/parse.hpp"

namespace uqgh {

using nlohmann::json;

namespace {

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, size_t dim) {
    if (!j.is_array() || j.size() != dim) throw std::invalid_argument("bad matrix in module JSON");
    Matrix m(dim, dim);
    for (size_t i = 0; i < dim; ++i) {
        if (!j[i].is_array() || j[i].size() != dim)
            throw std::invalid_argument("bad matrix row in module JSON");
        for (size_t k = 0; k < dim; ++k) m.at(i, k) = parse_scalar(j[i][k].get<std::string>());
    }
    return m;
}

}  // namespace

json module_to_json(const WeightModule& m) {
    json j;
    j["schema"] = 1;
    j["dim"] = m.dim();
    j["basis"] = m.basis_labels();
    json action;
    for (Gen g : kAllGens) action[gen_name(g)] = matrix_to_json(m.action(g));
    j["action"] = std::move(action);
    if (m.weights()) {
        json ws = json::array();
        for (const auto& w : *m.weights())
            ws.push_back({w.lambda.to_string(), w.alpha.to_string(), w.beta.to_string()});
        j["weights"] = std::move(ws);
    }
    return j;
}

WeightModule module_from_json(const json& j) {
    if (!j.contains("schema") || j["schema"].get<int>() != 1)
        throw std::invalid_argument("unsupported module schema");
    const size_t dim = j.at("dim").get<size_t>();
    std::vector<std::string> labels = j.at("basis").get<std::vector<std::string>>();
    if (labels.size() != dim) throw std::invalid_argument("basis size does not match dim");
    std::array<Matrix, 8> actions;
    for (Gen g : kAllGens)
        actions[static_cast<size_t>(g)] = matrix_from_json(j.at("action").at(gen_name(g)), dim);
    std::optional<std::vector<WeightTriple>> weights;
    if (j.contains("weights")) {
        weights.emplace();
        for (const auto& w : j["weights"]) {
            if (!w.is_array() || w.size() != 3)
                throw std::invalid_argument("bad weight triple in module JSON");
            weights->push_back({parse_scalar(w[0].get<std::string>()),
                                parse_scalar(w[1].get<std::string>()),
                                parse_scalar(w[2].get<std::string>())});
        }
    }
    return WeightModule(std::move(labels), std::move(actions), std::move(weights));
}

json report_to_json(const HopfReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json item;
        item["axiom"] = c.axiom;
        item["input"] = c.input;
        item["pass"] = c.pass;
        if (!c.pass) item["witness"] = c.witness;
        checks.push_back(std::move(item));
    }
    return {{"schema", 1}, {"pass", r.all_pass()}, {"checks", std::move(checks)}};
}

json report_to_json(const EqReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json item;
        item["name"] = c.name;
        item["pass"] = c.pass;
        if (!c.pass) item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    return {{"schema", 1}, {"pass", r.all_pass()}, {"checks", std::move(checks)}};
}

}  // namespace uqgh
