#include "ribbons/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace ribbons {

Json to_json(const PartitionMultiset& m) {
    Json out = Json::object();
    for (const auto& [p, k] : m.counts())
        out[p.str()] = k;
    return out;
}

Json to_json(const QsymExpr& e) {
    Json out = Json::object();
    out["basis"] = basis_name(e.basis());
    out["n"] = e.degree();
    Json terms = Json::object();
    for (const auto& [beta, c] : e.terms())
        terms[beta.str()] = rat_str(c);
    out["terms"] = std::move(terms);
    return out;
}

QsymExpr qsym_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("n") || !j.contains("terms"))
        throw std::invalid_argument("qsym json: need basis, n and terms");
    if (!j["basis"].is_string() || !j["n"].is_number_integer() || !j["terms"].is_object())
        throw std::invalid_argument("qsym json: malformed fields");
    Basis basis = parse_basis(j["basis"].get<std::string>());
    int n = j["n"].get<int>();
    QsymExpr out(basis, n);
    for (const auto& [key, val] : j["terms"].items()) {
        if (!val.is_string())
            throw std::invalid_argument("qsym json: coefficients must be strings");
        Composition beta = Composition::parse(key);
        if (beta.size() != n)
            throw std::invalid_argument("qsym json: term '" + key +
                                        "' does not have degree n");
        out.add_term(beta, parse_rat(val.get<std::string>()));
    }
    return out;
}

Json to_json(const SymHExpr& e) {
    Json out = Json::object();
    out["basis"] = "h";
    Json terms = Json::object();
    for (const auto& [l, c] : e.terms())
        terms[l.str()] = rat_str(c);
    out["terms"] = std::move(terms);
    return out;
}

Json schur_map_to_json(const std::map<Partition, Rat, PartitionOrder>& m) {
    Json out = Json::object();
    for (const auto& [l, c] : m)
        out[l.str()] = rat_str(c);
    return out;
}

Json to_json(const Multicollection& mc) {
    Json out = Json::object();
    out["n"] = mc.n;
    Json weights = Json::object();
    std::vector<std::vector<int>> keys;
    for (const auto& [subset, w] : mc.weights)
        keys.push_back(subset);
    std::sort(keys.begin(), keys.end());
    for (const auto& subset : keys) {
        std::string key;
        for (std::size_t i = 0; i < subset.size(); ++i) {
            if (i)
                key += ',';
            key += std::to_string(subset[i]);
        }
        weights[key] = rat_str(mc.weights.at(subset));
    }
    out["weights"] = std::move(weights);
    return out;
}

Multicollection multicollection_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("weights"))
        throw std::invalid_argument("multicollection json: need n and weights");
    if (!j["n"].is_number_integer() || !j["weights"].is_object())
        throw std::invalid_argument("multicollection json: malformed fields");
    Multicollection mc;
    mc.n = j["n"].get<int>();
    if (mc.n < 0)
        throw std::invalid_argument("multicollection json: negative n");
    for (const auto& [key, val] : j["weights"].items()) {
        if (!val.is_string())
            throw std::invalid_argument("multicollection json: weights must be strings");
        std::vector<int> subset;
        if (!key.empty()) {
            std::size_t pos = 0;
            while (pos < key.size()) {
                std::size_t comma = key.find(',', pos);
                std::string tok = key.substr(pos, comma == std::string::npos
                                                      ? std::string::npos
                                                      : comma - pos);
                if (tok.empty() ||
                    !std::all_of(tok.begin(), tok.end(),
                                 [](char c) { return c >= '0' && c <= '9'; }))
                    throw std::invalid_argument("multicollection json: bad subset '" + key +
                                                "'");
                subset.push_back(std::stoi(tok));
                if (comma == std::string::npos)
                    break;
                pos = comma + 1;
            }
        }
        std::sort(subset.begin(), subset.end());
        for (std::size_t i = 1; i < subset.size(); ++i)
            if (subset[i] == subset[i - 1])
                throw std::invalid_argument("multicollection json: repeated element in '" +
                                            key + "'");
        for (int x : subset)
            if (x < 1 || x > mc.n)
                throw std::invalid_argument("multicollection json: element outside [n] in '" +
                                            key + "'");
        Rat w = parse_rat(val.get<std::string>());
        auto [it, inserted] = mc.weights.emplace(std::move(subset), w);
        if (!inserted)
            throw std::invalid_argument("multicollection json: duplicate subset '" + key +
                                        "'");
    }
    return mc;
}

Json to_json(const ConeRay& ray) {
    Json out = Json::object();
    out["schur"] = schur_map_to_json(ray.schur);
    Json fundamental = Json::object();
    for (const auto& [beta, c] : ray.fundamental.terms())
        fundamental[beta.str()] = rat_str(c);
    out["fundamental"] = std::move(fundamental);
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace ribbons
