// SPDX-License-Identifier: Apache-2.0
#include "pt3/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pt3/errors.hpp"

namespace pt3 {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
}

double number_field(const json& object, const char* key, const std::string& where) {
    if (!object.is_object() || !object.contains(key)) {
        throw DomainError(where + ": missing field '" + key + "'");
    }
    const auto& value = object.at(key);
    if (!value.is_number()) {
        throw DomainError(where + ": field '" + key + "' must be a number");
    }
    return value.get<double>();
}

const json& array_field(const json& object, const char* key, const std::string& where) {
    if (!object.is_object() || !object.contains(key) || !object.at(key).is_array()) {
        throw DomainError(where + ": missing array '" + key + "'");
    }
    return object.at(key);
}

}  // namespace

SumSpec parse_sum_spec(const std::string& text, const SumOptions& options) {
    const json doc = parse_document(text);
    std::vector<Pearson3Params> terms;
    int index = 0;
    for (const auto& term : array_field(doc, "terms", "sum spec")) {
        const std::string where = "terms[" + std::to_string(index++) + "]";
        Pearson3Params p;
        p.shape = number_field(term, "a", where);
        p.rate = number_field(term, "b", where);
        p.shift = term.contains("m") ? number_field(term, "m", where) : 0.0;
        terms.push_back(p);
    }
    return SumSpec(std::move(terms), options);
}

SumSpec load_sum_spec(const std::string& path, const SumOptions& options) {
    return parse_sum_spec(read_file(path), options);
}

std::string sum_spec_to_json(const SumSpec& spec) {
    json terms = json::array();
    for (const auto& t : spec.terms()) {
        terms.push_back({{"a", t.shape}, {"b", t.rate}, {"m", t.shift}});
    }
    return json{{"terms", terms}}.dump();
}

MisoScenario parse_scenario(const std::string& text) {
    const json doc = parse_document(text);
    MisoScenario scenario;
    if (!doc.is_object() || !doc.contains("model")) {
        throw DomainError("scenario: missing object 'model'");
    }
    const auto& model = doc.at("model");
    scenario.model.A = number_field(model, "A", "model");
    scenario.model.B = number_field(model, "B", "model");
    scenario.model.Ps = number_field(model, "Ps", "model");
    int index = 0;
    for (const auto& branch : array_field(doc, "branches", "scenario")) {
        const std::string where = "branches[" + std::to_string(index++) + "]";
        LinkBudget link;
        link.tx_aperture = number_field(branch, "at", where);
        link.rx_aperture = number_field(branch, "ar", where);
        link.carrier_hz = number_field(branch, "fc", where);
        link.distance = number_field(branch, "d", where);
        link.power = number_field(branch, "p", where);
        if (!branch.contains("fading")) {
            throw DomainError(where + ": missing object 'fading'");
        }
        link.fading.shape = number_field(branch.at("fading"), "a", where + ".fading");
        link.fading.rate = number_field(branch.at("fading"), "b", where + ".fading");
        link.fading.shift = 0.0;
        scenario.branches.push_back(link);
    }
    scenario.validate();
    return scenario;
}

MisoScenario load_scenario(const std::string& path) { return parse_scenario(read_file(path)); }

std::string scenario_to_json(const MisoScenario& scenario) {
    // ordered keys give one canonical text per scenario
    nlohmann::ordered_json doc;
    doc["model"] = {{"A", scenario.model.A}, {"B", scenario.model.B}, {"Ps", scenario.model.Ps}};
    doc["branches"] = nlohmann::ordered_json::array();
    for (const auto& link : scenario.branches) {
        nlohmann::ordered_json branch;
        branch["at"] = link.tx_aperture;
        branch["ar"] = link.rx_aperture;
        branch["fc"] = link.carrier_hz;
        branch["d"] = link.distance;
        branch["p"] = link.power;
        branch["fading"] = {{"a", link.fading.shape}, {"b", link.fading.rate}};
        doc["branches"].push_back(branch);
    }
    return doc.dump();
}

std::uint64_t scenario_hash(const MisoScenario& scenario) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const unsigned char byte : scenario_to_json(scenario)) {
        hash ^= byte;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string hash_hex(std::uint64_t hash) {
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

}  // namespace pt3
