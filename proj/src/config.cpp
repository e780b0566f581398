#include "lcr/config.hpp"

#include <json.hpp>

#include "json_rules.hpp"
#include "lcr/gimel.hpp"

namespace lcr {

namespace detail {

RuleSet rules_from_json(const nlohmann::json& j) {
    RuleSet rules;
    if (j.contains("gimel")) {
        std::size_t indices = j.value("indices", std::size_t{0});
        rules = gimel_rules(gimel_preset(j.at("gimel").get<std::size_t>(), indices));
    }
    if (!j.contains("rules")) return rules;
    for (const auto& r : j.at("rules")) {
        std::string kind = r.at("kind").get<std::string>();
        Term instr = parse_term(r.at("instr").get<std::string>());
        if (instr.kind() != TermKind::Instr) throw ConfigError("rule instr must be an instruction: " + print(instr));
        std::string name = r.value("name", kind);
        if (kind == "voting")
            rules.add(name, voting_schema(instr, r.at("arity").get<std::size_t>(), r.value("excluded", std::size_t{1})));
        else if (kind == "must")
            rules.add(name, must_schema(instr));
        else if (kind == "absorb")
            rules.add(name, absorb_schema(instr));
        else
            throw ConfigError("unknown rule kind '" + kind + "'");
    }
    return rules;
}

}  // namespace detail

namespace {

nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(e.what());
    }
}

}  // namespace

RuleSet load_rules(const std::string& json_text) {
    try {
        return detail::rules_from_json(parse_json(json_text));
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(e.what());
    }
}

WorldSpec load_world(const std::string& json_text) {
    nlohmann::json j = parse_json(json_text);
    try {
        WorldSpec out;
        out.rules = detail::rules_from_json(j);
        std::vector<Process> ps;
        if (j.contains("processes")) {
            for (const auto& p : j.at("processes")) ps.push_back(parse_process(p.get<std::string>()));
            out.world = FiniteWorld(ps);
            std::string why;
            if (!out.world.validate(out.rules, &why)) throw ConfigError("world is not closed: " + why);
        } else {
            for (const auto& p : j.at("seeds")) ps.push_back(parse_process(p.get<std::string>()));
            out.world = FiniteWorld::close(ps, out.rules, j.value("cap", std::size_t{16}));
            out.world.validate(out.rules);
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(e.what());
    }
}

}  // namespace lcr
