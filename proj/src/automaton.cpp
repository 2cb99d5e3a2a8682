#include "qtpm/automaton.hpp"

#include <algorithm>
#include <sstream>

namespace qtpm {

std::vector<std::size_t> TSA::initial_locations() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < locations.size(); ++i)
        if (locations[i].initial) out.push_back(i);
    return out;
}

std::optional<std::size_t> TSA::find_location(std::string_view name) const {
    for (std::size_t i = 0; i < locations.size(); ++i)
        if (locations[i].name == name) return i;
    return std::nullopt;
}

void TSA::validate() const {
    if (locations.empty()) throw std::invalid_argument("no locations");
    for (const auto& l : locations)
        for (const auto& a : l.label)
            if (a.var >= variables.size()) throw std::invalid_argument("label of " + l.name + " uses an unknown variable");
    for (const auto& t : transitions) {
        if (t.source >= locations.size() || t.target >= locations.size())
            throw std::invalid_argument("transition refers to an unknown location");
        for (const auto& g : t.guard) {
            if (g.clock >= clocks.size()) throw std::invalid_argument("guard uses an unknown clock");
            if (g.constant < 0) throw std::invalid_argument("guard constant must be a natural number");
        }
        for (auto r : t.resets)
            if (r >= clocks.size()) throw std::invalid_argument("reset of an unknown clock");
    }
}

namespace {

std::string fresh_name(std::string base, const std::vector<std::string>& taken) {
    while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "'";
    return base;
}

const char* cmp_text(Cmp op) {
    switch (op) {
    case Cmp::Lt: return "<";
    case Cmp::Le: return "<=";
    case Cmp::Gt: return ">";
    case Cmp::Ge: return ">=";
    }
    return "?";
}

}  // namespace

MatchingAutomaton matching_automaton(const TSA& tsa) {
    MatchingAutomaton m{tsa, 0, 0};
    TSA& out = m.tsa;

    std::vector<std::string> location_names;
    for (const auto& l : tsa.locations) location_names.push_back(l.name);
    const std::string init_name = fresh_name("l_init", location_names);
    const std::string start_name = fresh_name("T'", tsa.clocks);

    m.start_clock = out.clocks.size();
    out.clocks.push_back(start_name);

    std::vector<std::size_t> all_clocks(out.clocks.size());
    for (std::size_t c = 0; c < all_clocks.size(); ++c) all_clocks[c] = c;

    m.init_location = out.locations.size();
    for (auto l0 : tsa.initial_locations()) out.transitions.push_back({m.init_location, {}, all_clocks, l0});
    for (auto& l : out.locations) l.initial = false;
    out.locations.push_back({init_name, {}, true, false});
    return m;
}

std::string to_dsl(const TSA& tsa) {
    std::ostringstream os;
    auto list = [&](const char* kw, const std::vector<std::string>& names) {
        if (names.empty()) return;
        os << kw << ' ';
        for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
        os << ";\n";
    };
    list("var", tsa.variables);
    list("clock", tsa.clocks);
    for (const auto& l : tsa.locations) {
        os << "location " << l.name << (l.initial ? " init" : "") << (l.accepting ? " accept" : "") << " [";
        if (l.label.empty()) os << "true";
        for (std::size_t i = 0; i < l.label.size(); ++i)
            os << (i ? " && " : "") << tsa.variables[l.label[i].var] << ' ' << cmp_text(l.label[i].op) << ' '
               << format_real(l.label[i].constant);
        os << "];\n";
    }
    for (const auto& t : tsa.transitions) {
        os << "edge " << tsa.locations[t.source].name << " -> " << tsa.locations[t.target].name;
        if (!t.guard.empty()) {
            os << " when ";
            for (std::size_t i = 0; i < t.guard.size(); ++i)
                os << (i ? " && " : "") << tsa.clocks[t.guard[i].clock] << ' ' << cmp_text(t.guard[i].op) << ' '
                   << t.guard[i].constant;
        }
        if (!t.resets.empty()) {
            os << " reset {";
            for (std::size_t i = 0; i < t.resets.size(); ++i) os << (i ? ", " : "") << tsa.clocks[t.resets[i]];
            os << '}';
        }
        os << ";\n";
    }
    return os.str();
}

std::optional<CostKind> cost_from_name(std::string_view name) {
    if (name == "b") return CostKind::Boolean;
    if (name == "r") return CostKind::Robustness;
    if (name == "t") return CostKind::Tropical;
    return std::nullopt;
}

std::string_view cost_name(CostKind kind) {
    switch (kind) {
    case CostKind::Boolean: return "b";
    case CostKind::Robustness: return "r";
    case CostKind::Tropical: return "t";
    }
    return "?";
}

Semiring natural_semiring(CostKind kind) {
    switch (kind) {
    case CostKind::Boolean: return Semiring::boolean();
    case CostKind::Robustness: return Semiring::supinf();
    case CostKind::Tropical: return Semiring::tropical();
    }
    return Semiring::boolean();
}

TSWA::TSWA(TSA tsa_in, CostKind cost_in, Semiring semiring_in)
    : tsa(std::move(tsa_in)), cost(cost_in), semiring(semiring_in) {
    if (natural_semiring(cost) != semiring)
        throw std::invalid_argument("cost function '" + std::string(cost_name(cost)) + "' is not defined over the " +
                                    std::string(semiring.name()) + " semiring");
    tsa.validate();
}

}  // namespace qtpm
