#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "pcdfa/automata.hpp"
#include "pcdfa/graph.hpp"
#include "pcdfa/reductions.hpp"
#include "pcdfa/witnesses.hpp"

namespace pcdfa {

using Automaton = std::variant<Dfa, PartialDfa, MooreMachine, MealyMachine>;

// Automaton JSON document:
//   {"type": "dfa"|"partial-dfa"|"moore"|"mealy", "states": n,
//    "alphabet": [names], "initial": q, "transitions": [[from, symbol, to], ...],
//    "accepting": [...]            (dfa, partial-dfa)
//    "output": ["+"|"-", ...]}     (moore: per state; mealy: per state*|alphabet|+symbol)
nlohmann::json to_json(const Dfa& dfa);
nlohmann::json to_json(const PartialDfa& dfa);
nlohmann::json to_json(const MooreMachine& m);
nlohmann::json to_json(const MealyMachine& m);
nlohmann::json to_json(const Automaton& a);
Automaton automaton_from_json(const nlohmann::json& doc);

// Loads a "dfa" document, or a "partial-dfa" completed with self-loops.
Dfa dfa_from_json(const nlohmann::json& doc);

// Abbadingo: "<count> <alphabet_size>" then "<label> <length> <symbols...>".
std::string write_abbadingo(const DfaSample& sample);
DfaSample read_abbadingo(std::string_view text);

// Runs as line pairs: input symbols, then outputs over {+,-}. Inputs are
// written as bare digits when the alphabet has at most ten symbols and as
// space-separated indices otherwise.
std::string write_runs(const MachineSample& ms);
MachineSample read_runs(std::string_view text);

// Byte-stable Graphviz rendering; accepting states are double circles.
std::string to_dot(const Dfa& dfa);
std::string to_dot(const PartialDfa& dfa);

struct ReductionMetadata {
    std::string kind;  // "zhang" | "binary" | "single"
    Graph graph{1};
    ReductionParams params;
    Encoding encoding;
};

nlohmann::json to_json(const ReductionMetadata& meta);
ReductionMetadata metadata_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const RatioReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace pcdfa
