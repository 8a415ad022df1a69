#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "syncword/core.hpp"
#include "syncword/geometry.hpp"
#include "syncword/order.hpp"
#include "syncword/positivity.hpp"
#include "syncword/strategies.hpp"

namespace syncword::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kFormatVersion = "1";

enum class DocumentKind { dfa, difference_dfa, sign_function, state_order, sync_result };

const char* to_string(DocumentKind k);

/// {"format_version": "1", "kind": ..., "payload": ...}; an optional
/// top-level "comment" string is carried through untouched.
struct Document {
  DocumentKind kind = DocumentKind::dfa;
  Json payload;
  std::optional<std::string> comment;
};

/// Throws Error(parse) with line and column for malformed JSON and with the
/// offending field path for envelope problems.
Document parse_document(std::string_view text);
std::string serialize_document(const Document& doc);

Json dfa_to_json(const Automaton& a);
Automaton dfa_from_json(const Json& j, const std::string& where = "payload");

Json difference_to_json(const DifferenceAutomaton& d);
DifferenceAutomaton difference_from_json(const Json& j, const std::string& where = "payload");

Json sign_to_json(const SignFunction& f);
/// `host` is required for the geometric variant.
SignFunction sign_from_json(const Json& j, const std::vector<std::string>& alphabet,
                            const DifferenceAutomaton* host = nullptr, const std::string& where = "payload");

Json order_to_json(const StateOrder& o);
StateOrder order_from_json(const Json& j, std::size_t n, const std::string& where = "payload");

/// Words are written as symbol-name lists, so the alphabet is needed both ways.
Json outcome_to_json(const SyncOutcome& o, const std::vector<std::string>& alphabet);
SyncOutcome outcome_from_json(const Json& j, const std::vector<std::string>& alphabet,
                              const std::string& where = "payload");

/// Either kind of automaton document.
using AnyAutomaton = std::variant<Automaton, DifferenceAutomaton>;
const Automaton& base_of(const AnyAutomaton& a);

std::string write_dfa(const Automaton& a, std::optional<std::string> comment = std::nullopt);
std::string write_difference(const DifferenceAutomaton& d, std::optional<std::string> comment = std::nullopt);
std::string write_any(const AnyAutomaton& a, std::optional<std::string> comment = std::nullopt);
AnyAutomaton read_automaton(std::string_view text);
std::string write_sign(const SignFunction& f);
std::string write_order(const StateOrder& o);
std::string write_outcome(const SyncOutcome& o, const std::vector<std::string>& alphabet);

/// "-" reads standard input.
std::string read_text(const std::string& path);
/// Writes via a temporary file and rename; "-" writes standard output.
void write_text_atomic(const std::string& path, std::string_view content);

}  // namespace syncword::io
