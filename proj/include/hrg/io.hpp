#pragma once

#include <string>

#include <json.hpp>

#include "hrg/grammar.hpp"
#include "hrg/mcfg.hpp"
#include "hrg/membership.hpp"
#include "hrg/permgroup.hpp"
#include "hrg/stringgen.hpp"

namespace hrg {

using Json = nlohmann::ordered_json;

/// Parses text; syntax errors become InputError naming `source`, line and column.
Json parse_document(const std::string& text, const std::string& source = "<input>");
Json read_document(const std::string& path);
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);
/// Two-space indented, newline-terminated.
std::string dump(const Json& j);

Json to_json(const Type& t);
Json to_json(const Hypergraph& h);
Json to_json(const Grammar& g);
Json to_json(const Transformation& f);
Json to_json(const PermNFA& a);
Json to_json(const DerivationTrace& t);
Json to_json(const MembershipCertificate& c);
Json to_json(const Mcfg& g);
Json to_json(const StringGenResult& r);

// Field errors carry a path such as productions[2].rhs.edges[0].att.
Hypergraph hypergraph_from_json(const Json& j, const std::string& path = "graph");
Grammar grammar_from_json(const Json& j);
Transformation transformation_from_json(const Json& j, const std::string& path = "map");
PermNFA nfa_from_json(const Json& j);
DerivationTrace trace_from_json(const Json& j);
MembershipCertificate certificate_from_json(const Json& j);
Mcfg mcfg_from_json(const Json& j);

}  // namespace hrg
