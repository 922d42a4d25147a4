#pragma once

#include <json.hpp>
#include <string>

#include "weakembed/frontends.hpp"
#include "weakembed/instance.hpp"
#include "weakembed/oracle.hpp"
#include "weakembed/pipeline.hpp"
#include "weakembed/z2test.hpp"

namespace we {

using json = nlohmann::json;

constexpr int kVerdictSchema = 1;

Instance instance_from_json(const json& j);
json instance_to_json(const Instance& I);
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& I);

PLMap plmap_from_json(const json& j);
FlatClusteredGraph clustered_from_json(const json& j);

json witness_to_json(const Witness& w);
json verdict_to_json(const Verdict& v);
json z2_to_json(const Z2Report& r);
json oracle_to_json(const OracleResult& r);
json trace_to_json(const Trace& t);
json error_to_json(const std::exception& e);

std::string to_dot(const Instance& I, const std::string& name = "instance");

}  // namespace we
