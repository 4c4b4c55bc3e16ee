#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "purelie/enumerate.hpp"
#include "purelie/purity.hpp"
#include "purelie/torus.hpp"

namespace purelie {

enum class Format { Json, Tsv, Text };
Format parse_format(const std::string& text);

// Reports are plain JSON objects with sorted keys and integer-only numbers, so
// parse(dump(r)) dumps back byte for byte. Indices are 0-based.
nlohmann::json enumeration_json(const RootSystem& rs, const std::vector<SmallEnoughEntry>& entries);
nlohmann::json verdict_json(const RepSpec& spec, const PurityVerdict& v);
nlohmann::json torus_json(const TorusRep& t, const TorusReport& r);

nlohmann::json bigint_json(const BigInt& x);

std::string render(const nlohmann::json& report, Format format);

}  // namespace purelie
