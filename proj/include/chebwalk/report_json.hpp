#pragma once

#include "chebwalk/indices.hpp"
#include "chebwalk/inequalities.hpp"
#include "chebwalk/search.hpp"
#include "chebwalk/walks.hpp"

#include <json.hpp>

namespace chebwalk {

// Object keys are emitted sorted (std::map-backed json); rationals are
// "p/q" strings and big integers decimal strings, so dumps are stable.

nlohmann::json to_json(const OrderingVerdict& v);
nlohmann::json to_json(const ChebyshevReport& r);
nlohmann::json to_json(const InequalityReport& r);
nlohmann::json to_json(const ZagrebReport& r);
nlohmann::json to_json(const ZagrebValues& z);
nlohmann::json to_json(const WalkIdentityReport& r);
nlohmann::json to_json(const WalkProfile& p);
nlohmann::json to_json(const GraphClassFlags& f);
nlohmann::json to_json(const SearchSpec& s);
nlohmann::json to_json(const SearchResult& r);

nlohmann::json rationals_json(std::span<const Rational> values);
nlohmann::json integers_json(std::span<const BigInt> values);

/// Two-space indented dump with a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace chebwalk
