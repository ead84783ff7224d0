#pragma once

// Serialization of results. JSON uses insertion-ordered objects so output is
// byte-stable. Arbitrary-precision integers are written as JSON numbers when
// they fit in 64 bits and as decimal strings otherwise.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sdt/chartab.hpp"
#include "sdt/dims.hpp"
#include "sdt/group.hpp"
#include "sdt/symclass.hpp"

namespace sdt {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& value);
/// {"order": 4n, "coeffs": [...]}
Json to_json(const CycloInt& value);
Json to_json(const ConjClassReport& report);
Json to_json(const CharacterTable& table);
Json to_json(const DimReport& report);
/// {n, m, character, predicted, exhaustive, orbits: [...]}; predicted is
/// null when m < 2.
Json to_json(const BasisDecision& decision, std::optional<bool> predicted);

/// Orbit listing; with a character, each orbit also carries its stabilizer
/// character sum, Delta-bar membership and orbital dimension.
Json orbits_to_json(int n, int m, const std::vector<OrbitData>& orbits, const std::vector<CharacterId>& characters);

/// Header: character,<class labels>. Cells: "{c0,c1,...} ~ re+imi".
std::string table_to_csv(const CharacterTable& table);

std::string to_pretty(const ConjClassReport& report);
std::string to_pretty(const CharacterTable& table);
std::string to_pretty(const DimReport& report);
std::string to_pretty(const BasisDecision& decision, std::optional<bool> predicted);
std::string orbits_to_pretty(int n, int m, const std::vector<OrbitData>& orbits, const std::vector<CharacterId>& characters);

/// "1.000000+0.000000i"
std::string format_complex(const CycloInt& value);

}  // namespace sdt
