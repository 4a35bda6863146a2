#pragma once

#include <json.hpp>

#include "zaremba/oracle.hpp"

namespace zaremba {

/// Insertion-ordered JSON so emitted documents are byte-stable and
/// re-serialize identically after parsing.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

/// {"schema_version": ..., "command": ..., "payload": ...}
Json envelope(const std::string& command, Json payload);

/// Fixed two-space indentation plus trailing newline; the byte format every
/// command emits and the round-trip tests pin down.
std::string dump(const Json& doc);

Json to_json(const Rational& x);
Json to_json(const ContinuedFraction& w);
Json to_json(const Certificate& c);
Json to_json(const VerificationResult& v);
Json to_json(const OracleReport& r);
Json to_json(const DecompositionChain& chain);
Json to_json(const FoldResult& f);
Json to_json(const std::vector<ScanRow>& rows);

/// Header "q,rad,min_k_canonical,constructed_k,claimed_bound" plus one line
/// per row; cells of failed rows are left empty after q.
std::string scan_to_csv(const std::vector<ScanRow>& rows);

}  // namespace zaremba
