#pragma once

#include "schublines/certificate.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace schublines {

inline constexpr int kCertificateSchema = 1;

/// Certificate document:
///
///   {"schema": 1, "root": <node>}
///
/// with each node
///
///   {"problem": [sorted conditions], "reduced": [...], "kostka": "<decimal>",
///    "clause": "base-small-k" | "both-branches-one" | "unequal-branches",
///    "justification": "...",            // base-small-k only
///    "rearrangement": [...],            // split pair last; absent for base
///    "merged": <node>, "decremented": <node>}
///
/// Counts are decimal strings so that values beyond 64 bits survive JSON
/// readers. With `share_subtrees`, a repeated subtree is written once with
/// an "id" and referenced afterwards as {"ref": id}; otherwise every subtree
/// is expanded in place.
nlohmann::json certificate_to_json(const CertificateNode& root, bool share_subtrees = false);

std::string serialize_certificate(const CertificateNode& root, bool share_subtrees = false,
                                  int indent = 2);

/// Throws CertificateFormatError on malformed input, unknown schema, or
/// dangling references.
Certificate certificate_from_json(const nlohmann::json& doc);
Certificate parse_certificate(std::string_view text);

}  // namespace schublines
