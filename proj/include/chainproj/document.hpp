#pragma once

#include <chainproj/chain.hpp>
#include <chainproj/poset.hpp>

#include <json.hpp>

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chainproj {

// On-disk poset document:
//
//   {"events":[int...], "covers":[[int,int]...],
//    "chains":[{"id":str, "events":[int...], "valuations":["p/q"...]}]}
//
// Covers are written as the transitive reduction. On import any extra
// transitively implied pairs are accepted and absorbed by the closure.
struct PosetDocument {
  Poset poset;  // frozen
  std::vector<Chain> chains;
};

nlohmann::json to_json(const Poset& poset, std::span<const Chain> chains);

/// Throws ParseError on schema violations, plus the order-core errors
/// (CycleViolation, DuplicateEvent, UnknownEvent, InvalidChain).
PosetDocument document_from_json(const nlohmann::json& doc);
PosetDocument parse_document(std::string_view text);

PosetDocument read_document(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

/// Hasse diagram: one node line per event, one edge per cover pair.
std::string to_dot(const Poset& poset);

}  // namespace chainproj
