#pragma once

// JSON files for algebras, frames, PERT projects and endowed monoids.

#include <filesystem>

#include <json.hpp>

#include "ualg/core.hpp"
#include "ualg/dilatation.hpp"
#include "ualg/frame.hpp"
#include "ualg/gallery/pert.hpp"

namespace ualg::io {

using nlohmann::json;

/// Validates totality and closure of every table. Rows may come in any order.
Algebra algebra_from_json(const json& doc);
/// Rows in canonical order.
json algebra_to_json(const Algebra& alg);

Frame frame_from_json(const json& doc, const Carrier& carrier);
json frame_to_json(const Frame& frame, const Carrier& carrier);

gallery::PertProject pert_from_json(const json& doc);
json pert_to_json(const gallery::PertProject& project);

/// Delta members as value lists, product and image tables over Delta indices.
json monoid_to_json(const EndowedMonoid& monoid);

json read_json(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
void write_json(const std::filesystem::path& path, const json& doc);

}  // namespace ualg::io
