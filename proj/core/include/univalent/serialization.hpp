#pragma once

#include <string>
#include <string_view>

#include "univalent/classes.hpp"

namespace univalent {

// FunctionSpec <-> JSON. Field order is fixed:
//   {"variant": ..., "atoms": [[w, angle_or_t], ...], "alpha": x, "named_id": "..."}
// with only the fields the variant uses. Two extensions:
//   "generator_atoms"  close_to_convex: atoms of the starlike g (required)
//   "theta"            named koebe_rotation: rotation angle
// Variants: named, starlike, convex, bounded_turning, close_to_convex, typically_real.
// Angles are radians; typically_real atoms are [w, t] with t in [-1, 1].

/// Pretty printed with `indent` spaces, or compact when indent < 0.
std::string to_json(const FunctionSpec& spec, int indent = -1);

/// Throws MalformedSpec for bad JSON or shapes, MissingGenerator for a close-to-convex
/// spec without generator_atoms, UnknownFunctionId and InvalidMeasure from validation.
FunctionSpec function_spec_from_json(std::string_view text);

std::string_view variant_name(const FunctionSpec& spec) noexcept;

}  // namespace univalent
