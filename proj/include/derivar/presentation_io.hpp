#pragma once

#include <filesystem>
#include <string>

#include "derivar/presentations.hpp"

namespace derivar {

/// Loads a presentation file:
///
///   {
///     "name": "myvariety",
///     "ops": ["m"],
///     "relations": [ { "arity": 3, "expr": "m(m(x1,x2),x3) - m(x1,m(x2,x3))" } ]
///   }
///
/// Expressions must parse over the declared ops at the declared arity (2 or 3).
OperadPresentation load_presentation_file(const std::filesystem::path& path);

/// A builtin name (mag, com, as, lie, nov) or a path to a presentation file.
OperadPresentation resolve_presentation(const std::string& name_or_path);

}  // namespace derivar
