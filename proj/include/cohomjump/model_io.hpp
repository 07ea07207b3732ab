#pragma once

#include <string>
#include <vector>

#include "cohomjump/deformation.hpp"
#include "cohomjump/lie_model.hpp"

namespace cohomjump {

struct ModelFile {
    LieModelPtr model;
    std::vector<Deformation> deformations;
};

// Line grammar ('#' comments):
//   model <name>
//   dim <n>
//   bracket <i> <j> -> <k> : <gaussian-rational>   (antisymmetry implied)
//   deformation <name>
//   params <id> <id> ...
//   term <polynomial in params> : <vector index> | <conj indices comma-separated>
ModelFile parse_model(const std::string& text);
std::string render_model(const ModelFile& mf);

// Bundled fixtures by name; currently "iwasawa".
std::string builtin_model_text(const std::string& name);
// A builtin name, or a path to a model file.
ModelFile load_model(const std::string& path_or_builtin);

} // namespace cohomjump
