#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsc/feature/feature_model.hpp"
#include "fsc/lang/ast.hpp"
#include "fsc/model/model.hpp"
#include "fsc/model/resolve.hpp"

namespace fsc {

/// Parsed, lowered and resolved input.
struct LoadedModel {
    lang::SourceSpec source;
    lang::SourceSpec lowered;
    std::optional<feature::FeatureModelSpec> feature_model;
    Model model;
};

/// Parses each file and concatenates the declarations in order.
lang::SourceSpec read_sources(const std::vector<std::string>& paths);

LoadedModel load(const std::vector<std::string>& paths, const ResolveOptions& options = {});
LoadedModel load_text(std::string_view text, const ResolveOptions& options = {}, const std::string& file = "<input>");
LoadedModel load_spec(lang::SourceSpec spec, const ResolveOptions& options = {});

}  // namespace fsc
