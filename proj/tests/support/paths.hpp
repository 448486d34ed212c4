#pragma once

#include <string>
#include <vector>

namespace fsc::testing {

inline std::string model_path(const std::string& relative) { return std::string(FSC_MODELS_DIR) + "/" + relative; }

inline std::vector<std::string> model_paths(const std::vector<std::string>& relative) {
    std::vector<std::string> out;
    for (const auto& r : relative) out.push_back(model_path(r));
    return out;
}

/// Strict dynamic coffee machine with components and requirements.
inline std::vector<std::string> coffee_full() {
    return model_paths({"coffee/features_dynamic.fsc", "coffee/strict.fsc", "coffee/components.fsc",
                        "coffee/event_feature_link.fsc", "coffee/requirements.fsc"});
}

}  // namespace fsc::testing
