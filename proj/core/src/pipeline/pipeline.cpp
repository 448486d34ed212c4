#include "fsc/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "fsc/lang/parser.hpp"

namespace fsc {

lang::SourceSpec read_sources(const std::vector<std::string>& paths) {
    lang::SourceSpec out;
    for (const auto& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error("cannot read '" + path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        out.append(lang::parse_source(text.str(), path));
    }
    return out;
}

LoadedModel load_spec(lang::SourceSpec spec, const ResolveOptions& options) {
    LoadedModel out;
    out.feature_model = feature::find_feature_model(spec);
    out.lowered = feature::lower(spec);
    out.source = std::move(spec);
    out.model = resolve(out.lowered, options);
    return out;
}

LoadedModel load(const std::vector<std::string>& paths, const ResolveOptions& options) {
    return load_spec(read_sources(paths), options);
}

LoadedModel load_text(std::string_view text, const ResolveOptions& options, const std::string& file) {
    return load_spec(lang::parse_source(text, file), options);
}

}  // namespace fsc
