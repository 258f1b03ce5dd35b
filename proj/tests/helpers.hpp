#pragma once

#include <string>

#include "grsc/graph.hpp"
#include "grsc/letter_word.hpp"

#ifndef FIXTURE_DIR
#error "FIXTURE_DIR must point at the fixture directory"
#endif

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

inline grsc::LabelledGraph fixture_graph(const std::string& name) {
    return grsc::load_graph_file(fixture_path(name));
}

inline grsc::Word wd(const grsc::LabelledGraph& g, const std::string& text) {
    return grsc::parse_word(g.alphabet, text);
}
