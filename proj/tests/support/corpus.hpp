#pragma once

#include <string>

#include "lombardi/document.hpp"
#include "lombardi/graph.hpp"

namespace corpus {

inline std::string path(const std::string& relative) { return std::string(LOMBARDI_CORPUS_DIR) + "/" + relative; }

inline std::string text(const std::string& relative) { return lombardi::read_text_file(path(relative)); }

inline lombardi::RotationGraph graph(const std::string& name) {
  return lombardi::load_graph(text("graphs/" + name + ".json"));
}

}  // namespace corpus
