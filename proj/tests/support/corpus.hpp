#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "luk/proofs.hpp"

namespace luk::testing {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The bundled proof certificates, sorted by file name.
inline std::vector<std::pair<std::string, Proof>> load_certificates() {
  namespace fs = std::filesystem;
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(fs::path(LUK_DATA_DIR) / "certificates")) {
    if (entry.path().extension() == ".proof") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<std::pair<std::string, Proof>> corpus;
  for (const auto& path : paths) {
    corpus.emplace_back(path.filename().string(), parse_proof(read_file(path)));
  }
  return corpus;
}

}  // namespace luk::testing
