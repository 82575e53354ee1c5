#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "koszul/io.hpp"

namespace koszul {

struct Fixture {
  std::string name;
  // file name inside the fixture directory
  std::string file;
  // quiver, poset, category, rs, fibration or toric
  std::string kind;
  Json document;
  // verdicts known to hold for this input
  Json expected;
};

const std::vector<Fixture>& bundled_fixtures();
// Throws UnknownObject for names not in the bundle.
const Fixture& fixture(const std::string& name);

// Writes every fixture plus manifest.json into dir; returns the paths written.
// Throws Error(Io) when a file cannot be written.
std::vector<std::filesystem::path> emit_fixtures(const std::filesystem::path& dir);

}  // namespace koszul
