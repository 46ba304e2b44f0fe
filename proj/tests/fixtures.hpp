#pragma once

#include <string>

#include "bdsk/io.hpp"
#include "bdsk/system.hpp"

namespace fx {

inline std::string path(const std::string& name) { return std::string(BDSK_FIXTURE_DIR) + "/" + name; }

inline bdsk::BdsSpec load(const std::string& name) { return bdsk::parse_bds(bdsk::read_file(path(name + ".json"))); }

inline bdsk::BdsSpec loop() { return load("loop"); }
inline bdsk::BdsSpec dloop() { return load("dloop"); }
inline bdsk::BdsSpec swap2() { return load("swap2"); }
inline bdsk::BdsSpec chain() { return load("chain"); }
inline bdsk::BdsSpec two_loops() { return load("two_loops"); }

}  // namespace fx
