#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conic2bezier {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

/// Command-line entry point. `args` excludes the program name.
///
///   render <scene-file> [-o out.svg] [--max-phi RAD] [--nsegs N] [--tolerance T]
///   error-table [-o out.csv] [--grid N]
///   probe --phi RAD [--grid N]
///
/// Returns 0 on success, 1 for usage or validation errors, 2 for I/O errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conic2bezier
