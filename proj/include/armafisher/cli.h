#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "armafisher/fisher.h"
#include "armafisher/linalg.h"

namespace armafisher::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitSingular = 4;

/// Parses a model document {"ar": [a_1, ...], "ma": [c_1, ...],
/// "sigma2": s}. The unit constant terms are implicit; sigma2 defaults to 1.
ArmaModel ParseModel(const nlohmann::json& doc);
ArmaModel LoadModelFile(const std::string& path);

nlohmann::json MatrixToJson(const Matrix& m);
Matrix MatrixFromJson(const nlohmann::json& j);

/// Compact JSON with every floating-point number printed at 17 significant
/// digits; non-finite numbers become null.
std::string DumpJson(const nlohmann::json& j);

/// Entry point behind the `armafisher` executable. `args` includes the
/// program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace armafisher::cli
