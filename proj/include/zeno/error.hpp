#pragma once

#include <stdexcept>
#include <string>

namespace zeno {

// All library failures surface as zeno::Error carrying the originating
// module name, so the CLI can report a structured {module, message} pair.
class Error : public std::runtime_error {
public:
  Error(std::string module, const std::string& message)
      : std::runtime_error(module + ": " + message), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }

private:
  std::string module_;
};

}  // namespace zeno
