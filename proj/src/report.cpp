#include "weylalt/report.hpp"

namespace weylalt {

void Report::absorb(const Report& other) {
  checked += other.checked;
  for (const auto& f : other.failures) failures.push_back(other.name + ": " + f);
}

std::string Report::summary() const {
  std::string out = name + ": " + (ok() ? "ok" : "FAILED") + " (" + std::to_string(checked) + " checks";
  if (!ok()) out += ", " + std::to_string(failures.size()) + " failures";
  return out + ")";
}

}  // namespace weylalt
