#include "axcheck/model.hpp"

namespace axcheck {

bool is_admissible(const Universe& universe, const Signature& signature,
                   const ModelAssignment& model) {
  if (model.values.size() != signature.size()) return false;
  for (std::size_t i = 0; i < signature.size(); ++i) {
    if (!universe.admits(signature[i].type, model.values[i])) return false;
  }
  return true;
}

void require_admissible(const Universe& universe, const Signature& signature,
                        const ModelAssignment& model) {
  if (model.values.size() != signature.size()) {
    throw SignatureMismatch("model has " + std::to_string(model.values.size()) +
                            " components, signature has " + std::to_string(signature.size()));
  }
  for (std::size_t i = 0; i < signature.size(); ++i) {
    if (!universe.admits(signature[i].type, model.values[i])) {
      throw SignatureMismatch("component " + signature[i].name + " is not a value of " +
                              signature[i].type.to_string());
    }
  }
}

std::string format_model(const Universe& universe, const Signature& signature,
                         const ModelAssignment& model) {
  std::string out;
  for (std::size_t i = 0; i < signature.size() && i < model.values.size(); ++i) {
    if (i) out += "; ";
    out += signature[i].name + "=" + universe.format(signature[i].type, model.values[i]);
  }
  return out;
}

}  // namespace axcheck
