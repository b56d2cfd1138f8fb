#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "transemi/abstract_system.hpp"
#include "transemi/partial_map.hpp"

namespace transemi {

struct TransformationsInstance {
  std::size_t base_size = 0;
  std::vector<PartialMap> maps;
  friend bool operator==(const TransformationsInstance&, const TransformationsInstance&) = default;
};

// A single JSON document describing either seed maps or an abstract system.
struct InstanceFile {
  std::string name;
  std::optional<std::uint64_t> seed;
  std::variant<TransformationsInstance, AbstractSystem> body;

  bool is_abstract() const { return std::holds_alternative<AbstractSystem>(body); }
  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

// Throws InputError with a JSON pointer or line/column for the offending spot.
InstanceFile parse_instance_text(const std::string& text, const std::string& origin = "<string>");
InstanceFile parse_instance(const std::filesystem::path& path);

std::string write_instance_text(const InstanceFile& inst);
void write_instance(const InstanceFile& inst, const std::filesystem::path& path);

}  // namespace transemi
