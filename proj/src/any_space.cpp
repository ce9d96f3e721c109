#include "pnspan/any_space.hpp"

#include <string>

#include "pnspan/errors.hpp"

namespace pnspan {

SpaceKind parse_space_kind(std::string_view name) {
  if (name == "euclidean") return SpaceKind::Euclidean;
  if (name == "hamming") return SpaceKind::Hamming;
  if (name == "table") return SpaceKind::Table;
  if (name == "counterexample") return SpaceKind::Counterexample;
  throw ParameterError("unknown space kind '" + std::string(name) + "'");
}

AnySpace load_points(const std::filesystem::path& path, SpaceKind kind, std::optional<std::size_t> dim) {
  switch (kind) {
    case SpaceKind::Euclidean: return load_euclidean(path, dim);
    case SpaceKind::Hamming: return load_hamming(path);
    case SpaceKind::Table: return load_table(path);
    case SpaceKind::Counterexample: break;
  }
  throw ParameterError("counterexample spaces are built from --i and --eps, not loaded from a file");
}

}  // namespace pnspan
