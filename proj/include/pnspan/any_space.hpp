#pragma once

#include <filesystem>
#include <optional>
#include <string_view>
#include <variant>

#include "pnspan/counterexample.hpp"
#include "pnspan/metric.hpp"

namespace pnspan {

enum class SpaceKind { Euclidean, Hamming, Table, Counterexample };

/// "euclidean", "hamming", "table" or "counterexample"; throws ParameterError otherwise.
SpaceKind parse_space_kind(std::string_view name);

using AnySpace = std::variant<EuclideanSpace, HammingSpace, TableSpace, CounterexampleSpace>;

/// Reads a point-set file of the given kind. Counterexample spaces are
/// parametric and cannot be loaded from a file.
AnySpace load_points(const std::filesystem::path& path, SpaceKind kind, std::optional<std::size_t> dim = std::nullopt);

}  // namespace pnspan
