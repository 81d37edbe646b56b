#pragma once

#include "weights/fincat.hpp"

#include <optional>
#include <string>

namespace weights {

/// A category file: a finite monoidal category and, optionally, an action of it.
struct CategoryFile {
    FinMonoidalCategory monoidal;
    std::optional<ActionDatum> action;
};

/// Parses and validates a category document. Throws Error naming the first problem.
CategoryFile parseCategoryFile(const std::string &text);
CategoryFile loadCategoryFile(const std::string &path);

/// The inverse of parseCategoryFile, up to the order of table entries.
std::string renderCategoryFile(const CategoryFile &file);

} // namespace weights
