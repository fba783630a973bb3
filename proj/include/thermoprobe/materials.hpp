#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace thermoprobe {

struct Material {
    std::string symbol;  ///< unique key within a database, e.g. "Fe"
    std::string name;    ///< e.g. "Iron"
    double kappa;        ///< average conductivity [W m^-1 degC^-1], > 0
};

/// Ordered collection of materials with symbol lookup. Later definitions
/// shadow earlier ones per symbol; each shadowing is recorded as a warning.
class MaterialsDatabase {
public:
    /// The five built-in reference materials: Al 204, Cu 386, Fe 73,
    /// Ag 419, Pb 35. Stable across runs.
    static MaterialsDatabase builtin();

    /// Throws std::out_of_range naming the symbol when absent.
    const Material& lookup(std::string_view symbol) const;

    bool contains(std::string_view symbol) const;

    /// Last-definition-wins merge; emits a warning per shadowed symbol.
    void merge(const std::vector<Material>& additions);

    const std::vector<Material>& entries() const { return entries_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    std::vector<Material> entries_;
    std::vector<std::string> warnings_;
};

/// Parses a materials CSV file: UTF-8, header "symbol,name,kappa", one
/// material per row. Throws std::runtime_error with "path:line: ..."
/// diagnostics for unreadable files, malformed rows and kappa <= 0.
std::vector<Material> parse_materials_file(const std::filesystem::path& path);

/// Parsed file merged over the built-ins (user entries shadow built-ins).
MaterialsDatabase load_materials(const std::filesystem::path& path);

}  // namespace thermoprobe
