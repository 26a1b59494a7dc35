// Checks every displayed formula carried by the library against an
// independent oracle and classifies it as match, erratum or unresolved.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace g2split {

enum class ValidationStatus { match, erratum, unresolved };
const char* to_string(ValidationStatus s);

struct ValidationEntry {
    std::string formula_id;
    std::string location;  // library function carrying the displayed form
    ValidationStatus status = ValidationStatus::unresolved;
    std::string witness;   // point at which printed and oracle were compared
    std::string printed;
    std::string oracle;
    std::size_t points = 0;
    std::size_t printed_failures = 0;
};

struct ValidationReport {
    std::uint64_t seed = 0;
    std::size_t points = 0;
    std::vector<ValidationEntry> entries;

    std::size_t count(ValidationStatus s) const;
    bool has_unresolved() const { return count(ValidationStatus::unresolved) > 0; }
    const ValidationEntry* find(const std::string& id) const;
};

// `points` random points per pointwise entry, drawn from a generator seeded
// with `seed`.
ValidationReport validate(std::uint64_t seed = 1, std::size_t points = 50);

}  // namespace g2split
