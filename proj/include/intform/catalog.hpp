#ifndef INTFORM_CATALOG_HPP
#define INTFORM_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intform/classification.hpp"

namespace intform {

/// A named surface with fully pinned invariants, its class, how many
/// blow-ups it is from its minimal model, and what is known about its
/// intersection form. even_form is recorded knowledge about the minimal
/// model's form, not something derived here.
struct CatalogEntry {
    std::string name;
    SurfaceInvariants invariants;
    SurfaceClass class_label = SurfaceClass::rational;
    std::int64_t blowups = 0;
    std::optional<LatticeClass> known_lattice;  // nullopt: Undetermined
    std::optional<bool> even_form;              // nullopt: unknown
    std::string notes;
};

struct Catalog {
    int schema = 1;
    std::vector<CatalogEntry> entries;

    const CatalogEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }
};

}  // namespace intform

#endif
