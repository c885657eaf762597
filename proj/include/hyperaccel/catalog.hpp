#pragma once
#include "hyperaccel/chu.hpp"
#include <optional>
#include <string>
#include <vector>

namespace hyperaccel {

// One identity of the curated dataset: a closed-form constant next to the
// series that produces it.  Entries either reference a transform family (the
// displayed series is then a rearrangement of the emitted acceleration at the
// recorded assignment) or are numeric-only displays shipped without a
// certificate.
struct CatalogEntry {
    std::string id;
    std::string family_id; // empty for numeric-only entries
    Rat a, b, n0;
    std::optional<ChuSeries> displayed;
    // The printed series is usually normalized: its terms relate to the
    // emitted acceleration by emitted_j = display_scale * display_{j+shift}.
    // display_shifted marks entries where (shift, scale) != (0, 1).
    bool display_shifted = false;
    long display_shift = 0;
    Rat display_scale = 1;
    std::vector<ConstantExpr> target; // components are summed
    std::string provenance;
};

struct Catalog {
    std::vector<TransformFamily> families;
    std::vector<CatalogEntry> entries;

    const TransformFamily* family(const std::string& id) const; // nullptr if absent
    const CatalogEntry* entry(const std::string& id) const;
};

// the embedded dataset, parsed and validated once
const Catalog& builtin_catalog();
const char* builtin_catalog_text();

// Document format "hyperaccel-catalog v1": UTF-8, line-oriented, `#` comments,
// `family`/`entry` blocks closed by `end`; expressions use the same grammar as
// parse_ratfunc (summands in the symbol j).  parse_catalog only reads the
// grammar; validate_catalog derives each family's recursion and rate and
// enforces the dataset invariants (certificates verify with zero residual,
// assignments are pole-free, displays are canonical and termwise consistent
// with emission).  load_catalog does both.
Catalog parse_catalog(const std::string& text);
void validate_catalog(Catalog& c);
Catalog load_catalog(const std::string& text);
Catalog load_catalog_file(const std::string& path);

std::string serialize_catalog(const Catalog& c);

// the (a, b, n0) assignment bound to its family; entry must be family-backed
SeriesInstance instance_of(const Catalog& c, const CatalogEntry& e);

// target components evaluated and summed, correct to one ulp at `digits`
FixedDecimal reference_for(const CatalogEntry& e, long digits);

struct EntryReport {
    std::string id;
    bool pass = false;
    long digits = 0;          // leading digits agreeing with the reference
    long fraction_digits = 0; // agreement after the decimal point
    long terms = 0;           // terms consumed by the stopping rule
    std::string value;        // decimal rendering of the partial sum
    std::string error;        // nonempty when evaluation threw
};

// Sums the displayed series (or the accelerated series when no display is
// recorded) until two consecutive terms fall below 10^-(digits+5) relative to
// the running sum, then compares against reference_for.
EntryReport validate_entry(const Catalog& c, const CatalogEntry& e, long digits);

// all entries, id order preserved; parallel runs entries concurrently
std::vector<EntryReport> validate_all(const Catalog& c, long digits, bool parallel = true);

} // namespace hyperaccel
