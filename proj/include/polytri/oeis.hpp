#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace polytri {

/// Colorless triangle read by rows, as published.  Embedded prefixes cover
/// A027907 (m=2), A008287 (m=3) and A035343 (m=4).
struct OeisEntry {
    std::string id;
    int m = 0;
    int rows = 0;  // triangle rows 0 .. rows-1 flattened into `terms`
    std::vector<long long> terms;
};

const std::vector<OeisEntry>& embedded_oeis_entries();
const OeisEntry* embedded_entry(const std::string& id);

/// Parses b-file lines "<index> <value>"; '#'-prefixed lines are ignored.
/// Returns values in file order.
std::vector<long long> parse_bfile(std::istream& in);

struct OeisComparison {
    bool match = false;
    size_t compared = 0;         // number of terms compared
    size_t first_mismatch = 0;   // valid when !match
    long long expected = 0;      // reference term at the mismatch
    long long generated = 0;     // library term at the mismatch
};

/// Compares reference terms against the library triangle for the colorless
/// vector of degree m, flattened row-major with row lengths m*k + 1.
/// Compares min(reference length, terms in max_rows rows) terms.
OeisComparison compare_with_triangle(const std::vector<long long>& reference, int m,
                                     int max_rows);

/// Cache directory for fetched b-files: $POLYTRI_CACHE_DIR if set, else
/// $XDG_CACHE_HOME/polytri, else $HOME/.cache/polytri, else ./.polytri-cache.
std::string oeis_cache_dir();

/// Fetches https://oeis.org/<id>/b<digits>.txt into the cache (reusing any
/// cached copy) and returns the local path, or nullopt on network failure.
std::optional<std::string> fetch_bfile(const std::string& id, const std::string& cache_dir);

}  // namespace polytri
