#pragma once

#include "loewylab/group.hpp"

#include <string>

namespace loewylab {

// Cayley-table file: {"name": str, "order": N, "table": [[int;N];N]} with
// 0-based indices and row i, column j holding i*j; optional "labels".
// Permutation-generator file: {"degree": d, "generators": [[int;d]]} with
// one-line images, 0-based. The loader dispatches on the fields present.
GroupPtr load_group_file(const std::string& path);

std::string group_to_json(const GroupPtr& g);

struct IngestReport {
    bool ok;
    std::string detail;   // fingerprint summary or the axiom violation
    GroupPtr group;       // set when ok
};

IngestReport ingest_validate(const std::string& path);

}  // namespace loewylab
