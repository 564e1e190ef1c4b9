#pragma once

#include <string>

#include "comaximal/theorems.hpp"

namespace comaximal {

/// One compact JSON object (no trailing newline) per record. Completed spec
/// entries carry the full invariant set; capacity/budget entries carry only
/// identity, status and note. Keys are emitted in sorted order, so records
/// are byte-stable.
std::string atlas_record(const ClassificationReport& report);
std::string atlas_record(const ZmodCheck& check);

/// Line-delimited atlas: every spec entry in canonical order, then every
/// zmod check in list order, one JSON object per line. When the sweep was
/// aborted, records stop at the first aborted entry and a trailer line
/// {"completed": K, "status": "aborted"} is appended.
std::string to_atlas_jsonl(const SweepResult& result);

}  // namespace comaximal
