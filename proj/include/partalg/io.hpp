#pragma once

#include <string>

#include "partalg/abacus.hpp"
#include "partalg/blocks.hpp"
#include "partalg/diagram.hpp"
#include "partalg/fields.hpp"
#include "partalg/oracle.hpp"

namespace partalg {

// JSON forms (nlohmann::json under the hood, kept out of this header):
//   Partition        array of parts
//   Diagram          {"n":..., "blocks":[[...],...]}
//   MarkedAbacus     {"p":..., "beads":..., "positions":[...], "marker":...}
//   BlockDecomposition {"n":..., "p":..., "delta":..., "classes":[...]}
//   LabeledMatrix    {"n":..., "field":{"p":...,"ext":...}, "delta":"...",
//                     "rows":[...], "cols":[...], "entries":[[...]...]}
std::string to_json(const Partition& p);
std::string to_json(const Diagram& d);
std::string to_json(const MarkedAbacus& m);
std::string to_json(const BlockDecomposition& b);
std::string to_json(const LabeledMatrix& m, int n, const FieldSpec& spec);

Partition partition_from_json(const std::string& text);
Diagram diagram_from_json(const std::string& text);
MarkedAbacus abacus_from_json(const std::string& text);
BlockDecomposition blocks_from_json(const std::string& text);
LabeledMatrix labeled_matrix_from_json(const std::string& text);

// CSV with a header row of column labels (labels quoted, commas inside).
std::string to_csv(const LabeledMatrix& m);

// Bordered text table with partition labels.
std::string render_labeled_matrix(const LabeledMatrix& m);

std::string render_blocks(const BlockDecomposition& b);

}  // namespace partalg
