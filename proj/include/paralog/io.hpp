// Copyright 2026 paralog contributors
#pragma once

#include <string>

#include "paralog/cdlang.hpp"
#include "paralog/fca.hpp"
#include "paralog/heyting.hpp"
#include "paralog/ppd.hpp"
#include "paralog/probabilize.hpp"
#include "paralog/sorites.hpp"

// JSON file loaders for the CLI. Formats are documented in the README. All
// loaders throw IoError naming the file for anything wrong with it: missing
// or unreadable file, malformed JSON, wrong shapes, unknown enum strings.
// Semantic checks beyond that stay with each module's own validation.

namespace paralog::io {

// {"domain": [...], "atoms": {"A": "B"}, "preds": {"Psi": {"a": "T"}},
//  "less": {"a,b": "T"}, "open_world": false} -- every key optional; "less"
// keys are comma-joined individual pairs.
cdlang::Valuation load_valuation(const std::string& path);

// {"atoms": [...], "open_world": false, "situations": [{"A": "T", ...}, ...]}
// A row missing an atom reads N when open_world is set and is an error
// otherwise; unknown keys in a row are always an error.
prob::SituationEnsemble load_ensemble(const std::string& path);

// Canonical rendering of the ensemble-file format: every atom present in
// every row, two-space indentation, trailing newline.
std::string dump_ensemble(const prob::SituationEnsemble& ens);

// {"matrix": [[...4 numbers...] x4], "values": ["N","T","F","B"]} where
// matrix[i][j] = P(X = values[i], Y = values[j]). "values" is optional and
// defaults to that order; when present it must be a permutation of the four.
prob::JointTable load_joint(const std::string& path);

// {"domain": [...], "psi": {"a": "T", ...}, "less_true": [["a","b"], ...],
//  "transitive": true} -- listed pairs hold with value T, everything else
// defaults; "less_true" optional, "transitive" defaults to true.
sorites::SeriesModel load_series_model(const std::string& path);

// {"z": "b", "cases": [{"label": "high", "weight": 3}, ...]} with labels
// high | not_high | cutoff; "z" optional, weights default to 1.
sorites::SituationClassification load_classification(const std::string& path);

// {"outcomes": [...], "pos": [...], "neg": [...]}
ppd::Ppd load_ppd(const std::string& path);

// {"instances": {"moby": [1.0, 0.0], ...}} -- raw [pos, neg] weight pairs,
// kept in file order.
ppd::InstanceEvidence load_instances(const std::string& path);

// {"mode": "crisp"|"para"|"fuzzy", "objects": [...], "properties": [...],
//  "incidence": [["o1","p1","B"], ...]} with fuzzy entries
// [["o1","p1",0.75,0.25], ...]. Incidence lists exceptions only: unlisted
// cells default to F in crisp mode, N in para mode, (0,0) in fuzzy mode.
// Fuzzy files may set "grades" (chain resolution, default 4) and "residuum"
// ("goedel" | "lukasiewicz"); degrees must lie on the chain {0, 1/g, .., 1}.
fca::FormalContext load_context(const std::string& path);

// {"properties": [...], "values": [entry, ...]} where an entry is either a
// p-bit letter (unit pair) or a [pos, neg] number pair.
fca::PropertyMap load_property_map(const std::string& path);

// {"elements": ["a","b",...], "covers": [["a","b"],...]} meaning a < b is a
// covering relation; the Poset constructor closes it.
heyting::Poset load_poset(const std::string& path);

}  // namespace paralog::io
