#pragma once

#include <json.hpp>

#include "pjack/partition.hpp"
#include "pjack/qseries.hpp"
#include "pjack/symfunc.hpp"

namespace pjack {

// Serialization helpers for reports. Exact values are rendered as decimal
// strings ("3/2"), never floats; term lists are emitted in sorted order so
// identical inputs always produce identical bytes.
nlohmann::json partition_json(const Partition& la);
nlohmann::json qseries_json(const QSeries& s);
nlohmann::json symfunc_json(const SymFunc& f);

}  // namespace pjack
