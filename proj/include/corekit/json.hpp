#pragma once

// JSON encodings of the corekit types (nlohmann/json).

#include <string>
#include <vector>

#include <json.hpp>

#include "corekit/abacus.hpp"
#include "corekit/bijection.hpp"
#include "corekit/catalan.hpp"
#include "corekit/partition.hpp"
#include "corekit/simulcores.hpp"

namespace corekit {

using Json = nlohmann::json;

// Partition: [8,6,5,5,3,2,2,2,1]; the empty partition is [].
inline void to_json(Json& j, const Partition& p) {
    j = Json::array();
    for (Int part : p.parts()) j.push_back(part);
}

inline void from_json(const Json& j, Partition& p) {
    if (!j.is_array()) throw InvalidArgument("partition JSON must be an array");
    std::vector<Int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InvalidArgument("partition parts must be integers");
        parts.push_back(v.get<Int>());
    }
    if (!parts.empty() && parts.back() == 0) throw InvalidArgument("partition parts must be positive");
    p = Partition(std::move(parts));
}

inline void to_json(Json& j, const Cell& c) { j = Json{{"row", c.row}, {"col", c.col}}; }

inline void from_json(const Json& j, Cell& c) {
    c.row = j.at("row").get<Int>();
    c.col = j.at("col").get<Int>();
}

// TAbacus: {"t": 8, "beads": [1,2,...]}, beads ascending.
inline Json abacus_to_json(const TAbacus& a) {
    Json beads = Json::array();
    for (Int b : a.beads().beads()) beads.push_back(b);
    return Json{{"t", a.t()}, {"beads", beads}};
}

inline TAbacus abacus_from_json(const Json& j) {
    return TAbacus(j.at("t").get<Int>(), BetaSet(j.at("beads").get<std::vector<Int>>()));
}

inline Json enumeration_to_json(const EnumerationResult& r) {
    return Json{{"moduli", r.spec.moduli()}, {"count", r.count()}, {"max_size", r.max_size()}, {"cores", r.cores}};
}

inline Json catalan_pair_to_json(const CatalanCorePair& c) {
    return Json{{"k", c.k},
                {"kappa_pair", c.kappa_pair},
                {"kappa_triple", c.kappa_triple},
                {"abacus_triple", abacus_to_json(c.abacus_triple)}};
}

inline Json quotient_to_json(const QuotientDecomposition& d) {
    return Json{{"t", d.t}, {"core", d.core}, {"quotient", d.quotient}};
}

// CellMap trace: [{"src":{"copy","slot","row","col"},"dst":{"row","col"},"region":"P1"}, ...]
inline Json cell_map_to_json(const CellMap& map) {
    Json out = Json::array();
    for (const CellMapEntry& e : map.entries) {
        out.push_back(Json{{"src",
                            {{"copy", e.source.copy},
                             {"slot", e.source.slot},
                             {"row", e.source.cell.row},
                             {"col", e.source.cell.col}}},
                           {"dst", {{"row", e.target.row}, {"col", e.target.col}}},
                           {"region", std::string(region_name(e.region))}});
    }
    return out;
}

inline CellMap cell_map_from_json(const Json& j, Int k) {
    CellMap map{k, {}};
    for (const auto& e : j) {
        const auto& src = e.at("src");
        map.entries.push_back({{src.at("copy").get<Int>(), src.at("slot").get<Int>(),
                                {src.at("row").get<Int>(), src.at("col").get<Int>()}},
                               e.at("dst").get<Cell>(),
                               parse_region(e.at("region").get<std::string>())});
    }
    return map;
}

} // namespace corekit
