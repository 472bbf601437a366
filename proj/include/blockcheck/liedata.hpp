#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockcheck/cycproduct.hpp"

namespace blockcheck {

enum class LieFamily { A, TwoA, B, C, D, TwoD, ThreeD4, G2, TwoG2, F4, E6, TwoE6, E7, E8 };

std::string family_name(LieFamily f);
std::optional<LieFamily> parse_family(const std::string& s);
bool family_is_exceptional(LieFamily f);

/// One finite series symbol, e.g. A_2(q^3) is {A, 2, 3}.  Exceptional families
/// carry a fixed rank; field_power j substitutes q -> q^j.
struct LieSeries {
    LieFamily family;
    unsigned rank;
    unsigned field_power = 1;
};

/// "A2", "2A3", "B4", "3D4", "E6", with "(q^j)" appended when field_power > 1.
std::string series_name(const LieSeries& s);

/// Full group order q^N * prod(q^{d_i} - eps_i) expanded into a Phi-product.
CycProduct group_order(const LieSeries& s);

/// group_order with the q-power stripped.
CycProduct order_rprime(const LieSeries& s);

/// Raw product form q^N * prod(q^{d_i} - eps_i) evaluated directly, without
/// any cyclotomic factorisation; cross-check oracle for group_order.
Int group_order_raw(const LieSeries& s, const Int& q);

struct NamedUnipotent {
    LieSeries series;
    std::string label;
    CycProduct degree;
};

/// Built-in catalog of individually named unipotent character degrees.
/// Labels are "<series>:<name>", e.g. "E6:E6[theta]", "3D4:phi_{2,1}",
/// "A2:chi^(2,1)".
const std::vector<NamedUnipotent>& named_degree_catalog();
const NamedUnipotent& named_degree(const std::string& label);

/// 2-defect of a named character at odd q: v2(|G|/deg) via the Phi-product.
long named_defect(const NamedUnipotent& u, const Int& q);

/// Optional extension records loaded from a catalog file (one JSON object per
/// line: {"series":..., "label":..., "degree":{structured CycProduct}}).
/// Each record is admitted only if its degree divides the group order as an
/// integer at q = 3.
std::vector<NamedUnipotent> load_degree_catalog(const std::string& path);

}  // namespace blockcheck
